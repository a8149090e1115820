"""Persist one analyzed project as a version-tagged JSON index file.

The index is a single human-readable document: project metadata, the
extracted nodes, and the vocabulary entries (sorted by word).  Writing is
byte-deterministic for identical inputs, and loading re-validates every
structural invariant, so round-trips are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .extractor import IDENTIFIER_RE, KINDS, SourceNode
from .lexicon import PosTag
from .vocabulary import ProjectVocabulary, VocabularyEntry

__all__ = ["FORMAT_VERSION", "InvalidIndexError", "ProjectIndex", "load_index", "save_index"]

FORMAT_VERSION = 1


class InvalidIndexError(Exception):
    """The index file is unreadable or violates the schema."""


@dataclass
class ProjectIndex:
    project_name: str
    file_count: int
    nodes: list[SourceNode]
    vocabulary: list[VocabularyEntry]

    @classmethod
    def from_vocabulary(
        cls, nodes: list[SourceNode], vocabulary: ProjectVocabulary
    ) -> "ProjectIndex":
        entries = sorted(vocabulary.entries.values(), key=lambda e: e.word)
        return cls(vocabulary.project_name, vocabulary.file_count, nodes, entries)

    def vocabulary_view(self) -> ProjectVocabulary:
        return ProjectVocabulary(
            self.project_name, self.file_count, {e.word: e for e in self.vocabulary}
        )


def save_index(index: ProjectIndex, path: str | Path) -> None:
    document = {
        "formatVersion": FORMAT_VERSION,
        "projectName": index.project_name,
        "fileCount": index.file_count,
        "nodes": [
            {
                "id": node.id,
                "kind": node.kind,
                "name": node.name,
                "file": node.file_path,
                "line": node.line,
                "parent": node.parent_id,
            }
            for node in index.nodes
        ],
        "vocabulary": [
            {
                "word": entry.word,
                "recognized": entry.recognized,
                "pos": str(entry.pos) if entry.pos is not None else None,
                "total": entry.total,
                "counts": {kind: entry.counts_by_kind.get(kind, 0) for kind in KINDS},
            }
            for entry in index.vocabulary
        ],
    }
    Path(path).write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")


def load_index(path: str | Path) -> ProjectIndex:
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidIndexError(f"cannot read index {path}: {exc}") from exc

    if not isinstance(document, dict) or document.get("formatVersion") != FORMAT_VERSION:
        raise InvalidIndexError(f"unsupported index format in {path}")
    project_name = document.get("projectName")
    file_count = document.get("fileCount")
    if not isinstance(project_name, str) or not isinstance(file_count, int) or file_count < 0:
        raise InvalidIndexError(f"bad project metadata in {path}")

    nodes = []
    for position, raw in enumerate(_expect_list(document, "nodes", path)):
        node = _parse_node(raw, position, path)
        nodes.append(node)

    vocabulary = []
    seen_words = set()
    for raw in _expect_list(document, "vocabulary", path):
        entry = _parse_entry(raw, path)
        if entry.word in seen_words:
            raise InvalidIndexError(f"duplicate vocabulary word {entry.word!r} in {path}")
        seen_words.add(entry.word)
        vocabulary.append(entry)

    return ProjectIndex(project_name, file_count, nodes, vocabulary)


def _expect_list(document: dict, key: str, path) -> list:
    value = document.get(key)
    if not isinstance(value, list):
        raise InvalidIndexError(f"missing {key} list in {path}")
    return value


def _parse_node(raw, position: int, path) -> SourceNode:
    if not isinstance(raw, dict):
        raise InvalidIndexError(f"node {position} is not an object in {path}")
    if raw.get("id") != position:
        raise InvalidIndexError(f"node ids must be dense from 0 (node {position}) in {path}")
    kind = raw.get("kind")
    name = raw.get("name")
    file_path = raw.get("file")
    line = raw.get("line")
    parent = raw.get("parent")
    if kind not in KINDS:
        raise InvalidIndexError(f"node {position}: bad kind {kind!r} in {path}")
    if not isinstance(name, str) or not IDENTIFIER_RE.fullmatch(name):
        raise InvalidIndexError(f"node {position}: bad name {name!r} in {path}")
    if not isinstance(file_path, str) or not isinstance(line, int) or line < 1:
        raise InvalidIndexError(f"node {position}: bad location in {path}")
    if parent is not None and (
        not isinstance(parent, int) or isinstance(parent, bool) or not 0 <= parent < position
    ):
        raise InvalidIndexError(f"node {position}: parent must reference an earlier node in {path}")
    return SourceNode(position, kind, name, file_path, line, parent)


def _parse_entry(raw, path) -> VocabularyEntry:
    if not isinstance(raw, dict):
        raise InvalidIndexError(f"vocabulary entry is not an object in {path}")
    word = raw.get("word")
    recognized = raw.get("recognized")
    pos_name = raw.get("pos")
    total = raw.get("total")
    counts = raw.get("counts")
    if not isinstance(word, str) or not word:
        raise InvalidIndexError(f"bad vocabulary word {word!r} in {path}")
    if not isinstance(recognized, bool):
        raise InvalidIndexError(f"{word}: recognized must be a boolean in {path}")
    if pos_name is None:
        pos = None
    else:
        try:
            pos = PosTag[str(pos_name).upper()]
        except KeyError as exc:
            raise InvalidIndexError(f"{word}: unknown pos {pos_name!r} in {path}") from exc
    if recognized != (pos is not None):
        raise InvalidIndexError(f"{word}: recognized flag disagrees with pos in {path}")
    if not isinstance(counts, dict) or set(counts) != set(KINDS):
        raise InvalidIndexError(f"{word}: counts must cover all node kinds in {path}")
    by_kind = {}
    for kind in KINDS:
        value = counts[kind]
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidIndexError(f"{word}: bad count for {kind} in {path}")
        by_kind[kind] = value
    if not isinstance(total, int) or total != sum(by_kind.values()) or total < 1:
        raise InvalidIndexError(f"{word}: total must equal the sum of counts in {path}")
    return VocabularyEntry(word, recognized, pos, total, by_kind)
