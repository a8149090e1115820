"""Load a WordNet-format dictionary and answer word queries against it.

Works with the WordNet 3.x plain-text database layout: an ``index.<pos>``
and ``data.<pos>`` file per part of speech, plus optional ``<pos>.exc``
morphology exception lists.  Only the pieces this toolkit needs are kept:
lemmas, sense order, tag counts, synset membership, and the hypernym /
hyponym pointer graph.  Glosses, sense keys, verb frames and every other
pointer type are parsed past and dropped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "PosTag",
    "Synset",
    "LexiconEntry",
    "Lexicon",
    "LexiconError",
    "MissingFileError",
    "MalformedLineError",
    "SELF",
    "SYNONYM",
    "HYPERNYM",
    "HYPONYM",
    "RELATIONS",
    "load_lexicon",
    "lookup",
    "lemmatize",
    "classify",
    "primary_pos",
    "related_words",
]


class PosTag(enum.IntEnum):
    """The four parts of speech; numeric order doubles as tie-break rank."""

    NOUN = 1
    VERB = 2
    ADJECTIVE = 3
    ADVERB = 4

    def __str__(self) -> str:
        return self.name.lower()


# File suffix and index/data pos character per tag.
_POS_FILES = {
    PosTag.NOUN: "noun",
    PosTag.VERB: "verb",
    PosTag.ADJECTIVE: "adj",
    PosTag.ADVERB: "adv",
}

# 's' is the satellite-adjective synset type; it folds into ADJECTIVE.
_POS_CHARS = {
    "n": PosTag.NOUN,
    "v": PosTag.VERB,
    "a": PosTag.ADJECTIVE,
    "s": PosTag.ADJECTIVE,
    "r": PosTag.ADVERB,
}

_HYPERNYM_PTRS = ("@", "@i")
_HYPONYM_PTRS = ("~", "~i")

# Relation labels used throughout the toolkit.
SELF = "self"
SYNONYM = "synonym"
HYPERNYM = "hypernym"
HYPONYM = "hyponym"
RELATIONS = frozenset({SYNONYM, HYPERNYM, HYPONYM})

# Morphy-style suffix detachments: (suffix, replacement) tried in order.
_DETACHMENTS: dict[PosTag, tuple[tuple[str, str], ...]] = {
    PosTag.NOUN: (
        ("s", ""),
        ("ses", "s"),
        ("xes", "x"),
        ("zes", "z"),
        ("ches", "ch"),
        ("shes", "sh"),
        ("ies", "y"),
    ),
    PosTag.VERB: (
        ("s", ""),
        ("ies", "y"),
        ("es", "e"),
        ("es", ""),
        ("ed", "e"),
        ("ed", ""),
        ("ing", "e"),
        ("ing", ""),
    ),
    PosTag.ADJECTIVE: (
        ("er", ""),
        ("est", ""),
        ("er", "e"),
        ("est", "e"),
    ),
    PosTag.ADVERB: (),
}

_VOWELS = set("aeiou")

SynsetId = tuple[int, PosTag]


class LexiconError(Exception):
    """Base error for dictionary loading problems."""


class MissingFileError(LexiconError):
    """A required index/data file is absent from the dictionary directory."""


class MalformedLineError(LexiconError):
    """A dictionary file line could not be parsed; loading aborts."""

    def __init__(self, file_name: str, line_number: int, reason: str):
        super().__init__(f"{file_name}, line {line_number}: {reason}")
        self.file_name = file_name
        self.line_number = line_number
        self.reason = reason


@dataclass(frozen=True)
class Synset:
    """One synonym set: its member lemmas and is-a pointers."""

    id: SynsetId
    lemmas: tuple[str, ...]
    hypernym_ids: tuple[SynsetId, ...]
    hyponym_ids: tuple[SynsetId, ...]


@dataclass(frozen=True)
class LexiconEntry:
    """All senses of one index lemma, grouped by part of speech."""

    lemma: str
    senses_by_pos: dict[PosTag, tuple[SynsetId, ...]]
    tag_count_by_pos: dict[PosTag, int]

    def pos_tags(self) -> list[PosTag]:
        return sorted(self.senses_by_pos)


@dataclass(frozen=True)
class Lexicon:
    """An immutable loaded dictionary; safe to share between threads."""

    entries: dict[str, LexiconEntry]
    synsets: dict[SynsetId, Synset]
    source_dir: str
    synset_counts: dict[PosTag, int]
    exceptions: dict[PosTag, dict[str, tuple[str, ...]]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)


def load_lexicon(dictionary_directory: str | Path) -> Lexicon:
    """Parse index/data (and optional .exc) files into a Lexicon.

    Raises MissingFileError if any index/data file is absent and
    MalformedLineError (with file and line number) on the first bad line.
    """
    root = Path(dictionary_directory)
    for tag, suffix in _POS_FILES.items():
        for prefix in ("index", "data"):
            if not (root / f"{prefix}.{suffix}").is_file():
                raise MissingFileError(f"missing {prefix}.{suffix} in {root}")

    synsets: dict[SynsetId, Synset] = {}
    synset_counts: dict[PosTag, int] = {tag: 0 for tag in PosTag}
    raw_senses: dict[str, dict[PosTag, tuple[SynsetId, ...]]] = {}
    raw_counts: dict[str, dict[PosTag, int]] = {}

    for tag, suffix in _POS_FILES.items():
        data_name = f"data.{suffix}"
        for line_no, fields in _dict_lines(root / data_name):
            synset = _parse_data_line(fields, data_name, line_no)
            if synset.id in synsets:
                raise MalformedLineError(data_name, line_no, f"duplicate synset offset {synset.id[0]}")
            synsets[synset.id] = synset
            synset_counts[synset.id[1]] += 1

        index_name = f"index.{suffix}"
        for line_no, fields in _dict_lines(root / index_name):
            lemma, pos, offsets, tag_count = _parse_index_line(fields, index_name, line_no)
            ids = tuple((offset, pos) for offset in offsets)
            for synset_id in ids:
                if synset_id not in synsets:
                    raise MalformedLineError(
                        index_name, line_no, f"offset {synset_id[0]} not present in {data_name}"
                    )
            raw_senses.setdefault(lemma, {})[pos] = ids
            raw_counts.setdefault(lemma, {})[pos] = tag_count

    # Pointer targets must resolve; data files carry both directions.
    for synset in synsets.values():
        for target in synset.hypernym_ids + synset.hyponym_ids:
            if target not in synsets:
                raise MalformedLineError(
                    f"data.{_POS_FILES[synset.id[1]]}", 0,
                    f"pointer target {target[0]} ({target[1]}) unresolved",
                )

    entries = {
        lemma: LexiconEntry(lemma, senses, raw_counts[lemma])
        for lemma, senses in raw_senses.items()
    }

    exceptions: dict[PosTag, dict[str, tuple[str, ...]]] = {}
    for tag, suffix in _POS_FILES.items():
        exc_path = root / f"{suffix}.exc"
        if exc_path.is_file():
            exceptions[tag] = _parse_exceptions(exc_path)

    return Lexicon(entries, synsets, str(root), synset_counts, exceptions)


def _dict_lines(path: Path):
    """Yield (line_number, fields) for real content lines of a dict file.

    WordNet files open with a license block whose lines start with spaces;
    those and blank lines are skipped.
    """
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip() or line.startswith(" "):
                continue
            yield line_no, line.split()


def _parse_index_line(fields: list[str], file_name: str, line_no: int):
    # lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt tagsense_cnt offset...
    try:
        lemma = fields[0].lower()
        pos = _POS_CHARS[fields[1]]
        synset_cnt = int(fields[2])
        p_cnt = int(fields[3])
        rest = fields[4 + p_cnt:]
        tag_count = int(rest[1])
        offsets = [int(off) for off in rest[2 : 2 + synset_cnt]]
        if len(offsets) != synset_cnt or len(rest) != 2 + synset_cnt:
            raise ValueError("field count mismatch")
    except (IndexError, KeyError, ValueError) as exc:
        raise MalformedLineError(file_name, line_no, f"bad index line ({exc})") from exc
    if not lemma:
        raise MalformedLineError(file_name, line_no, "empty lemma")
    return lemma, pos, offsets, tag_count


def _parse_data_line(fields: list[str], file_name: str, line_no: int) -> Synset:
    # offset lex_filenum ss_type w_cnt (word lex_id)+ p_cnt ptr* ... | gloss
    try:
        if "|" in fields:
            fields = fields[: fields.index("|")]
        offset = int(fields[0])
        pos = _POS_CHARS[fields[2]]
        w_cnt = int(fields[3], 16)
        lemmas = tuple(
            _strip_marker(fields[4 + 2 * i]).lower() for i in range(w_cnt)
        )
        cursor = 4 + 2 * w_cnt
        p_cnt = int(fields[cursor])
        hypernyms: list[SynsetId] = []
        hyponyms: list[SynsetId] = []
        for i in range(p_cnt):
            symbol, target, target_pos, _ = fields[cursor + 1 + 4 * i : cursor + 5 + 4 * i]
            target_id = (int(target), _POS_CHARS[target_pos])
            if symbol in _HYPERNYM_PTRS:
                hypernyms.append(target_id)
            elif symbol in _HYPONYM_PTRS:
                hyponyms.append(target_id)
        if not lemmas:
            raise ValueError("synset with no words")
    except (IndexError, KeyError, ValueError) as exc:
        raise MalformedLineError(file_name, line_no, f"bad data line ({exc})") from exc
    return Synset((offset, pos), lemmas, tuple(hypernyms), tuple(hyponyms))


def _strip_marker(word: str) -> str:
    # Adjective entries may carry a syntactic marker suffix: galore(ip)
    if word.endswith(")") and "(" in word:
        return word[: word.index("(")]
    return word


def _parse_exceptions(path: Path) -> dict[str, tuple[str, ...]]:
    table: dict[str, tuple[str, ...]] = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            parts = line.split()
            if len(parts) >= 2:
                table[parts[0].lower()] = tuple(p.lower() for p in parts[1:])
    return table


def lookup(lexicon: Lexicon, word: str) -> LexiconEntry | None:
    """Exact index-lemma lookup; no morphology."""
    return lexicon.entries.get(word)


def lemmatize(lexicon: Lexicon, token: str) -> list[tuple[str, PosTag]]:
    """All (lemma, pos) readings of a token, exact matches first.

    Candidates come from the exact index entry, the exception lists, and
    the suffix-detachment rules; for bare -ing/-ed detachment a doubled
    final consonant is also undone (running -> runn -> run).  An empty
    list means the token is unrecognized.
    """
    candidates: list[tuple[str, PosTag]] = []
    seen: set[tuple[str, PosTag]] = set()

    def push(lemma: str, pos: PosTag) -> None:
        entry = lexicon.entries.get(lemma)
        if entry is None or pos not in entry.senses_by_pos:
            return
        if (lemma, pos) not in seen:
            seen.add((lemma, pos))
            candidates.append((lemma, pos))

    exact = lexicon.entries.get(token)
    if exact is not None:
        for pos in exact.pos_tags():
            push(token, pos)

    for pos in PosTag:
        for lemma in lexicon.exceptions.get(pos, {}).get(token, ()):
            push(lemma, pos)

    for pos in PosTag:
        for suffix, replacement in _DETACHMENTS[pos]:
            if not token.endswith(suffix) or len(token) <= len(suffix):
                continue
            stem = token[: -len(suffix)] + replacement
            push(stem, pos)
            if suffix in ("ing", "ed") and not replacement and _ends_doubled(stem):
                push(stem[:-1], pos)

    return candidates


def _ends_doubled(stem: str) -> bool:
    return len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS


def classify(lexicon: Lexicon, word: str) -> tuple[str, PosTag] | None:
    """Best (lemma, pos) reading of a word, or None if unrecognized.

    The winning part of speech is the one whose best candidate has the
    highest tag count; ties go to the lower PosTag (noun first).
    """
    best: dict[PosTag, tuple[int, str]] = {}
    for lemma, pos in lemmatize(lexicon, word.lower()):
        count = lexicon.entries[lemma].tag_count_by_pos.get(pos, 0)
        if pos not in best or count > best[pos][0]:
            best[pos] = (count, lemma)
    if not best:
        return None
    pos = max(best, key=lambda tag: (best[tag][0], -tag))
    return best[pos][1], pos


def primary_pos(lexicon: Lexicon, word: str) -> PosTag | None:
    """The single part of speech a recognized word is counted under."""
    found = classify(lexicon, word)
    return None if found is None else found[1]


def related_words(
    lexicon: Lexicon,
    word: str,
    relations: frozenset[str] | set[str],
    depth: int,
) -> set[tuple[str, str, int]]:
    """Words related to `word`, as (word, relation, distance) triples.

    Always contains (word, "self", 0).  Synonyms are co-members of any
    synset of the word (distance 1); hypernyms/hyponyms are lemmas of
    synsets reached by up to `depth` pointer hops.  Every relation obeys
    distance <= depth, so depth 0 yields only the self entry.  Seeds come
    from every part of speech the word has.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    result: set[tuple[str, str, int]] = {(word, SELF, 0)}
    entry = lexicon.entries.get(word)
    if entry is None or depth == 0:
        return result

    seeds = [sid for pos in entry.pos_tags() for sid in entry.senses_by_pos[pos]]

    if SYNONYM in relations:
        for sid in seeds:
            for lemma in lexicon.synsets[sid].lemmas:
                if lemma != word:
                    result.add((lemma, SYNONYM, 1))

    for relation, attr in ((HYPERNYM, "hypernym_ids"), (HYPONYM, "hyponym_ids")):
        if relation not in relations:
            continue
        frontier = list(seeds)
        visited = set(seeds)
        for distance in range(1, depth + 1):
            reached: list[SynsetId] = []
            for sid in frontier:
                for target in getattr(lexicon.synsets[sid], attr):
                    if target not in visited:
                        visited.add(target)
                        reached.append(target)
            for target in reached:
                for lemma in lexicon.synsets[target].lemmas:
                    result.add((lemma, relation, distance))
            frontier = reached
            if not frontier:
                break

    return result
