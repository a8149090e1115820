"""Locate the classes and methods that encode a key-phrase.

Each keyword expands through the lexicon into related words; a class or
method matches only when every keyword (or one of its related words)
occurs among the tokens of the candidate's identifier scope.  A method's
scope is its name plus its parameter names; a class's scope is its name
plus its field names.  Matches are scored by how direct each keyword's
match was: an exact occurrence outranks a synonym, which outranks an
is-a relative, and longer pointer chains count for less.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .extractor import SourceNode
from .lexicon import (
    HYPERNYM,
    HYPONYM,
    RELATIONS,
    SELF,
    SYNONYM,
    Lexicon,
    lemmatize,
    related_words,
)
from .tokenizer import split_identifier

__all__ = [
    "ConceptQuery",
    "ConceptMatch",
    "ScopeError",
    "RELATION_WEIGHTS",
    "expand_query",
    "node_scope",
    "locate_concept",
]

# Match weights per relation; hypernym/hyponym weight is divided by the
# pointer distance.  Any monotone weighting with self >= others preserves
# the exact-match-first ranking guarantee; these are the defaults.
RELATION_WEIGHTS: dict[str, Fraction] = {
    SELF: Fraction(3),
    SYNONYM: Fraction(2),
    HYPERNYM: Fraction(1),
    HYPONYM: Fraction(1),
}

_RELATION_RANK = {SELF: 0, SYNONYM: 1, HYPERNYM: 2, HYPONYM: 3}

_KIND_RANK = {"method": 0, "class": 1}


class ScopeError(ValueError):
    """Scope was requested for a node kind that has none."""


@dataclass(frozen=True)
class ConceptQuery:
    """A key-phrase broken into lowercase keywords, with expansion policy."""

    keywords: tuple[str, ...]
    relations: frozenset[str] = RELATIONS
    depth: int = 1

    def __post_init__(self):
        if not self.keywords:
            raise ValueError("query needs at least one keyword")
        if any(not keyword.isalpha() or not keyword.islower() for keyword in self.keywords):
            raise ValueError("keywords must be lowercase alphabetic words")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")


@dataclass(frozen=True)
class ConceptMatch:
    """One located candidate with per-keyword match evidence."""

    node_id: int
    kind: str
    score: Fraction
    per_keyword: dict[str, tuple[str, str, int]] = field(compare=False)


def match_weight(relation: str, distance: int) -> Fraction:
    if relation in (HYPERNYM, HYPONYM):
        return RELATION_WEIGHTS[relation] / distance
    return RELATION_WEIGHTS[relation]


def expand_query(
    query: ConceptQuery, lexicon: Lexicon
) -> dict[str, set[tuple[str, str, int]]]:
    """Related-word sets per keyword; the keyword itself always included.

    Keywords are lemmatized first, so an inflected query expands through
    its dictionary forms as well.
    """
    expansions: dict[str, set[tuple[str, str, int]]] = {}
    for keyword in query.keywords:
        expansion = set(related_words(lexicon, keyword, query.relations, query.depth))
        for lemma, _pos in lemmatize(lexicon, keyword):
            if lemma != keyword:
                expansion |= related_words(lexicon, lemma, query.relations, query.depth)
        expansions[keyword] = expansion
    return expansions


def node_scope(
    node: SourceNode, all_nodes: list[SourceNode], lexicon: Lexicon
) -> set[str]:
    """Lemmatized identifier tokens of a class or method candidate.

    Every token contributes its raw form plus all of its lemma readings.
    Methods pull in their parameter names; classes pull in their fields.
    """
    if node.kind == "method":
        child_kind = "parameter"
    elif node.kind == "class":
        child_kind = "field"
    else:
        raise ScopeError(f"no scope for {node.kind} nodes")

    names = [node.name] + [
        child.name
        for child in all_nodes
        if child.parent_id == node.id and child.kind == child_kind
    ]
    scope: set[str] = set()
    for name in names:
        for token in split_identifier(name):
            scope.add(token)
            for lemma, _pos in lemmatize(lexicon, token):
                scope.add(lemma)
    return scope


def locate_concept(
    nodes: list[SourceNode],
    query: ConceptQuery,
    lexicon: Lexicon,
    limit: int = 10,
) -> list[ConceptMatch]:
    """Rank candidates where every keyword matches the identifier scope."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    expansions = expand_query(query, lexicon)

    matches: list[tuple] = []
    for node in nodes:
        if node.kind not in _KIND_RANK:
            continue
        scope = node_scope(node, nodes, lexicon)
        per_keyword: dict[str, tuple[str, str, int]] = {}
        for keyword in query.keywords:
            best: tuple | None = None
            for word, relation, distance in expansions[keyword]:
                if word not in scope:
                    continue
                key = (
                    -match_weight(relation, distance),
                    _RELATION_RANK[relation],
                    distance,
                    word,
                )
                if best is None or key < best[0]:
                    best = (key, (word, relation, distance))
            if best is None:
                per_keyword = {}
                break
            per_keyword[keyword] = best[1]
        if not per_keyword:
            continue
        score = sum(
            (match_weight(rel, dist) for _, rel, dist in per_keyword.values()),
            Fraction(0),
        )
        matches.append(
            (
                (-score, _KIND_RANK[node.kind], node.file_path, node.line, node.id),
                ConceptMatch(node.id, node.kind, score, per_keyword),
            )
        )

    matches.sort(key=lambda pair: pair[0])
    return [match for _, match in matches[:limit]]
