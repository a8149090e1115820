"""Command-line surface: analyze, stats, topwords, domain, locate.

Exit codes: 0 success, 1 usage problem, 2 I/O or bad input file,
3 dictionary load failure.  The dictionary directory comes from --dict
or the LEXISCOPE_DICT environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .domain import DOMAIN, POTENTIAL, TooFewProjectsError, build_domain_vocabulary
from .extractor import SchemaError, extract_project, ingest_nodes
from .index import InvalidIndexError, ProjectIndex, load_index, save_index
from .lexicon import RELATIONS, LexiconError, load_lexicon
from .locator import ConceptQuery, locate_concept
from .tokenizer import split_identifier
from .vocabulary import FilterConfig, build_vocabulary, compute_stats, load_stoplist, top_k

__all__ = ["main", "entrypoint"]

DICT_ENV_VAR = "LEXISCOPE_DICT"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; this tool reserves 2 for I/O errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lexiscope",
        description="Mine vocabularies from source-code identifiers and locate concepts.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="index a source tree or node stream")
    analyze.add_argument("src", help="project source directory (or node file with --input-mode jsonl)")
    analyze.add_argument("--dict", help=f"dictionary directory (default: ${DICT_ENV_VAR})")
    analyze.add_argument("-o", "--out", required=True, help="index file to write")
    analyze.add_argument("--stoplist", help="stoplist file (default: built-in)")
    analyze.add_argument("--input-mode", choices=("java", "jsonl"), default="java")
    analyze.add_argument("--project", help="project name (default: source basename)")
    analyze.set_defaults(func=cmd_analyze)

    stats = commands.add_parser("stats", help="recognition and POS statistics of an index")
    stats.add_argument("index", help="index file")
    stats.add_argument("--format", choices=("table", "json", "csv"), default="table")
    stats.set_defaults(func=cmd_stats)

    topwords = commands.add_parser("topwords", help="most used vocabulary words of an index")
    topwords.add_argument("index", help="index file")
    topwords.add_argument("-k", type=int, default=50, help="how many words (default 50)")
    topwords.add_argument("--format", choices=("table", "json"), default="table")
    topwords.set_defaults(func=cmd_topwords)

    domain = commands.add_parser("domain", help="intersect project indexes into domain terms")
    domain.add_argument("indexes", nargs="+", help="two or more index files")
    domain.add_argument("-k", type=int, default=50, help="top-k cut per project (default 50)")
    domain.add_argument("--semantic", action="store_true", help="merge related words into support")
    domain.add_argument("--dict", help=f"dictionary directory, needed with --semantic (default: ${DICT_ENV_VAR})")
    domain.add_argument("--name", default="domain", help="domain name for the report header")
    domain.set_defaults(func=cmd_domain)

    locate = commands.add_parser("locate", help="find classes/methods matching a key-phrase")
    locate.add_argument("index", help="index file")
    locate.add_argument("phrase", help="key-phrase, e.g. 'find word form'")
    locate.add_argument("--dict", help=f"dictionary directory (default: ${DICT_ENV_VAR})")
    locate.add_argument("--depth", type=int, default=1, help="relation traversal depth (default 1)")
    locate.add_argument(
        "--relations",
        default="synonym,hypernym,hyponym",
        help="comma-separated relations to expand, or 'none' (default: all)",
    )
    locate.add_argument("--limit", type=int, default=10, help="maximum hits (default 10)")
    locate.set_defaults(func=cmd_locate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"lexiscope: error: {exc}", file=sys.stderr)
        return 1
    except (TooFewProjectsError, ValueError) as exc:
        print(f"lexiscope: error: {exc}", file=sys.stderr)
        return 1
    except LexiconError as exc:
        print(f"lexiscope: dictionary error: {exc}", file=sys.stderr)
        return 3
    except (OSError, InvalidIndexError, SchemaError) as exc:
        print(f"lexiscope: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


def _dictionary_dir(args) -> str:
    configured = args.dict or os.environ.get(DICT_ENV_VAR)
    if not configured:
        raise _UsageError(f"no dictionary directory: pass --dict or set ${DICT_ENV_VAR}")
    return configured


def cmd_analyze(args) -> int:
    lexicon = load_lexicon(_dictionary_dir(args))
    if args.stoplist:
        filter_config = FilterConfig(stoplist=load_stoplist(args.stoplist))
    else:
        filter_config = FilterConfig.default()

    if args.input_mode == "jsonl":
        with open(args.src, encoding="utf-8") as stream:
            nodes = ingest_nodes(stream)
        file_count = len({node.file_path for node in nodes})
        project = args.project or Path(args.src).stem
    else:
        nodes, file_count = extract_project(args.src)
        project = args.project or Path(args.src).name

    vocabulary = build_vocabulary(
        nodes, lexicon, filter_config, project_name=project, file_count=file_count
    )
    index = ProjectIndex.from_vocabulary(nodes, vocabulary)
    save_index(index, args.out)
    print(
        f"{project}: {file_count} files, {len(nodes)} nodes, "
        f"{len(vocabulary.entries)} distinct words -> {args.out}"
    )
    return 0


_STATS_ROWS = (
    ("files", "file_count", None),
    ("distinct words", "total_words", None),
    ("recognized", "recognized", "recognized_pct"),
    ("unrecognized", "unrecognized", "unrecognized_pct"),
    ("nouns", "nouns", "noun_pct"),
    ("verbs", "verbs", "verb_pct"),
    ("adjectives", "adjectives", "adjective_pct"),
    ("adverbs", "adverbs", "adverb_pct"),
)


def cmd_stats(args) -> int:
    stats = compute_stats(load_index(args.index).vocabulary_view())
    if args.format == "json":
        document = {}
        for label, count_attr, pct_attr in _STATS_ROWS:
            key = label.replace(" ", "_")
            document[key] = getattr(stats, count_attr)
            if pct_attr:
                document[key + "_pct"] = getattr(stats, pct_attr)
        print(json.dumps(document, indent=2))
    elif args.format == "csv":
        print("metric,count,percent")
        for label, count_attr, pct_attr in _STATS_ROWS:
            pct = "" if pct_attr is None else getattr(stats, pct_attr)
            print(f"{label.replace(' ', '_')},{getattr(stats, count_attr)},{pct}")
    else:
        for label, count_attr, pct_attr in _STATS_ROWS:
            line = f"{label:<16}{getattr(stats, count_attr):>8}"
            if pct_attr is not None:
                line += f" ({getattr(stats, pct_attr)}%)"
            print(line)
    return 0


def cmd_topwords(args) -> int:
    vocabulary = load_index(args.index).vocabulary_view()
    ranked = top_k(vocabulary, args.k)
    if args.format == "json":
        document = [
            {
                "rank": position,
                "word": entry.word,
                "total": entry.total,
                "pos": str(entry.pos) if entry.pos else None,
                "counts": entry.counts_by_kind,
            }
            for position, entry in enumerate(ranked, start=1)
        ]
        print(json.dumps(document, indent=2))
    else:
        print(f"{'rank':>4} {'word':<24}{'total':>8}  {'pos':<10}"
              f"{'class':>7}{'method':>7}{'param':>7}{'field':>7}")
        for position, entry in enumerate(ranked, start=1):
            counts = entry.counts_by_kind
            print(
                f"{position:>4} {entry.word:<24}{entry.total:>8}  "
                f"{str(entry.pos) if entry.pos else '-':<10}"
                f"{counts['class']:>7}{counts['method']:>7}"
                f"{counts['parameter']:>7}{counts['field']:>7}"
            )
    return 0


def _marker(word: str, status: str) -> str:
    if status == DOMAIN:
        return f"**{word}**"
    if status == POTENTIAL:
        return f"*{word}*"
    return word


def cmd_domain(args) -> int:
    if len(args.indexes) < 2:
        raise _UsageError("need at least 2 index files")
    vocabularies = [load_index(path).vocabulary_view() for path in args.indexes]
    lexicon = None
    if args.semantic:
        lexicon = load_lexicon(_dictionary_dir(args))
    result = build_domain_vocabulary(
        vocabularies, args.k, semantic=args.semantic, lexicon=lexicon, domain_name=args.name
    )

    projects = ", ".join(result.project_names)
    print(f"{result.domain_name}: projects [{projects}]  k={result.k}  "
          f"semantic={'on' if args.semantic else 'off'}")
    width = max((len(_marker(t.word, t.status)) for t in result.terms), default=0)
    for term in result.terms:
        cells = []
        for name in result.project_names:
            cell = f"{name}={term.per_project_totals.get(name, 0)}"
            if name in term.evidence:
                matched, relation = term.evidence[name]
                cell += f"[{matched},{relation}]"
            cells.append(cell)
        row = (
            f"{_marker(term.word, term.status):<{width}}  "
            f"{term.support_count}/{len(result.project_names)}  "
            + " ".join(cells)
        )
        print(row)
    return 0


def _parse_relations(raw: str) -> frozenset[str]:
    if raw.strip().lower() in ("none", ""):
        return frozenset()
    relations = frozenset(part.strip().lower() for part in raw.split(","))
    unknown = relations - RELATIONS
    if unknown:
        raise _UsageError(f"unknown relations: {', '.join(sorted(unknown))}")
    return relations


def _format_score(score: Fraction) -> str:
    if score.denominator == 1:
        return str(score.numerator)
    return f"{float(score):g}"


def cmd_locate(args) -> int:
    keywords = [
        token for chunk in args.phrase.split() for token in split_identifier(chunk)
    ]
    if not keywords:
        raise _UsageError("empty phrase")
    index = load_index(args.index)
    lexicon = load_lexicon(_dictionary_dir(args))
    query = ConceptQuery(tuple(keywords), relations=_parse_relations(args.relations), depth=args.depth)
    matches = locate_concept(index.nodes, query, lexicon, limit=args.limit)
    if not matches:
        print("no matches")
        return 0
    by_id = {node.id: node for node in index.nodes}
    for match in matches:
        node = by_id[match.node_id]
        print(f"{node.file_path}:{node.line} {node.kind} {node.name} {_format_score(match.score)}")
        for keyword in query.keywords:
            matched, relation, distance = match.per_keyword[keyword]
            print(f"  {keyword}→{matched} ({relation},{distance})")
    return 0
