"""lexiscope: mine software vocabularies from identifiers, locate concepts.

The pipeline: extract declaration nodes from Java sources (or a neutral
JSONL stream), split their names into word tokens, classify tokens against
a WordNet-format dictionary into a per-project vocabulary, intersect
projects into a domain vocabulary, and search code for key-phrases
expanded through lexical relations.
"""

from .domain import (
    DomainTermEntry,
    DomainVocabulary,
    TooFewProjectsError,
    build_domain_vocabulary,
    domain_term_percentage,
)
from .extractor import (
    ScanDiagnostics,
    SchemaError,
    SourceNode,
    extract_java,
    extract_project,
    ingest_nodes,
)
from .index import InvalidIndexError, ProjectIndex, load_index, save_index
from .lexicon import (
    Lexicon,
    LexiconEntry,
    LexiconError,
    MalformedLineError,
    MissingFileError,
    PosTag,
    Synset,
    classify,
    lemmatize,
    load_lexicon,
    lookup,
    primary_pos,
    related_words,
)
from .locator import (
    ConceptMatch,
    ConceptQuery,
    ScopeError,
    expand_query,
    locate_concept,
    node_scope,
)
from .tokenizer import Token, split_identifier
from .vocabulary import (
    FilterConfig,
    ProjectStats,
    ProjectVocabulary,
    VocabularyEntry,
    build_vocabulary,
    compute_stats,
    default_stoplist,
    load_stoplist,
    top_k,
)

__version__ = "0.1.0"

__all__ = [
    "PosTag",
    "Synset",
    "LexiconEntry",
    "Lexicon",
    "LexiconError",
    "MissingFileError",
    "MalformedLineError",
    "load_lexicon",
    "lookup",
    "lemmatize",
    "classify",
    "primary_pos",
    "related_words",
    "SourceNode",
    "ScanDiagnostics",
    "SchemaError",
    "extract_java",
    "extract_project",
    "ingest_nodes",
    "Token",
    "split_identifier",
    "FilterConfig",
    "VocabularyEntry",
    "ProjectVocabulary",
    "ProjectStats",
    "build_vocabulary",
    "compute_stats",
    "top_k",
    "load_stoplist",
    "default_stoplist",
    "DomainTermEntry",
    "DomainVocabulary",
    "TooFewProjectsError",
    "build_domain_vocabulary",
    "domain_term_percentage",
    "ConceptQuery",
    "ConceptMatch",
    "ScopeError",
    "expand_query",
    "node_scope",
    "locate_concept",
    "ProjectIndex",
    "InvalidIndexError",
    "load_index",
    "save_index",
]
