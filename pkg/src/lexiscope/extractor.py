"""Extract named declaration nodes from Java-syntax source files.

This is a declaration-level lexical scanner, not a Java parser.  It strips
comments and literals, then walks the token stream recognizing type
declarations, members, and parameter lists.  Method and initializer bodies
are skipped wholesale, so local variables, lambdas, and anonymous classes
never produce nodes.  Regions that do not look like a declaration are
dropped and counted in the diagnostics.
"""

from __future__ import annotations

import bisect
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

__all__ = [
    "SourceNode",
    "ScanDiagnostics",
    "SchemaError",
    "KINDS",
    "extract_java",
    "extract_project",
    "ingest_nodes",
]

KINDS = ("class", "method", "parameter", "field")

IDENTIFIER_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")

_CLASS_KEYWORDS = {"class", "interface", "enum", "record"}

# Keywords that can precede a member name but never denote its type.
_NON_TYPE_KEYWORDS = {
    "public", "private", "protected", "static", "final", "abstract",
    "default", "native", "synchronized", "transient", "volatile",
    "strictfp", "sealed", "throws", "extends", "implements", "permits",
    "package", "import", "new", "return",
} | _CLASS_KEYWORDS

# Comments, text blocks, strings, and char literals, in match-priority order.
_NOISE_RE = re.compile(
    r'"""(?:[^"\\]|\\.|"(?!""))*"""'
    r"|//[^\n]*"
    r"|/\*.*?\*/"
    r'|"(?:[^"\\\n]|\\.)*"'
    r"|'(?:[^'\\\n]|\\.)*'",
    re.S,
)

_TOKEN_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*|[0-9][0-9A-Za-z_$]*|\S")

_COMMA = object()  # declarator boundary sentinel inside a member buffer


@dataclass(frozen=True)
class SourceNode:
    """One extracted declaration: a class, method, parameter, or field."""

    id: int
    kind: str
    name: str
    file_path: str
    line: int
    parent_id: int | None = None


@dataclass
class ScanDiagnostics:
    """Counters for constructs the scanner gave up on."""

    skipped_declarations: int = 0
    skipped_blocks: int = 0
    unreadable_files: int = 0

    def merge(self, other: "ScanDiagnostics") -> None:
        self.skipped_declarations += other.skipped_declarations
        self.skipped_blocks += other.skipped_blocks
        self.unreadable_files += other.unreadable_files


class SchemaError(Exception):
    """A line-delimited node record violates the ingestion schema."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


def _blank_noise(match: re.Match) -> str:
    return re.sub(r"[^\n]", " ", match.group(0))


def _tokenize(text: str) -> list[tuple[str, int]]:
    """(token, 1-based line) pairs of the comment/literal-stripped text."""
    cleaned = _NOISE_RE.sub(_blank_noise, text)
    newlines = [i for i, ch in enumerate(cleaned) if ch == "\n"]
    return [
        (m.group(0), bisect.bisect_right(newlines, m.start()) + 1)
        for m in _TOKEN_RE.finditer(cleaned)
    ]


class _Scanner:
    def __init__(self, tokens: list[tuple[str, int]], file_path: str, start_id: int,
                 diagnostics: ScanDiagnostics):
        self.tokens = tokens
        self.pos = 0
        self.file_path = file_path
        self.next_id = start_id
        self.nodes: list[SourceNode] = []
        self.diagnostics = diagnostics

    # --- token stream helpers ---

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def peek(self) -> str | None:
        return None if self.at_end() else self.tokens[self.pos][0]

    def advance(self) -> tuple[str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def emit(self, kind: str, name: str, line: int, parent_id: int | None) -> int:
        node_id = self.next_id
        self.next_id += 1
        self.nodes.append(SourceNode(node_id, kind, name, self.file_path, line, parent_id))
        return node_id

    def skip_balanced(self, opener: str, closer: str) -> None:
        """Consume tokens until the matching closer; opener already consumed."""
        depth = 1
        while not self.at_end() and depth > 0:
            tok, _ = self.advance()
            if tok == opener:
                depth += 1
            elif tok == closer:
                depth -= 1

    def skip_annotation(self) -> None:
        """Consume an @Name[(args)] annotation; the '@' already consumed."""
        if not self.at_end() and IDENTIFIER_RE.fullmatch(self.tokens[self.pos][0]):
            self.advance()
            while self.peek() == ".":  # qualified annotation name
                self.advance()
                if not self.at_end() and IDENTIFIER_RE.fullmatch(self.tokens[self.pos][0]):
                    self.advance()
            if self.peek() == "(":
                self.advance()
                self.skip_balanced("(", ")")

    def skip_generics(self) -> None:
        """Consume a <...> run; the '<' already consumed."""
        depth = 1
        while not self.at_end() and depth > 0:
            tok, _ = self.advance()
            if tok == "<":
                depth += 1
            elif tok == ">":
                depth -= 1

    # --- grammar-ish scanning ---

    def scan_compilation_unit(self) -> None:
        while not self.at_end():
            tok, _ = self.advance()
            if tok in _CLASS_KEYWORDS:
                self.scan_class_declaration(parent_id=None)
            elif tok == "@":
                self.skip_annotation()
            elif tok == "{":
                self.diagnostics.skipped_blocks += 1
                self.skip_balanced("{", "}")
            # package/import statements and stray tokens fall through

    def scan_class_declaration(self, parent_id: int | None) -> None:
        """Keyword already consumed; emits the node and scans the body."""
        if self.at_end() or not IDENTIFIER_RE.fullmatch(self.tokens[self.pos][0]):
            self.diagnostics.skipped_declarations += 1
            return
        name, line = self.advance()
        class_id = self.emit("class", name, line, parent_id)
        # Skim the header: generics, extends/implements lists, record components.
        while not self.at_end():
            tok, _ = self.advance()
            if tok == "{":
                self.scan_class_body(class_id)
                return
            if tok == ";":  # headerless declaration, nothing more to scan
                return
            if tok == "<":
                self.skip_generics()
            elif tok == "(":
                self.skip_balanced("(", ")")
            elif tok == "@":
                self.skip_annotation()

    def scan_class_body(self, class_id: int) -> None:
        """Member loop between the braces of a type body."""
        buffer: list = []  # identifier (text, line) pairs and _COMMA sentinels

        def reset():
            buffer.clear()

        while not self.at_end():
            tok, line = self.advance()
            if tok == "}":
                if any(item is not _COMMA for item in buffer):
                    self.diagnostics.skipped_declarations += 1
                return
            if tok == ";":
                self.finish_field(buffer, class_id)
                reset()
            elif tok == "=":
                self.skip_initializer(buffer)
            elif tok == ",":
                buffer.append(_COMMA)
            elif tok == "(":
                if not self.try_method(buffer, class_id):
                    self.skip_balanced("(", ")")
                else:
                    reset()
            elif tok == "{":
                # initializer block, constructor body, or unparsed construct
                self.diagnostics.skipped_blocks += 1
                self.skip_balanced("{", "}")
                reset()
            elif tok in _CLASS_KEYWORDS:
                self.scan_class_declaration(class_id)
                reset()
            elif tok == "@":
                self.skip_annotation()
            elif tok == "<":
                self.skip_generics()
            elif IDENTIFIER_RE.fullmatch(tok):
                buffer.append((tok, line))
            # '.', '[', ']', numbers and other noise are dropped

        if any(item is not _COMMA for item in buffer):
            self.diagnostics.skipped_declarations += 1

    def skip_initializer(self, buffer: list) -> None:
        """Consume '= ...' up to a declarator comma or the ending ';'.

        Leaves the terminator for the member loop, so multi-declarator
        fields keep their boundaries and the ';' still closes the member.
        """
        depth = 0
        while not self.at_end():
            tok = self.peek()
            if depth == 0 and tok in (";", ","):
                return
            tok, _ = self.advance()
            if tok in "([{":
                depth += 1
            elif tok in ")]}":
                depth -= 1

    def try_method(self, buffer: list, class_id: int) -> bool:
        """Decide whether buffer + '(' starts a method; emit it if so.

        A method name must be an identifier directly preceded by a type
        token (an identifier that is not a modifier/keyword).  The '('
        is already consumed; on success the parameter list, optional
        throws clause, and body/semicolon are consumed too.
        """
        idents = [item for item in buffer if item is not _COMMA]
        if len(idents) < 2 or _COMMA in buffer:
            return False
        name, line = idents[-1]
        type_token = idents[-2][0]
        if type_token in _NON_TYPE_KEYWORDS or not IDENTIFIER_RE.fullmatch(name):
            return False

        saved = self.pos
        params = self.scan_parameters()
        # Confirm with the trailer: optional throws list, then '{' or ';'.
        while not self.at_end():
            tok, _ = self.advance()
            if tok == "{":
                method_id = self.emit("method", name, line, class_id)
                for param_name, param_line in params:
                    self.emit("parameter", param_name, param_line, method_id)
                self.skip_balanced("{", "}")
                return True
            if tok == ";":
                method_id = self.emit("method", name, line, class_id)
                for param_name, param_line in params:
                    self.emit("parameter", param_name, param_line, method_id)
                return True
            if tok == "@":
                self.skip_annotation()
            elif tok == "(":  # annotation-member default value etc.
                self.skip_balanced("(", ")")
            elif IDENTIFIER_RE.fullmatch(tok) or tok[0].isdigit() or tok in (",", ".", "[", "]"):
                continue
            elif tok == "<":
                self.skip_generics()
            else:
                break
        self.pos = saved
        return False

    def scan_parameters(self) -> list[tuple[str, int]]:
        """Parameter names of a '(...)' list; the '(' already consumed."""
        params: list[tuple[str, int]] = []
        current: list[tuple[str, int]] = []

        def close_segment():
            if current:
                params.append(current[-1])
                current.clear()

        while not self.at_end():
            tok, line = self.advance()
            if tok == ")":
                close_segment()
                return params
            if tok == ",":
                close_segment()
            elif tok == "@":
                self.skip_annotation()
            elif tok == "<":
                self.skip_generics()
            elif tok == "(":
                self.skip_balanced("(", ")")
            elif IDENTIFIER_RE.fullmatch(tok):
                current.append((tok, line))
        close_segment()
        return params

    def finish_field(self, buffer: list, class_id: int) -> None:
        """Emit field nodes for a ';'-terminated member declaration."""
        if not buffer:
            return
        segments: list[list[tuple[str, int]]] = [[]]
        for item in buffer:
            if item is _COMMA:
                segments.append([])
            else:
                segments[-1].append(item)
        head = segments[0]
        if len(head) < 2:  # needs at least a type and a name
            self.diagnostics.skipped_declarations += 1
            return
        names = [head[-1]] + [seg[0] for seg in segments[1:] if seg]
        for name, line in names:
            self.emit("field", name, line, class_id)


def extract_java(
    text: str,
    file_path: str | Path,
    start_id: int = 0,
    diagnostics: ScanDiagnostics | None = None,
) -> list[SourceNode]:
    """Scan one Java source text into declaration nodes.

    Best effort: nothing raises on weird input; regions the scanner cannot
    shape into a declaration are counted in `diagnostics` and skipped.
    """
    scanner = _Scanner(
        _tokenize(text), str(file_path), start_id, diagnostics or ScanDiagnostics()
    )
    scanner.scan_compilation_unit()
    return scanner.nodes


def extract_project(
    root_directory: str | Path,
    diagnostics: ScanDiagnostics | None = None,
) -> tuple[list[SourceNode], int]:
    """Scan all *.java under a directory, in sorted relative-path order."""
    root = Path(root_directory)
    if not root.is_dir():
        raise NotADirectoryError(f"not a readable directory: {root}")
    diagnostics = diagnostics if diagnostics is not None else ScanDiagnostics()
    nodes: list[SourceNode] = []
    file_count = 0
    for path in sorted(root.rglob("*.java")):
        try:
            text = path.read_text(encoding="utf-8", errors="replace")
        except OSError:
            diagnostics.unreadable_files += 1
            continue
        relative = path.relative_to(root).as_posix()
        nodes.extend(extract_java(text, relative, start_id=len(nodes), diagnostics=diagnostics))
        file_count += 1
    return nodes, file_count


def ingest_nodes(stream: IO[str] | Iterable[str]) -> list[SourceNode]:
    """Read one JSON node record per line into validated SourceNodes.

    Record fields: kind (class|method|parameter|field), name, file, line,
    optional parent (0-based index of an earlier record).  Raises
    SchemaError, with the offending line number, on any violation.
    """
    nodes: list[SourceNode] = []
    for line_number, raw in enumerate(stream, start=1):
        if not raw.strip():
            continue
        try:
            record = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise SchemaError(line_number, f"invalid JSON ({exc.msg})") from exc
        if not isinstance(record, dict):
            raise SchemaError(line_number, "record is not an object")

        kind = record.get("kind")
        if kind not in KINDS:
            raise SchemaError(line_number, f"bad kind {kind!r}")
        name = record.get("name")
        if not isinstance(name, str) or not IDENTIFIER_RE.fullmatch(name):
            raise SchemaError(line_number, f"bad name {name!r}")
        file_path = record.get("file")
        if not isinstance(file_path, str) or not file_path:
            raise SchemaError(line_number, "missing file")
        line = record.get("line")
        if not isinstance(line, int) or isinstance(line, bool) or line < 1:
            raise SchemaError(line_number, f"bad line {line!r}")

        parent = record.get("parent")
        if parent is None:
            if kind != "class":
                raise SchemaError(line_number, f"{kind} requires a parent")
            parent_id = None
        else:
            if not isinstance(parent, int) or isinstance(parent, bool):
                raise SchemaError(line_number, f"bad parent {parent!r}")
            if not 0 <= parent < len(nodes):
                raise SchemaError(line_number, f"parent {parent} does not reference an earlier node")
            parent_kind = nodes[parent].kind
            required = "method" if kind == "parameter" else "class"
            if parent_kind != required:
                raise SchemaError(
                    line_number, f"{kind} parent must be a {required}, got {parent_kind}"
                )
            parent_id = parent

        nodes.append(SourceNode(len(nodes), kind, name, file_path, line, parent_id))
    return nodes
