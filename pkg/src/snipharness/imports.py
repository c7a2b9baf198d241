"""Import extraction from raw source text.

A logical-line scanner plus a small import-statement grammar. String
literals (including triple-quoted) and comments are opaque: their contents
never produce statements. The scanner is tolerant by design — malformed
input degrades to diagnostics, never exceptions — because extraction must
proceed best-effort on files that may not even parse.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from .records import ImportDecl

_OPENERS = "([{"
_CLOSERS = ")]}"
_QUOTES = "\"'"


class ScanDiagnostic(UserWarning):
    """Structured warning raised for tolerated input defects."""

    def __init__(self, kind: str, line: int = 0, detail: str = ""):
        text = f"{kind} at line {line}"
        if detail:
            text += f": {detail}"
        super().__init__(text)
        self.kind = kind
        self.line = line
        self.detail = detail


def _warn(kind: str, line: int, detail: str = "") -> None:
    warnings.warn(ScanDiagnostic(kind, line, detail), stacklevel=3)


@dataclass(frozen=True)
class LogicalLine:
    """One logical line: continuations resolved, comments stripped.

    ``statements`` holds the text split on top-level semicolons;
    ``statement_lines`` carries the physical line each statement starts on.
    """

    text: str
    start_line: int
    statements: tuple[str, ...]
    statement_lines: tuple[int, ...] = ()


def split_logical_lines(source: str | bytes) -> list[LogicalLine]:
    """Scan source into logical lines.

    Backslash and open-bracket continuations are joined, comments removed,
    and top-level semicolons recorded as statement boundaries. An
    unterminated literal consumes the remainder of its line (or, for
    triple quotes, the file) and emits an ``unterminated_literal`` warning.
    """
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError:
            source = source.decode("utf-8", errors="replace")
            _warn("lossy_decode", 1)

    out: list[LogicalLine] = []
    full: list[str] = []  # whole logical line, semicolons included
    cur: list[str] = []  # current statement within the logical line
    statements: list[tuple[str, int]] = []
    start_line = 0
    cur_line = 0
    depth = 0
    pending_join = False
    line = 1

    def push_statement() -> None:
        nonlocal cur, cur_line
        text = "".join(cur).strip()
        if text:
            statements.append((text, cur_line))
        cur = []
        cur_line = 0

    def flush() -> None:
        nonlocal full, statements, start_line, depth, pending_join
        push_statement()
        if statements:
            out.append(
                LogicalLine(
                    text="".join(full).rstrip(),
                    start_line=start_line,
                    statements=tuple(s for s, _ in statements),
                    statement_lines=tuple(ln for _, ln in statements),
                )
            )
        full = []
        statements.clear()
        start_line = 0
        depth = 0
        pending_join = False

    def append(ch: str) -> None:
        nonlocal pending_join, start_line, cur_line
        if ch in " \t":
            if pending_join or not full:
                return  # leading / junction whitespace is dropped
            full.append(ch)
            if cur:
                cur.append(ch)
            return
        if pending_join:
            while full and full[-1] in " \t":
                full.pop()
            while cur and cur[-1] in " \t":
                cur.pop()
            if full and full[-1] not in _OPENERS and ch not in _CLOSERS + ",":
                full.append(" ")
                if cur:
                    cur.append(" ")
            pending_join = False
        if not full:
            start_line = line
        if not cur:
            cur_line = line
        full.append(ch)
        cur.append(ch)

    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\r":
            i += 1
            continue
        if ch == "\n":
            if depth > 0:
                pending_join = True
            else:
                flush()
            line += 1
            i += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch == "\\":
            j = i + 1
            while j < n and source[j] in " \t\r":
                j += 1
            if j >= n or source[j] == "\n":
                # explicit continuation; Python forbids trailing blanks here
                # but we tolerate them
                pending_join = True
                line += 1
                i = j + 1
                continue
            append(ch)
            i += 1
            continue
        if ch in _QUOTES:
            i, line = _consume_string(source, i, line, append)
            continue
        if ch in _OPENERS:
            depth += 1
            append(ch)
        elif ch in _CLOSERS:
            depth = max(0, depth - 1)
            append(ch)
        elif ch == ";" and depth == 0:
            push_statement()
            if full:
                full.append(";")
        else:
            append(ch)
        i += 1

    flush()
    return out


def _consume_string(source: str, i: int, line: int, append) -> tuple[int, int]:
    """Consume one string literal starting at the quote char.

    Appends the literal verbatim and returns the position after it. The
    backslash-before-quote rule applies to raw strings too: that is how the
    tokenizer decides termination, even though the backslash stays in the
    value.
    """
    n = len(source)
    quote = source[i]
    triple = source[i : i + 3] == quote * 3
    opener = quote * 3 if triple else quote
    for ch in opener:
        append(ch)
    i += len(opener)
    start = line
    while i < n:
        ch = source[i]
        if ch == "\\" and i + 1 < n:
            append(ch)
            nxt = source[i + 1]
            append(nxt)
            if nxt == "\n":
                line += 1
            i += 2
            continue
        if ch == "\n":
            if not triple:
                _warn("unterminated_literal", start)
                return i, line  # let the caller treat the newline normally
            append(ch)
            line += 1
            i += 1
            continue
        if ch == quote:
            if triple:
                if source[i : i + 3] == opener:
                    for c in opener:
                        append(c)
                    return i + 3, line
                append(ch)
                i += 1
                continue
            append(ch)
            return i + 1, line
        append(ch)
        i += 1
    _warn("unterminated_literal", start)
    return i, line


# --- import grammar over a single statement -------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<name>[^\W\d]\w*)"
    r"|(?P<dots>\.+)"
    r"|(?P<comma>,)"
    r"|(?P<star>\*)"
    r"|(?P<lpar>\()"
    r"|(?P<rpar>\))"
    r"|(?P<other>.)"
)


class _MalformedImport(Exception):
    pass


class _Tokens:
    def __init__(self, text: str):
        self.items: list[tuple[str, str]] = []
        for m in _TOKEN_RE.finditer(text):
            kind = m.lastgroup
            if kind != "ws":
                self.items.append((kind, m.group()))
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self) -> tuple[str, str] | None:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def expect_name(self) -> str:
        tok = self.next()
        if tok is None or tok[0] != "name":
            raise _MalformedImport(f"expected a name, got {tok!r}")
        return tok[1]

    @property
    def exhausted(self) -> bool:
        return self.pos >= len(self.items)


def _parse_dotted(tokens: _Tokens) -> str:
    parts = [tokens.expect_name()]
    while True:
        tok = tokens.peek()
        if tok is None or tok[0] != "dots":
            break
        if tok[1] != ".":
            raise _MalformedImport("run of dots inside a module path")
        tokens.next()
        parts.append(tokens.expect_name())
    return ".".join(parts)


def _parse_alias(tokens: _Tokens) -> str | None:
    tok = tokens.peek()
    if tok is not None and tok == ("name", "as"):
        tokens.next()
        return tokens.expect_name()
    return None


def _parse_plain_import(tokens: _Tokens, line: int) -> list[ImportDecl]:
    decls = []
    while True:
        path = _parse_dotted(tokens)
        alias = _parse_alias(tokens)
        decls.append(ImportDecl(module_path=path, module_alias=alias, line=line))
        tok = tokens.peek()
        if tok is None:
            return decls
        if tok[0] == "comma":
            tokens.next()
            continue
        raise _MalformedImport(f"unexpected token {tok[1]!r} after import clause")


def _parse_from_import(tokens: _Tokens, line: int) -> list[ImportDecl]:
    level = 0
    while True:
        tok = tokens.peek()
        if tok is None or tok[0] != "dots":
            break
        level += len(tok[1])
        tokens.next()
    path = ""
    tok = tokens.peek()
    if tok is not None and tok[0] == "name" and tok[1] != "import":
        path = _parse_dotted(tokens)
    if path == "" and level == 0:
        raise _MalformedImport("from-import without a module path")
    tok = tokens.next()
    if tok != ("name", "import"):
        raise _MalformedImport("missing 'import' keyword in from-import")

    is_star = False
    names: list[tuple[str, str | None]] = []
    tok = tokens.peek()
    if tok is not None and tok[0] == "star":
        tokens.next()
        is_star = True
    else:
        parenthesized = tok is not None and tok[0] == "lpar"
        if parenthesized:
            tokens.next()
        while True:
            tok = tokens.peek()
            if tok is None:
                break
            if parenthesized and tok[0] == "rpar":
                tokens.next()
                break
            if tok[0] == "star":
                tokens.next()
                is_star = True
            else:
                name = tokens.expect_name()
                names.append((name, _parse_alias(tokens)))
            tok = tokens.peek()
            if tok is not None and tok[0] == "comma":
                tokens.next()
                continue
            if parenthesized:
                if tok is not None and tok[0] == "rpar":
                    tokens.next()
                break
            break
        if not names and not is_star:
            raise _MalformedImport("from-import with an empty name list")
    if not tokens.exhausted:
        tok = tokens.peek()
        raise _MalformedImport(f"unexpected token {tok[1]!r} after from-import")
    return [
        ImportDecl(
            module_path=path,
            imported_names=tuple(names),
            relative_level=level,
            is_star=is_star,
            line=line,
        )
    ]


def _skip_string_in(text: str, i: int) -> int:
    """Return the index just past the string literal starting at ``i``."""
    n = len(text)
    quote = text[i]
    triple = text[i : i + 3] == quote * 3
    i += 3 if triple else 1
    while i < n:
        ch = text[i]
        if ch == "\\":
            i += 2
            continue
        if ch == quote:
            if triple:
                if text[i : i + 3] == quote * 3:
                    return i + 3
                i += 1
                continue
            return i + 1
        i += 1
    return n


def _candidate_positions(stmt: str):
    """Positions where an import keyword may begin a declaration.

    A declaration can start the statement or follow any top-level colon
    (one-line compound statements such as ``if x: import y``).
    """
    yield 0
    depth = 0
    i = 0
    n = len(stmt)
    while i < n:
        ch = stmt[i]
        if ch in _QUOTES:
            i = _skip_string_in(stmt, i)
            continue
        if ch in _OPENERS:
            depth += 1
        elif ch in _CLOSERS:
            depth = max(0, depth - 1)
        elif ch == ":" and depth == 0:
            yield i + 1
        i += 1


_WORD_RE = re.compile(r"\s*([^\W\d]\w*)")


def extract_imports(source: str | bytes) -> list[ImportDecl]:
    """Extract every import declaration, in source order.

    Declarations nested inside functions, classes, conditionals, or
    exception handlers are all included. Malformed import statements are
    skipped with a diagnostic.
    """
    decls: list[ImportDecl] = []
    for logical in split_logical_lines(source):
        for stmt, stmt_line in zip(logical.statements, logical.statement_lines):
            for pos in _candidate_positions(stmt):
                match = _WORD_RE.match(stmt, pos)
                if match is None or match.group(1) not in ("import", "from"):
                    continue
                tokens = _Tokens(stmt[match.end() :])
                try:
                    if match.group(1) == "import":
                        decls.extend(_parse_plain_import(tokens, stmt_line))
                    else:
                        decls.extend(_parse_from_import(tokens, stmt_line))
                except _MalformedImport as exc:
                    _warn("malformed_import", stmt_line, f"{stmt!r}: {exc}")
    return decls


def top_level_names(decls) -> list[str]:
    """First dotted component of each non-relative path, deduplicated.

    Source order of first occurrence is preserved.
    """
    seen = []
    for decl in decls:
        if decl.relative_level > 0 or not decl.module_path:
            continue
        top = decl.top_level_name
        if top not in seen:
            seen.append(top)
    return seen
