"""Conditional code block extraction from C preprocessor sources.

Every ``#if``/``#ifdef``/``#ifndef``/``#elif``/``#else`` region becomes a
:class:`CodeBlock` carrying its own condition and its cumulative presence
condition.  ``#include`` is not followed and macros in code bodies are never
expanded.
"""

from __future__ import annotations

import logging
import os
import re
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from ..errors import SourceTreeMissing, UnbalancedDirectives, WorkbenchError
from ..logic import FALSE, TRUE, And, Formula, Not, Or, Var, simplify, variables

log = logging.getLogger("splworkbench.code")

DEFAULT_VAR_REGEX = r"CONFIG_\w+"

CODE, BLANK, COMMENT, DIRECTIVE = "code", "blank", "comment", "directive"


@dataclass(frozen=True)
class CodeBlock:
    condition: Formula
    presence_condition: Formula
    start_line: int
    end_line: int
    kind: str = "if"
    children: tuple[CodeBlock, ...] = ()

    def iter_blocks(self) -> Iterator[CodeBlock]:
        yield self
        for child in self.children:
            yield from child.iter_blocks()


@dataclass(frozen=True)
class SourceFileBlocks:
    path: str
    line_count: int
    line_kinds: tuple[str, ...]
    top_blocks: tuple[CodeBlock, ...] = ()

    def iter_blocks(self) -> Iterator[CodeBlock]:
        for block in self.top_blocks:
            yield from block.iter_blocks()

    def line_presence_conditions(self) -> list[Formula]:
        """Innermost presence condition per line; index 0 is unused.

        A block's own directive line belongs to the enclosing region.
        """
        pcs: list[Formula] = [TRUE] * (self.line_count + 1)
        for block in self.iter_blocks():
            for line in range(block.start_line + 1, block.end_line + 1):
                pcs[line] = block.presence_condition
        return pcs


@dataclass
class MacroTable:
    """Defined/undefined state of macros seen at the top level of a file.

    ``values`` keeps the replacement text of defined macros so a bare
    ``#if NAME`` can use an integer body such as ``0``.
    """

    values: dict[str, str | None] = field(default_factory=dict)

    def define(self, name: str, body: str = "") -> None:
        self.values[name] = body.strip()

    def undef(self, name: str) -> None:
        self.values[name] = None

    def is_known(self, name: str) -> bool:
        return name in self.values

    def is_defined(self, name: str) -> bool:
        return self.values.get(name) is not None

    def truth(self, name: str) -> bool:
        """Value of a bare identifier in ``#if``: integer bodies are used
        as-is, anything else counts as a defined-test."""
        body = self.values.get(name)
        if body is None:
            return False
        number = _int_value(body)
        return True if number is None else number != 0


_INT = re.compile(r"(0[xX][0-9a-fA-F]+|0[0-7]*|[1-9][0-9]*)[uUlL]*")


def _int_value(text: str) -> int | None:
    m = _INT.fullmatch(text.strip())
    if m is None:
        return None
    digits = m.group(1)
    if digits.lower().startswith("0x"):
        return int(digits, 16)
    if digits.startswith("0") and len(digits) > 1:
        return int(digits, 8)
    return int(digits)


class _Unparsable(Exception):
    pass


_CPP_TOKEN = re.compile(
    r"\s*(?:(?P<op>&&|\|\||!=|==|<=|>=|<<|>>|[!()<>+\-*/%&|^~?:,])"
    r"|(?P<num>\d\w*)|(?P<ident>[A-Za-z_]\w*)|(?P<other>\S))"
)


def _cpp_tokens(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            return tokens
        m = _CPP_TOKEN.match(text, pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
        pos = m.end()


class _CppExprParser:
    """Boolean subset of ``#if`` expressions; anything else raises."""

    def __init__(self, text: str, macros: MacroTable | None):
        self.tokens = _cpp_tokens(text)
        self.pos = 0
        self.macros = macros

    def peek(self, offset: int = 0) -> tuple[str, str] | None:
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise _Unparsable("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        if not self.tokens:
            raise _Unparsable("empty condition")
        result = self.parse_or()
        if self.peek() is not None:
            raise _Unparsable(f"unsupported token {self.peek()[1]!r}")
        return result

    def parse_or(self) -> Formula:
        parts = [self.parse_and()]
        while self.peek() == ("op", "||"):
            self.pos += 1
            parts.append(self.parse_and())
        return Or(*parts)

    def parse_and(self) -> Formula:
        parts = [self.parse_unary()]
        while self.peek() == ("op", "&&"):
            self.pos += 1
            parts.append(self.parse_unary())
        return And(*parts)

    def parse_unary(self) -> Formula:
        if self.peek() == ("op", "!"):
            self.pos += 1
            return Not(self.parse_unary())
        return self.parse_atom()

    def symbol(self, name: str, bare: bool) -> Formula:
        if self.macros is not None and self.macros.is_known(name):
            folded = self.macros.truth(name) if bare else self.macros.is_defined(name)
            return TRUE if folded else FALSE
        return Var(name)

    def parse_atom(self) -> Formula:
        kind, value = self.take()
        if (kind, value) == ("op", "("):
            inner = self.parse_or()
            if self.take() != ("op", ")"):
                raise _Unparsable("expected ')'")
            return inner
        if kind == "num":
            number = _int_value(value)
            if number is None:
                raise _Unparsable(f"unsupported literal {value!r}")
            return TRUE if number else FALSE
        if kind == "ident" and value == "defined":
            if self.peek() == ("op", "("):
                self.pos += 1
                name_kind, name = self.take()
                if name_kind != "ident" or self.take() != ("op", ")"):
                    raise _Unparsable("malformed defined()")
            else:
                name_kind, name = self.take()
                if name_kind != "ident":
                    raise _Unparsable("malformed defined")
            return self.symbol(name, bare=False)
        if kind == "ident":
            if self.peek() == ("op", "("):
                raise _Unparsable(f"function-like macro {value}()")
            return self.symbol(value, bare=True)
        raise _Unparsable(f"unsupported token {value!r}")


def parse_cpp_condition(
    text: str,
    kind: str,
    macros: MacroTable | None = None,
    var_regex: str = DEFAULT_VAR_REGEX,
    warnings: list[str] | None = None,
) -> Formula:
    """Translate a directive body to a formula.

    Expressions outside the boolean subset (arithmetic, comparisons,
    function-like macros) become ``TRUE`` and a warning is recorded.
    Identifiers not matching ``var_regex`` still become variables.
    """
    text = text.strip()
    try:
        if kind in ("ifdef", "ifndef"):
            parts = text.split()
            if len(parts) != 1 or not re.fullmatch(r"[A-Za-z_]\w*", parts[0]):
                raise _Unparsable(f"#{kind} expects one identifier")
            f = _CppExprParser("", macros).symbol(parts[0], bare=False)
            result = Not(f) if kind == "ifndef" else f
        elif kind in ("if", "elif"):
            result = _CppExprParser(text, macros).parse()
        else:
            raise ValueError(f"not a conditional directive kind: {kind}")
    except _Unparsable as exc:
        message = f"unparsable #{kind} condition {text!r} treated as true ({exc})"
        if warnings is not None:
            warnings.append(message)
        else:
            log.warning(message)
        return TRUE
    result = simplify(result)
    pattern = re.compile(var_regex)
    opaque = [v for v in variables(result) if not pattern.fullmatch(v)]
    if opaque:
        log.debug("identifiers outside the variability namespace: %s", ", ".join(opaque))
    return result


def _strip_comments(lines: Sequence[str]) -> list[tuple[str, bool]]:
    """Per physical line: text with comments blanked out, and whether the
    line starts inside a block comment."""
    out = []
    in_comment = False
    for line in lines:
        started_in_comment = in_comment
        buf = []
        i = 0
        quote = None
        n = len(line)
        while i < n:
            ch = line[i]
            if in_comment:
                if line.startswith("*/", i):
                    in_comment = False
                    buf.append(" ")
                    i += 2
                else:
                    i += 1
                continue
            if quote:
                buf.append(ch)
                if ch == "\\" and i + 1 < n:
                    buf.append(line[i + 1])
                    i += 2
                    continue
                if ch == quote:
                    quote = None
                i += 1
                continue
            if line.startswith("/*", i):
                in_comment = True
                i += 2
                continue
            if line.startswith("//", i):
                break
            if ch in "\"'":
                quote = ch
            buf.append(ch)
            i += 1
        out.append(("".join(buf), started_in_comment))
    return out


_DIRECTIVE = re.compile(r"\s*#\s*([A-Za-z_]\w*)?(.*)$", re.S)


@dataclass
class _Directive:
    line: int
    last_line: int
    keyword: str
    body: str


def _scan_lines(lines: Sequence[str]) -> tuple[list[str], list[_Directive]]:
    stripped = _strip_comments(lines)
    kinds = [CODE] * len(lines)
    directives: list[_Directive] = []
    i = 0
    while i < len(lines):
        code, in_comment = stripped[i]
        if not in_comment and code.lstrip().startswith("#"):
            first = i
            parts = []
            while True:
                text = stripped[i][0]
                more = lines[i].rstrip().endswith("\\") and i + 1 < len(lines)
                if more and text.rstrip().endswith("\\"):
                    text = text.rstrip()[:-1]
                parts.append(text)
                if not more:
                    break
                i += 1
            for j in range(first, i + 1):
                kinds[j] = DIRECTIVE
            m = _DIRECTIVE.match(" ".join(parts))
            directives.append(_Directive(first + 1, i + 1, m.group(1) or "", m.group(2)))
        else:
            if not lines[i].strip():
                kinds[i] = BLANK
            elif not code.strip():
                kinds[i] = COMMENT
        i += 1
    return kinds, directives


class _Builder:
    __slots__ = ("condition", "pc", "start", "end", "kind", "children")

    def __init__(self, condition, pc, start, kind):
        self.condition = condition
        self.pc = pc
        self.start = start
        self.end = start
        self.kind = kind
        self.children: list[_Builder] = []

    def freeze(self) -> CodeBlock:
        return CodeBlock(
            self.condition, self.pc, self.start, self.end, self.kind,
            tuple(c.freeze() for c in self.children),
        )


@dataclass
class _Chain:
    parent_pc: Formula | None
    siblings: list[_Builder]
    previous: list[Formula]
    current: _Builder
    seen_else: bool = False


def _block_pc(parent_pc: Formula | None, previous: list[Formula], condition: Formula | None) -> Formula:
    parts = [] if parent_pc is None else [parent_pc]
    parts.extend(Not(c) for c in previous)
    if condition is not None:
        parts.append(condition)
    return And(*parts)


def extract_blocks(
    file_text: str,
    path: str,
    var_regex: str = DEFAULT_VAR_REGEX,
    handle_macros: bool = False,
    warnings: list[str] | None = None,
) -> SourceFileBlocks:
    lines = file_text.splitlines()
    kinds, directives = _scan_lines(lines)
    macros = MacroTable() if handle_macros else None
    top: list[_Builder] = []
    stack: list[_Chain] = []

    def warn(message: str) -> None:
        message = f"{path}: {message}"
        log.warning(message)
        if warnings is not None:
            warnings.append(message)

    def condition_of(d: _Directive) -> Formula:
        local: list[str] = []
        f = parse_cpp_condition(d.body, d.keyword, macros, var_regex, local)
        for w in local:
            warn(f"line {d.line}: {w}")
        return f

    for d in directives:
        kw = d.keyword
        if kw in ("if", "ifdef", "ifndef"):
            cond = condition_of(d)
            parent_pc = stack[-1].current.pc if stack else None
            siblings = stack[-1].current.children if stack else top
            block = _Builder(cond, _block_pc(parent_pc, [], cond), d.line, kw)
            siblings.append(block)
            stack.append(_Chain(parent_pc, siblings, [cond], block))
        elif kw in ("elif", "else"):
            if not stack:
                raise UnbalancedDirectives(path, d.line, f"#{kw} without #if")
            chain = stack[-1]
            if chain.seen_else:
                raise UnbalancedDirectives(path, d.line, f"#{kw} after #else")
            chain.current.end = d.line - 1
            if kw == "elif":
                cond = condition_of(d)
                pc = _block_pc(chain.parent_pc, chain.previous, cond)
            else:
                if d.body.strip():
                    warn(f"line {d.line}: extra tokens after #else ignored")
                cond = TRUE
                pc = _block_pc(chain.parent_pc, chain.previous, None)
                chain.seen_else = True
            block = _Builder(cond, pc, d.line, kw)
            chain.siblings.append(block)
            chain.previous.append(cond)
            chain.current = block
        elif kw == "endif":
            if not stack:
                raise UnbalancedDirectives(path, d.line, "#endif without #if")
            stack.pop().current.end = d.line - 1
        elif kw in ("define", "undef") and macros is not None:
            m = re.match(r"\s*([A-Za-z_]\w*)(\(?)(.*)$", d.body, re.S)
            if m is None:
                warn(f"line {d.line}: malformed #{kw}")
            elif stack:
                warn(f"line {d.line}: conditional #{kw} {m.group(1)} ignored for macro handling")
            elif kw == "undef":
                macros.undef(m.group(1))
            else:
                body = "" if m.group(2) else m.group(3)
                macros.define(m.group(1), body)
    if stack:
        raise UnbalancedDirectives(path, len(lines), f"{len(stack)} unterminated #if at end of file")
    return SourceFileBlocks(path, len(lines), tuple(kinds), tuple(b.freeze() for b in top))


def read_source(path: Path) -> str:
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        return data.decode("utf-8", errors="replace")


def list_source_files(root: str | os.PathLike, file_regex: str) -> list[str]:
    """Relative POSIX paths under ``root`` that fully match ``file_regex``."""
    root = Path(root)
    if not root.is_dir():
        raise SourceTreeMissing(root)
    pattern = re.compile(file_regex)
    found = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for name in filenames:
            full = Path(dirpath) / name
            if not full.is_file():
                continue
            rel = full.relative_to(root).as_posix()
            if pattern.fullmatch(rel):
                found.append(rel)
    return sorted(found)


def scan_source_tree(
    root: str | os.PathLike,
    file_regex: str = r".*\.(c|h|S)",
    handle_macros: bool = False,
    var_regex: str = DEFAULT_VAR_REGEX,
    warnings: list[str] | None = None,
    workers: int = 1,
    cancel: threading.Event | None = None,
    on_result: Callable[[SourceFileBlocks], None] | None = None,
) -> list[SourceFileBlocks]:
    """Extract every matching file; failures become warnings.

    Results, warnings and ``on_result`` calls follow path order regardless
    of ``workers``.
    """
    root = Path(root)
    paths = list_source_files(root, file_regex)

    def one(rel: str) -> tuple[SourceFileBlocks | None, list[str]]:
        if cancel is not None and cancel.is_set():
            return None, []
        local: list[str] = []
        try:
            result = extract_blocks(read_source(root / rel), rel, var_regex, handle_macros, local)
        except (WorkbenchError, OSError) as exc:
            message = f"skipping {rel}: {exc}"
            log.warning(message)
            return None, [message]
        return result, local

    def collect(outcomes: Iterable[tuple[SourceFileBlocks | None, list[str]]]) -> list[SourceFileBlocks]:
        done = []
        for result, messages in outcomes:
            if warnings is not None:
                warnings.extend(messages)
            if result is None:
                continue
            done.append(result)
            if on_result is not None:
                on_result(result)
        return done

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return collect(pool.map(one, paths))
    return collect(map(one, paths))


def collect_code_variables(files: Iterable[SourceFileBlocks]) -> set[str]:
    names: set[str] = set()
    for sf in files:
        for block in sf.iter_blocks():
            names.update(variables(block.condition))
    return names
