"""Parser for the textual formula syntax used in CSV build models and caches.

Grammar (lowest to highest precedence)::

    or   := and ('||' and)*
    and  := not ('&&' not)*
    not  := '!' not | atom
    atom := '(' or ')' | 'true' | 'false' | NAME
"""

from __future__ import annotations

import re

from ..errors import FormulaSyntaxError
from .formula import FALSE, TRUE, And, Formula, Not, Or, Var

_TOKEN = re.compile(r"\s*(?:(\|\|)|(&&)|(!)|(\()|(\))|([^\s()!&|]+))")
_KINDS = ("||", "&&", "!", "(", ")", "name")


def _tokenize(text: str, line_no: int | None) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            start = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise FormulaSyntaxError(f"unexpected character {text[start]!r}", start, line_no)
        for kind, group in zip(_KINDS, m.groups()):
            if group is not None:
                tokens.append((kind, group, m.start(m.lastindex)))
                break
        pos = m.end()
    return tokens


def parse_formula(text: str, line_no: int | None = None) -> Formula:
    tokens = _tokenize(text, line_no)
    pos = 0

    def peek() -> str | None:
        return tokens[pos][0] if pos < len(tokens) else None

    def fail(message: str):
        offset = tokens[pos][2] if pos < len(tokens) else len(text)
        raise FormulaSyntaxError(message, offset, line_no)

    def parse_or() -> Formula:
        nonlocal pos
        parts = [parse_and()]
        while peek() == "||":
            pos += 1
            parts.append(parse_and())
        return Or(*parts)

    def parse_and() -> Formula:
        nonlocal pos
        parts = [parse_not()]
        while peek() == "&&":
            pos += 1
            parts.append(parse_not())
        return And(*parts)

    def parse_not() -> Formula:
        nonlocal pos
        if peek() == "!":
            pos += 1
            return Not(parse_not())
        return parse_atom()

    def parse_atom() -> Formula:
        nonlocal pos
        kind = peek()
        if kind == "(":
            pos += 1
            inner = parse_or()
            if peek() != ")":
                fail("expected ')'")
            pos += 1
            return inner
        if kind == "name":
            value = tokens[pos][1]
            pos += 1
            if value.lower() == "true":
                return TRUE
            if value.lower() == "false":
                return FALSE
            return Var(value)
        fail("expected a variable, constant or '('")

    if not tokens:
        raise FormulaSyntaxError("empty formula", 0, line_no)
    result = parse_or()
    if pos != len(tokens):
        fail(f"unexpected token {tokens[pos][1]!r}")
    return result
