"""Immutable propositional formulas over named variables.

``And`` and ``Or`` normalize at construction: no operands gives the neutral
constant and a single operand collapses to that operand, so every stored
``And``/``Or`` has at least two operands.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from ..errors import UnassignedVariable


class Formula:
    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __delattr__(self, name):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __str__(self) -> str:
        return to_string(self)


class TrueConst(Formula):
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, TrueConst)

    def __hash__(self):
        return hash("TrueConst")

    def __repr__(self):
        return "TrueConst()"

    def __reduce__(self):
        return (TrueConst, ())


class FalseConst(Formula):
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, FalseConst)

    def __hash__(self):
        return hash("FalseConst")

    def __repr__(self):
        return "FalseConst()"

    def __reduce__(self):
        return (FalseConst, ())


TRUE = TrueConst()
FALSE = FalseConst()


class Var(Formula):
    __slots__ = ("name",)

    def __init__(self, name: str):
        if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
            raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "name", name)

    def __eq__(self, other):
        return isinstance(other, Var) and other.name == self.name

    def __hash__(self):
        return hash(("Var", self.name))

    def __repr__(self):
        return f"Var({self.name!r})"

    def __reduce__(self):
        return (Var, (self.name,))


class Not(Formula):
    __slots__ = ("operand", "_hash")

    def __init__(self, operand: Formula):
        if not isinstance(operand, Formula):
            raise TypeError(f"expected Formula, got {type(operand).__name__}")
        object.__setattr__(self, "operand", operand)
        object.__setattr__(self, "_hash", hash(("Not", operand)))

    def __eq__(self, other):
        return isinstance(other, Not) and other._hash == self._hash and other.operand == self.operand

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Not({self.operand!r})"

    def __reduce__(self):
        return (Not, (self.operand,))


class _Junction(Formula):
    __slots__ = ("operands", "_hash")
    _neutral: Formula

    def __new__(cls, *operands):
        if len(operands) == 1 and isinstance(operands[0], (list, tuple)):
            operands = tuple(operands[0])
        for op in operands:
            if not isinstance(op, Formula):
                raise TypeError(f"expected Formula, got {type(op).__name__}")
        if not operands:
            return cls._neutral
        if len(operands) == 1:
            return operands[0]
        obj = object.__new__(cls)
        object.__setattr__(obj, "operands", tuple(operands))
        object.__setattr__(obj, "_hash", hash((cls.__name__, obj.operands)))
        return obj

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other._hash == self._hash
            and other.operands == self.operands
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(map(repr, self.operands))})"

    def __reduce__(self):
        return (type(self), self.operands)


class And(_Junction):
    __slots__ = ()
    _neutral = TRUE


class Or(_Junction):
    __slots__ = ()
    _neutral = FALSE


Assignment = Mapping[str, bool]


def is_literal(f: Formula) -> bool:
    return isinstance(f, Var) or (isinstance(f, Not) and isinstance(f.operand, Var))


def iter_nodes(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal, left to right."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.operand)
        elif isinstance(node, _Junction):
            stack.extend(reversed(node.operands))


def variables(f: Formula) -> tuple[str, ...]:
    """Variable names in order of first occurrence."""
    seen: dict[str, None] = {}
    for node in iter_nodes(f):
        if isinstance(node, Var):
            seen.setdefault(node.name, None)
    return tuple(seen)


def evaluate(f: Formula, assignment: Assignment) -> bool:
    for name in variables(f):
        if name not in assignment:
            raise UnassignedVariable(name)
    return _eval(f, assignment)


def _eval(f: Formula, assignment: Assignment) -> bool:
    if isinstance(f, TrueConst):
        return True
    if isinstance(f, FalseConst):
        return False
    if isinstance(f, Var):
        return bool(assignment[f.name])
    if isinstance(f, Not):
        return not _eval(f.operand, assignment)
    if isinstance(f, And):
        return all(_eval(op, assignment) for op in f.operands)
    if isinstance(f, Or):
        return any(_eval(op, assignment) for op in f.operands)
    raise TypeError(f"not a formula: {f!r}")


def _simplify_junction(f: _Junction) -> Formula:
    kind = type(f)
    absorbing = FALSE if kind is And else TRUE
    neutral = kind._neutral
    flat: list[Formula] = []
    for op in f.operands:
        op = simplify(op)
        if type(op) is kind:
            flat.extend(op.operands)
        else:
            flat.append(op)
    kept: dict[Formula, None] = {}
    for op in flat:
        if op == absorbing:
            return absorbing
        if op == neutral:
            continue
        kept.setdefault(op, None)
    for op in kept:
        if Not(op) in kept:
            return absorbing
    return kind(*kept)


def simplify(f: Formula) -> Formula:
    """Local clean-up: constant folding, double negation, flattening of nested
    same-kind junctions, duplicate removal and ``x``/``!x`` complement pairs."""
    if isinstance(f, Not):
        inner = simplify(f.operand)
        if inner == TRUE:
            return FALSE
        if inner == FALSE:
            return TRUE
        if isinstance(inner, Not):
            return inner.operand
        return Not(inner)
    if isinstance(f, _Junction):
        return _simplify_junction(f)
    return f


def _replace(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    if isinstance(f, Var):
        return mapping.get(f.name, f)
    if isinstance(f, Not):
        return Not(_replace(f.operand, mapping))
    if isinstance(f, _Junction):
        return type(f)(*(_replace(op, mapping) for op in f.operands))
    return f


def substitute(f: Formula, var: str, value: bool) -> Formula:
    return substitute_all(f, {var: value})


def substitute_all(f: Formula, values: Mapping[str, bool]) -> Formula:
    mapping = {name: (TRUE if val else FALSE) for name, val in values.items()}
    return simplify(_replace(f, mapping))


def conjoin(parts: Iterable[Formula]) -> Formula:
    """``And`` over the parts with ``TrueConst`` operands left out."""
    return And(*(p for p in parts if p != TRUE))


def xor(a: Formula, b: Formula) -> Formula:
    return Or(And(a, Not(b)), And(Not(a), b))


_PREC_OR, _PREC_AND, _PREC_NOT = 1, 2, 3


def _prec(f: Formula) -> int:
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    return _PREC_NOT + 1


def to_string(f: Formula) -> str:
    """Surface syntax: ``!``, ``&&``, ``||``, parentheses, ``true``/``false``.

    Nested junctions are always parenthesized so parsing the output gives back
    the same structure.
    """
    if isinstance(f, TrueConst):
        return "true"
    if isinstance(f, FalseConst):
        return "false"
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        inner = to_string(f.operand)
        if isinstance(f.operand, _Junction):
            inner = f"({inner})"
        return "!" + inner
    sep = " && " if isinstance(f, And) else " || "
    parts = []
    for op in f.operands:
        text = to_string(op)
        if isinstance(op, _Junction):
            text = f"({text})"
        parts.append(text)
    return sep.join(parts)
