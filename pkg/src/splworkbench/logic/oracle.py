"""Exhaustive truth-table evaluation, used as the reference for the SAT path."""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from ..errors import TooManyVariables, UnassignedVariable
from .formula import And, FalseConst, Formula, Not, Or, TrueConst, Var, variables, xor
from .sat import is_satisfiable

MAX_ENUM_VARS = 24
_CHUNK_BITS = 16


def _eval_columns(f: Formula, columns: dict[str, np.ndarray], size: int) -> np.ndarray:
    if isinstance(f, TrueConst):
        return np.ones(size, dtype=bool)
    if isinstance(f, FalseConst):
        return np.zeros(size, dtype=bool)
    if isinstance(f, Var):
        return columns[f.name]
    if isinstance(f, Not):
        return ~_eval_columns(f.operand, columns, size)
    parts = [_eval_columns(op, columns, size) for op in f.operands]
    if isinstance(f, And):
        return np.logical_and.reduce(parts)
    if isinstance(f, Or):
        return np.logical_or.reduce(parts)
    raise TypeError(f"not a formula: {f!r}")


def _check_vars(formulas: Sequence[Formula], names: Sequence[str]) -> None:
    if len(names) > MAX_ENUM_VARS:
        raise TooManyVariables(len(names), MAX_ENUM_VARS)
    known = set(names)
    for f in formulas:
        for name in variables(f):
            if name not in known:
                raise UnassignedVariable(name)


def _chunks(names: Sequence[str]) -> Iterator[tuple[np.ndarray, dict[str, np.ndarray]]]:
    n = len(names)
    total = 1 << n
    step = 1 << _CHUNK_BITS
    for start in range(0, total, step):
        rows = np.arange(start, min(total, start + step), dtype=np.int64)
        columns = {name: ((rows >> (n - 1 - j)) & 1).astype(bool) for j, name in enumerate(names)}
        yield rows, columns


def truth_table(f: Formula, names: Sequence[str]) -> np.ndarray:
    """Boolean vector over all ``2**len(names)`` rows; row ``i`` sets variable
    ``j`` to bit ``len(names)-1-j`` of ``i``."""
    _check_vars([f], names)
    out = [_eval_columns(f, cols, len(rows)) for rows, cols in _chunks(names)]
    return np.concatenate(out) if out else np.zeros(0, dtype=bool)


def enumerate_models(f: Formula, names: Sequence[str]) -> list[dict[str, bool]]:
    """All satisfying assignments over ``names`` in lexicographic order
    (``False`` before ``True``, first name most significant)."""
    names = list(names)
    table = truth_table(f, names)
    n = len(names)
    models = []
    for row in np.flatnonzero(table):
        row = int(row)
        models.append({name: bool((row >> (n - 1 - j)) & 1) for j, name in enumerate(names)})
    return models


def equivalent(f: Formula, g: Formula) -> bool:
    names = list(dict.fromkeys(variables(f) + variables(g)))
    if len(names) > MAX_ENUM_VARS:
        return not is_satisfiable(xor(f, g))
    for rows, cols in _chunks(names):
        if not np.array_equal(_eval_columns(f, cols, len(rows)), _eval_columns(g, cols, len(rows))):
            return False
    return True
