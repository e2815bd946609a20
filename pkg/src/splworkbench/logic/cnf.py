"""Tseitin-style conversion of formulas to clause form."""

from __future__ import annotations

from dataclasses import dataclass, field

from .formula import FALSE, TRUE, And, Formula, Not, Or, Var, simplify, variables


@dataclass(frozen=True)
class CnfFormula:
    """Clauses over integer literals; ids above ``len(variables)`` are auxiliary."""

    variables: dict[str, int]
    clauses: tuple[tuple[int, ...], ...]
    aux_count: int = 0
    names: dict[int, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "names", {i: n for n, i in self.variables.items()})

    @property
    def num_vars(self) -> int:
        return len(self.variables) + self.aux_count

    def to_dimacs(self) -> str:
        lines = [f"c {vid} {name}" for name, vid in sorted(self.variables.items(), key=lambda kv: kv[1])]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines.extend(" ".join(map(str, clause)) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"


def _clean(clause: list[int]) -> tuple[int, ...] | None:
    seen: dict[int, None] = {}
    for lit in clause:
        if -lit in seen:
            return None
        seen.setdefault(lit, None)
    return tuple(seen)


def to_cnf(f: Formula) -> CnfFormula:
    """Equisatisfiable CNF; one auxiliary variable per distinct non-literal
    subformula that is not asserted directly at the top level."""
    g = simplify(f)
    if g == TRUE:
        return CnfFormula({}, (), 0)
    if g == FALSE:
        return CnfFormula({}, ((1,), (-1,)), 1)

    ids = {name: i for i, name in enumerate(variables(g), start=1)}
    next_id = len(ids) + 1
    memo: dict[Formula, int] = {}
    clauses: list[list[int]] = []

    def lit(node: Formula) -> int:
        nonlocal next_id
        if isinstance(node, Var):
            return ids[node.name]
        if isinstance(node, Not):
            return -lit(node.operand)
        cached = memo.get(node)
        if cached is not None:
            return cached
        children = [lit(op) for op in node.operands]
        aux = next_id
        next_id += 1
        if isinstance(node, And):
            clauses.extend([-aux, c] for c in children)
            clauses.append([aux] + [-c for c in children])
        elif isinstance(node, Or):
            clauses.extend([aux, -c] for c in children)
            clauses.append([-aux] + children)
        else:
            raise TypeError(f"unexpected node {node!r}")
        memo[node] = aux
        return aux

    def assert_true(node: Formula) -> None:
        if isinstance(node, And):
            for op in node.operands:
                assert_true(op)
        elif isinstance(node, Or):
            clauses.append([lit(op) for op in node.operands])
        else:
            clauses.append([lit(node)])

    assert_true(g)
    cleaned = []
    for clause in clauses:
        c = _clean(clause)
        if c is not None:
            cleaned.append(c)
    return CnfFormula(ids, tuple(cleaned), next_id - 1 - len(ids))
