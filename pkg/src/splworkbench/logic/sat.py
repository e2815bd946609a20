"""DPLL satisfiability check with unit propagation and pure-literal elimination.

Decisions always take the lowest-numbered unassigned variable that still
occurs in an unsatisfied clause, trying ``True`` first, so models are
reproducible.
"""

from __future__ import annotations

from typing import Sequence

from .cnf import CnfFormula, to_cnf
from .formula import Formula, variables


def dpll(num_vars: int, clauses: Sequence[Sequence[int]]) -> list[int] | None:
    """Return per-variable values (index 0 unused; 1 true, -1 false, 0 free)
    for a satisfying assignment, or ``None`` when unsatisfiable."""
    value = [0] * (num_vars + 1)
    trail: list[int] = []
    decisions: list[tuple[int, int, bool]] = []

    def assign(lit: int) -> None:
        var = lit if lit > 0 else -lit
        value[var] = 1 if lit > 0 else -1
        trail.append(var)

    def propagate() -> tuple[bool, int]:
        """Returns (no conflict, branching variable or 0 when all satisfied)."""
        while True:
            changed = False
            polarity: dict[int, int] = {}
            branch = 0
            for clause in clauses:
                free = 0
                last = 0
                satisfied = False
                for lit in clause:
                    v = value[lit if lit > 0 else -lit]
                    if v == 0:
                        free += 1
                        last = lit
                    elif (v > 0) == (lit > 0):
                        satisfied = True
                        break
                if satisfied:
                    continue
                if free == 0:
                    return False, 0
                if free == 1:
                    assign(last)
                    changed = True
                    continue
                for lit in clause:
                    var = lit if lit > 0 else -lit
                    if value[var] == 0:
                        polarity[var] = polarity.get(var, 0) | (1 if lit > 0 else 2)
                        if branch == 0 or var < branch:
                            branch = var
            if changed:
                continue
            for var, pol in polarity.items():
                if pol != 3 and value[var] == 0:
                    assign(var if pol == 1 else -var)
                    changed = True
            if not changed:
                return True, branch

    while True:
        ok, branch = propagate()
        if ok:
            if branch == 0:
                return value
            decisions.append((len(trail), branch, True))
            assign(branch)
            continue
        while decisions:
            mark, var, first = decisions.pop()
            while len(trail) > mark:
                value[trail.pop()] = 0
            if first:
                decisions.append((mark, var, False))
                assign(-var)
                break
        else:
            return None


def solve_cnf(cnf: CnfFormula) -> dict[str, bool] | None:
    result = dpll(cnf.num_vars, cnf.clauses)
    if result is None:
        return None
    return {name: result[vid] > 0 for name, vid in cnf.variables.items()}


def solve(f: Formula) -> dict[str, bool] | None:
    """A satisfying assignment over the variables of ``f`` (free ones set to
    ``False``), or ``None``."""
    model = solve_cnf(to_cnf(f))
    if model is None:
        return None
    return {name: model.get(name, False) for name in variables(f)}


def is_satisfiable(f: Formula) -> bool:
    cnf = to_cnf(f)
    return dpll(cnf.num_vars, cnf.clauses) is not None
