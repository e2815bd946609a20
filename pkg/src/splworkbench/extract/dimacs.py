"""DIMACS CNF reading and writing for variability models.

Variable names come from ``c <id> <name>`` comment lines; ids without one
are called ``VAR_<id>``.
"""

from __future__ import annotations

import logging
import re

from ..errors import DimacsError, LiteralOutOfRange, MalformedHeader, MissingTerminator
from ..logic import And, Formula, Not, Or, Var, is_literal
from .models import VariabilityModel

log = logging.getLogger("splworkbench.vm")

_NAME_COMMENT = re.compile(r"c\s+(\d+)\s+(\S+)\s*$")


def parse_dimacs(text: str, source_path: str | None = None, warnings: list[str] | None = None) -> VariabilityModel:
    names: dict[int, str] = {}
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line[0] == "c":
            m = _NAME_COMMENT.match(line)
            if m:
                names[int(m.group(1))] = m.group(2)
            continue
        if line[0] == "%":
            break
        if line[0] == "p":
            if header is not None:
                raise MalformedHeader(f"second header on line {line_no}")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf" or not all(re.fullmatch(r"\d+", p) for p in parts[2:]):
                raise MalformedHeader(f"line {line_no}: {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise MalformedHeader(f"clause data before the 'p cnf' header on line {line_no}")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsError(f"line {line_no}: invalid literal {token!r}") from None
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
                continue
            if abs(lit) > header[0]:
                raise LiteralOutOfRange(lit, header[0])
            pending.append(lit)

    if header is None:
        raise MalformedHeader("missing 'p cnf' header")
    if pending:
        raise MissingTerminator()
    num_vars, num_clauses = header
    if num_clauses != len(clauses):
        message = f"header declares {num_clauses} clauses, found {len(clauses)}"
        log.warning(message)
        if warnings is not None:
            warnings.append(message)
    for vid in names:
        if not 1 <= vid <= num_vars:
            raise LiteralOutOfRange(vid, num_vars)

    variables = tuple((names.get(i, f"VAR_{i}"), i) for i in range(1, num_vars + 1))
    seen: set[str] = set()
    for name, vid in variables:
        if name in seen:
            raise DimacsError(f"variable name {name!r} is used for more than one id")
        seen.add(name)
    by_id = dict((vid, name) for name, vid in variables)

    def literal(lit: int) -> Formula:
        var = Var(by_id[abs(lit)])
        return var if lit > 0 else Not(var)

    constraint = And(*(Or(*(literal(l) for l in clause)) for clause in clauses))
    return VariabilityModel(variables, constraint, source_path, tuple(clauses))


def _clauses_of(vm: VariabilityModel) -> list[tuple[int, ...]]:
    if vm.clauses or vm.constraint == And():
        return list(vm.clauses)
    ids = dict(vm.variables)
    f = vm.constraint
    conjuncts = f.operands if isinstance(f, And) else (f,)
    out = []
    for conj in conjuncts:
        lits = conj.operands if isinstance(conj, Or) else (conj,)
        clause = []
        for lit in lits:
            if not is_literal(lit):
                raise ValueError("variability model constraint is not in clause form")
            if isinstance(lit, Var):
                clause.append(ids[lit.name])
            else:
                clause.append(-ids[lit.operand.name])
        out.append(tuple(clause))
    return out


def write_dimacs(vm: VariabilityModel) -> str:
    clauses = _clauses_of(vm)
    lines = [f"c {vid} {name}" for name, vid in vm.variables]
    num_vars = max((vid for _, vid in vm.variables), default=0)
    lines.append(f"p cnf {num_vars} {len(clauses)}")
    lines.extend(" ".join(map(str, clause + (0,))) for clause in clauses)
    return "\n".join(lines) + "\n"


def load_dimacs(path) -> VariabilityModel:
    from pathlib import Path

    path = Path(path)
    return parse_dimacs(path.read_text(encoding="utf-8"), str(path))
