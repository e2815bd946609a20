"""Dead code blocks and features missing from the variability model."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..extract.codeblocks import DEFAULT_VAR_REGEX, SourceFileBlocks
from ..extract.models import BuildModel, VariabilityModel
from ..logic import TRUE, Formula, conjoin, is_satisfiable, to_string, variables
from .tables import ResultTable

CONTRADICTION = "contradiction-in-code"
DEAD_UNDER_VM = "dead-under-vm"

DEAD_COLUMNS = ("path", "start_line", "end_line", "presence_condition", "file_pc", "category")
MISSING_COLUMNS = ("feature", "location")


@dataclass(frozen=True)
class DeadBlockFinding:
    path: str
    start_line: int
    end_line: int
    block_pc: Formula
    file_pc: Formula
    category: str

    def row(self) -> tuple:
        return (
            self.path, self.start_line, self.end_line,
            to_string(self.block_pc), to_string(self.file_pc), self.category,
        )


def _file_pc(build: BuildModel | None, path: str, warnings) -> Formula:
    return TRUE if build is None else build.pc(path, warnings)


def find_dead_blocks(
    code: Iterable[SourceFileBlocks],
    build: BuildModel | None,
    vm: VariabilityModel,
    warnings: list[str] | None = None,
) -> list[DeadBlockFinding]:
    findings = []
    for sf in sorted(code, key=lambda s: s.path):
        file_pc = _file_pc(build, sf.path, warnings)
        for block in sf.iter_blocks():
            local = conjoin([file_pc, block.presence_condition])
            if is_satisfiable(conjoin([vm.constraint, local])):
                continue
            category = DEAD_UNDER_VM if is_satisfiable(local) else CONTRADICTION
            findings.append(DeadBlockFinding(
                sf.path, block.start_line, block.end_line,
                block.presence_condition, file_pc, category,
            ))
    findings.sort(key=lambda f: (f.path, f.start_line))
    return findings


def undead_analysis(code, build, vm, warnings=None) -> ResultTable:
    findings = find_dead_blocks(code, build, vm, warnings)
    return ResultTable("UnDeadAnalysis", DEAD_COLUMNS, [f.row() for f in findings])


def missing_features(
    code: Sequence[SourceFileBlocks],
    build: BuildModel | None,
    vm: VariabilityModel,
    var_regex: str = DEFAULT_VAR_REGEX,
) -> ResultTable:
    pattern = re.compile(var_regex)
    known = set(vm.names)
    first_seen: dict[str, str] = {}

    def note(formula: Formula, location: str) -> None:
        for name in variables(formula):
            if name not in known and pattern.fullmatch(name):
                first_seen.setdefault(name, location)

    for sf in sorted(code, key=lambda s: s.path):
        blocks = sorted(sf.iter_blocks(), key=lambda b: b.start_line)
        for block in blocks:
            note(block.condition, f"{sf.path}:{block.start_line}")
    if build is not None:
        for path, pc in build.pcs.items():
            note(pc, path)
    rows = sorted(first_seen.items())
    return ResultTable("MissingFeatures", MISSING_COLUMNS, rows)
