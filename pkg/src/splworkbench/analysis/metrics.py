"""File-level size metrics: delivered lines, feature lines and their ratio."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..extract.codeblocks import CODE, DEFAULT_VAR_REGEX, SourceFileBlocks
from ..extract.models import BuildModel, VariabilityModel
from ..logic import TRUE, simplify, variables
from .tables import ResultTable

METRIC_COLUMNS = ("Source", "DLoC", "LoF", "PLoF")


@dataclass(frozen=True)
class FileMetrics:
    path: str
    dloc: int
    lof: int

    @property
    def plof(self) -> Fraction:
        # percentage kept exact; rounding is the writer's job
        return Fraction(100 * self.lof, self.dloc) if self.dloc else Fraction(0)


def file_metrics(sf: SourceFileBlocks, is_variable) -> FileMetrics:
    pcs = sf.line_presence_conditions()
    feature_pc: dict = {}
    dloc = lof = 0
    for line_no, kind in enumerate(sf.line_kinds, start=1):
        if kind != CODE:
            continue
        dloc += 1
        pc = pcs[line_no]
        if pc not in feature_pc:
            pc_s = simplify(pc)
            feature_pc[pc] = pc_s != TRUE and any(map(is_variable, variables(pc_s)))
        lof += feature_pc[pc]
    return FileMetrics(sf.path, dloc, lof)


def metrics_per_file(
    code: Iterable[SourceFileBlocks],
    build: BuildModel | None = None,
    vm: VariabilityModel | None = None,
    var_regex: str = DEFAULT_VAR_REGEX,
) -> ResultTable:
    """One row per source file.

    A variable counts when it matches ``var_regex`` or is declared by the
    variability model. The build model is accepted for wiring symmetry and
    does not change the counts.
    """
    pattern = re.compile(var_regex)
    known = set(vm.names) if vm is not None else set()

    def is_variable(name: str) -> bool:
        return name in known or pattern.fullmatch(name) is not None

    rows = []
    for sf in sorted(code, key=lambda s: s.path):
        m = file_metrics(sf, is_variable)
        rows.append((m.path, m.dloc, m.lof, m.plof))
    return ResultTable("MetricsPerFile", METRIC_COLUMNS, rows)
