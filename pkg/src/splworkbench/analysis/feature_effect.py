"""Presence-condition collection, feature effects and configuration mismatches."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..extract.codeblocks import SourceFileBlocks
from ..extract.models import BuildModel, VariabilityModel
from ..logic import (
    FALSE,
    TRUE,
    And,
    Formula,
    Not,
    Or,
    Var,
    conjoin,
    simplify,
    solve,
    substitute,
    to_string,
    variables,
    xor,
)
from .tables import ResultTable

PC_COLUMNS = ("feature", "presence_conditions")
FE_COLUMNS = ("feature", "effect_condition")
MISMATCH_COLUMNS = ("feature", "effect_condition", "witness")

PcMap = Mapping[str, frozenset]


@dataclass(frozen=True)
class FeatureEffectEntry:
    feature: str
    effect_condition: Formula


def pc_finder(
    code: Iterable[SourceFileBlocks],
    build: BuildModel | None = None,
    combine_build: bool = True,
    warnings: list[str] | None = None,
) -> dict[str, frozenset]:
    """Map every variable to the distinct simplified PCs it occurs in.

    With a build model and ``combine_build`` each block PC is conjoined with
    its file's build PC, and nontrivial file PCs count as PCs of their own.
    """
    found: dict[str, set[Formula]] = {}

    def add(pc: Formula) -> None:
        pc = simplify(pc)
        if pc == FALSE or pc == TRUE:
            return
        for name in variables(pc):
            found.setdefault(name, set()).add(pc)

    use_build = build is not None and combine_build
    if use_build:
        for pc in build.pcs.values():
            add(pc)
    for sf in code:
        file_pc = build.pc(sf.path, warnings) if use_build else TRUE
        for block in sf.iter_blocks():
            add(conjoin([file_pc, block.presence_condition]))
    return {name: frozenset(found[name]) for name in sorted(found)}


def sorted_pcs(pcs: Iterable[Formula]) -> list[Formula]:
    return sorted(pcs, key=to_string)


def pc_table(pcs: PcMap) -> ResultTable:
    rows = [(name, "; ".join(map(to_string, sorted_pcs(pcs[name])))) for name in sorted(pcs)]
    return ResultTable("PcFinder", PC_COLUMNS, rows)


def effect_condition(feature: str, pcs: Iterable[Formula]) -> Formula:
    parts = [
        xor(substitute(pc, feature, True), substitute(pc, feature, False))
        for pc in sorted_pcs(pcs)
    ]
    return simplify(Or(*parts))


def feature_effect(pcs: PcMap) -> list[FeatureEffectEntry]:
    return [FeatureEffectEntry(name, effect_condition(name, pcs[name])) for name in sorted(pcs)]


def filter_relevant(
    entries: Sequence[FeatureEffectEntry], vm: VariabilityModel | None
) -> list[FeatureEffectEntry]:
    if vm is None:
        return list(entries)
    return [e for e in entries if e.feature in vm]


def effect_table(entries: Sequence[FeatureEffectEntry]) -> ResultTable:
    rows = [(e.feature, to_string(e.effect_condition)) for e in entries]
    return ResultTable("FeatureEffectFinder", FE_COLUMNS, rows)


def format_witness(model: Mapping[str, bool]) -> str:
    return " ".join(f"{name}={int(value)}" for name, value in sorted(model.items()))


def find_mismatches(
    entries: Sequence[FeatureEffectEntry], vm: VariabilityModel
) -> list[tuple[FeatureEffectEntry, dict[str, bool]]]:
    out = []
    for entry in sorted(entries, key=lambda e: e.feature):
        model = solve(And(vm.constraint, Var(entry.feature), Not(entry.effect_condition)))
        if model is not None:
            out.append((entry, model))
    return out


def configuration_mismatches(entries: Sequence[FeatureEffectEntry], vm: VariabilityModel) -> ResultTable:
    rows = [
        (entry.feature, to_string(entry.effect_condition), format_witness(model))
        for entry, model in find_mismatches(entries, vm)
    ]
    return ResultTable("ConfigurationMismatches", MISMATCH_COLUMNS, rows)
