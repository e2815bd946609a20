"""Compiled-in components, keyed by short name."""

from __future__ import annotations

from dataclasses import dataclass

CODE, BUILD, VM = "code", "build", "vm"
PCS, EFFECTS, TABLE = "pcs", "effects", "table"

TERMINALS = {"cmComponent": CODE, "bmComponent": BUILD, "vmComponent": VM}


@dataclass(frozen=True)
class Component:
    name: str
    output: str
    inputs: tuple[str, ...] = ()
    optional: tuple[str, ...] = ()
    description: str = ""

    @property
    def min_arity(self) -> int:
        return len(self.inputs)

    @property
    def max_arity(self) -> int:
        return len(self.inputs) + len(self.optional)

    def arity_text(self) -> str:
        lo, hi = self.min_arity, self.max_arity
        return str(lo) if lo == hi else f"{lo}-{hi}"


@dataclass(frozen=True)
class Extractor:
    name: str
    kind: str
    description: str = ""


ANALYSES = {
    c.name: c
    for c in (
        Component("cmComponent", CODE, description="code model from the configured code extractor"),
        Component("bmComponent", BUILD, description="build model from the configured build extractor"),
        Component("vmComponent", VM, description="variability model from the configured extractor"),
        Component("PcFinder", PCS, (CODE,), (BUILD,), "presence conditions per variable"),
        Component("FeatureEffectFinder", EFFECTS, (PCS,), (), "feature effect conditions"),
        Component("ConfigurationMismatches", TABLE, (EFFECTS, VM), (),
                  "features the model lets you select where they have no effect"),
        Component("UnDeadAnalysis", TABLE, (CODE, BUILD, VM), (), "dead code blocks"),
        Component("MissingFeatures", TABLE, (CODE, BUILD, VM), (),
                  "variables used in code or build files but not modeled"),
        Component("MetricsPerFile", TABLE, (CODE,), (BUILD, VM), "DLoC, LoF and PLoF per file"),
    )
}

EXTRACTORS = {
    e.name: e
    for e in (
        Extractor("CodeBlockExtractor", CODE, "preprocessor blocks with presence conditions"),
        Extractor("KbuildExtractor", BUILD, "file presence conditions from Kbuild/Makefile rules"),
        Extractor("CsvBuildModel", BUILD, "file presence conditions from a path,presence_condition CSV"),
        Extractor("DimacsVmExtractor", VM, "variability model from a DIMACS file"),
    )
}

ANALYSIS_ALIASES = {"MetricsRunner": "MetricsPerFile"}

PIPELINE_ANALYSIS = "ConfiguredPipelineAnalysis"


def lookup(name: str) -> Component | None:
    short = name.rsplit(".", 1)[-1]
    return ANALYSES.get(ANALYSIS_ALIASES.get(short, short))


def default_pipeline(name: str, has_build: bool, has_vm: bool) -> str:
    """DSL wiring used when ``analysis`` names a single component."""
    cm, bm, vm = "cmComponent()", "bmComponent()", "vmComponent()"
    pcs = f"PcFinder({cm}, {bm})" if has_build else f"PcFinder({cm})"
    wiring = {
        "PcFinder": pcs,
        "FeatureEffectFinder": f"FeatureEffectFinder({pcs})",
        "ConfigurationMismatches": f"ConfigurationMismatches(FeatureEffectFinder({pcs}), {vm})",
        "UnDeadAnalysis": f"UnDeadAnalysis({cm}, {bm}, {vm})",
        "MissingFeatures": f"MissingFeatures({cm}, {bm}, {vm})",
        "MetricsPerFile": "MetricsPerFile(" + ", ".join(
            [cm] + ([bm] if has_build else []) + ([vm] if has_vm else [])) + ")",
    }
    return wiring[name]


def describe() -> list[str]:
    lines = [f"{c.name}/{c.arity_text()}  {c.description}" for c in ANALYSES.values()]
    lines += [f"{e.name} ({e.kind} extractor)  {e.description}" for e in EXTRACTORS.values()]
    return lines
