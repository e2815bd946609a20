"""Validation of a configuration into an executable plan."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..errors import ConfigError, ConfigInvalid, DslError
from ..extract.codeblocks import DEFAULT_VAR_REGEX
from .config import ExperimentConfig
from .dsl import PipelineNode, check_pipeline, parse_pipeline_dsl
from .registry import (
    ANALYSES,
    ANALYSIS_ALIASES,
    BUILD,
    CODE,
    EXTRACTORS,
    PIPELINE_ANALYSIS,
    TERMINALS,
    VM,
    default_pipeline,
)

DEFAULT_FILE_REGEX = r".*\.(c|h|S)"
LOG_LEVELS = ("debug", "info", "warning", "error")
PIPELINE_PREFIX = {CODE: "code", BUILD: "build", VM: "variability"}


@dataclass(frozen=True)
class PipelineSettings:
    kind: str
    extractor: str
    timeout_ms: int
    cache_read: bool
    cache_write: bool


@dataclass(frozen=True)
class ExperimentPlan:
    config: ExperimentConfig
    pipelines: dict[str, PipelineSettings]
    root: PipelineNode
    source_tree: Path | None
    output_dir: Path
    cache_dir: Path
    log_dir: Path
    archive_dir: Path
    file_regex: str
    variable_regex: str
    handle_macros: bool
    code_threads: int
    csv_path: Path | None
    entry_makefiles: tuple[str, ...]
    vm_file: Path | None
    output_format: str
    round_decimals: int
    relevant_features_only: bool
    force_sequential: bool
    report_intermediates: bool
    combine_build_pc: bool
    log_level: str
    log_console: bool
    log_file: bool
    archive: bool
    archive_inputs: bool

    @property
    def analysis_name(self) -> str:
        return self.root.name


def _regex(cfg: ExperimentConfig, key: str, default: str, problems: list[str]) -> str:
    value = cfg.get(key, default)
    try:
        re.compile(value)
    except re.error as exc:
        problems.append(f"{key}: invalid regular expression {value!r} ({exc})")
    return value


def validate_config(cfg: ExperimentConfig) -> ExperimentPlan:
    """Check every key the selected components need; raise ConfigInvalid listing all problems."""
    problems: list[str] = []

    def guarded(fn, *args, default=None):
        try:
            return fn(*args)
        except ConfigError as exc:
            problems.append(str(exc))
            return default

    pipelines: dict[str, PipelineSettings] = {}
    for kind, prefix in PIPELINE_PREFIX.items():
        name = cfg.component(f"{prefix}.extractor")
        if name is None:
            continue
        extractor = EXTRACTORS.get(name)
        if extractor is None or extractor.kind != kind:
            problems.append(f"{prefix}.extractor: {name} is not a known {kind} extractor")
            continue
        timeout = guarded(cfg.get_int, f"{prefix}.provider.timeout", 0, default=0)
        if timeout < 0:
            problems.append(f"{prefix}.provider.timeout must not be negative")
        pipelines[kind] = PipelineSettings(
            kind, name, max(timeout, 0),
            guarded(cfg.get_bool, f"{prefix}.provider.cache.read", False, default=False),
            guarded(cfg.get_bool, f"{prefix}.provider.cache.write", False, default=False),
        )

    source_tree = cfg.path("source_tree")
    kbuild = BUILD in pipelines and pipelines[BUILD].extractor == "KbuildExtractor"
    if CODE in pipelines or kbuild:
        if source_tree is None:
            problems.append("source_tree is required by the configured extractors")
        elif not source_tree.is_dir():
            problems.append(f"source_tree {source_tree} is not a directory")

    csv_path = cfg.path("build.extractor.csv_path")
    if BUILD in pipelines and pipelines[BUILD].extractor == "CsvBuildModel":
        if csv_path is None:
            problems.append("build.extractor.csv_path is required by CsvBuildModel")
        elif not csv_path.is_file():
            problems.append(f"build.extractor.csv_path {csv_path} does not exist")
    vm_file = cfg.path("variability.input_file")
    if VM in pipelines:
        if vm_file is None:
            problems.append("variability.input_file is required by DimacsVmExtractor")
        elif not vm_file.is_file():
            problems.append(f"variability.input_file {vm_file} does not exist")

    root = None
    analysis = cfg.component("analysis")
    text = cfg.get("analysis.pipeline")
    if analysis in (None, PIPELINE_ANALYSIS):
        if text is None:
            problems.append("no analysis configured: set analysis or analysis.pipeline")
    else:
        name = ANALYSIS_ALIASES.get(analysis, analysis)
        if name not in ANALYSES or name in TERMINALS:
            problems.append(f"analysis: unknown component {analysis}")
            text = None
        elif text is not None:
            problems.append(f"analysis.pipeline is only read with analysis={PIPELINE_ANALYSIS}")
            text = None
        else:
            text = default_pipeline(name, BUILD in pipelines, VM in pipelines)
    if text is not None:
        try:
            root = parse_pipeline_dsl(text)
            check_pipeline(root)
        except DslError as exc:
            problems.append(f"analysis.pipeline: {exc}")
            root = None
    if root is not None:
        for node in root.walk():
            kind = TERMINALS.get(node.name)
            if kind is not None and kind not in pipelines:
                users = sorted({n.name for n in root.walk() if node in n.args})
                problems.append(
                    f"{', '.join(users) or node.name} requires a {PIPELINE_PREFIX[kind]} extractor "
                    f"({node.name}) but {PIPELINE_PREFIX[kind]}.extractor is not configured"
                )

    output_format = cfg.get("analysis.output.format", "csv").lower()
    if output_format not in ("csv", "json"):
        problems.append(f"analysis.output.format must be csv or json, got {output_format!r}")
    round_decimals = guarded(cfg.get_int, "analysis.round_decimals", 2, default=2)
    if round_decimals < 0:
        problems.append("analysis.round_decimals must not be negative")
    log_level = cfg.get("log.level", "info").lower()
    if log_level not in LOG_LEVELS:
        problems.append(f"log.level must be one of {', '.join(LOG_LEVELS)}, got {log_level!r}")
    threads = guarded(cfg.get_int, "code.extractor.threads", 4, default=4)
    if threads < 1:
        problems.append("code.extractor.threads must be at least 1")

    flags = {
        key: guarded(cfg.get_bool, key, default, default=default)
        for key, default in (
            ("code.extractor.handle_macros", False),
            ("analysis.relevant_features_only", False),
            ("analysis.force_sequential", False),
            ("analysis.report_intermediates", False),
            ("analysis.pc_finder.combine_build_pc", True),
            ("log.console", True),
            ("log.file", False),
            ("archive", False),
            ("archive.include_inputs", False),
        )
    }
    file_regex = _regex(cfg, "code.extractor.file_regex", DEFAULT_FILE_REGEX, problems)
    variable_regex = _regex(cfg, "code.extractor.variable_regex", DEFAULT_VAR_REGEX, problems)

    if problems:
        raise ConfigInvalid(problems)

    output_dir = cfg.path("output_dir", "output")
    entry = cfg.get("build.extractor.entry_makefiles", "Kbuild,Makefile")
    return ExperimentPlan(
        config=cfg,
        pipelines=pipelines,
        root=root,
        source_tree=source_tree,
        output_dir=output_dir,
        cache_dir=cfg.path("cache_dir", output_dir / "cache"),
        log_dir=cfg.path("log.dir", output_dir / "log"),
        archive_dir=cfg.path("archive.dir", output_dir),
        file_regex=file_regex,
        variable_regex=variable_regex,
        handle_macros=flags["code.extractor.handle_macros"],
        code_threads=threads,
        csv_path=csv_path,
        entry_makefiles=tuple(n.strip() for n in entry.split(",") if n.strip()),
        vm_file=vm_file,
        output_format=output_format,
        round_decimals=round_decimals,
        relevant_features_only=flags["analysis.relevant_features_only"],
        force_sequential=flags["analysis.force_sequential"],
        report_intermediates=flags["analysis.report_intermediates"],
        combine_build_pc=flags["analysis.pc_finder.combine_build_pc"],
        log_level=log_level,
        log_console=flags["log.console"],
        log_file=flags["log.file"],
        archive=flags["archive"],
        archive_inputs=flags["archive.include_inputs"],
    )
