"""Experiment execution: extraction pipelines, analysis wiring, outputs."""

from __future__ import annotations

import json
import logging
import threading
import time
from concurrent.futures import Future, InvalidStateError
from concurrent.futures import TimeoutError as FutureTimeout
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable

from .. import __version__
from ..analysis import (
    configuration_mismatches,
    effect_table,
    feature_effect,
    filter_relevant,
    metrics_per_file,
    missing_features,
    pc_finder,
    pc_table,
    undead_analysis,
)
from ..analysis.tables import ResultTable
from ..errors import AnalysisFailed, ExtractorTimeout, WorkbenchError
from ..extract.build_csv import parse_build_model_csv
from ..extract.codeblocks import list_source_files, read_source, scan_source_tree
from ..extract.dimacs import parse_dimacs
from ..extract.kbuild import parse_kbuild_tree
from .cache import HASH_ALGORITHM, ModelCache, bytes_digest, cache_key, file_digest, tree_digest
from .config import ExperimentConfig, resolved_snapshot
from .dsl import PipelineNode, bind_inputs
from .logsetup import run_logging
from .output import atomic_write, render_table, unique_path
from .plan import PIPELINE_PREFIX, ExperimentPlan, validate_config
from .registry import BUILD, CODE, EFFECTS, PCS, TERMINALS, VM
from .stream import Stream

log = logging.getLogger("splworkbench.engine")

PIPELINE_ORDER = (CODE, BUILD, VM)


@dataclass
class RunResult:
    manifest: dict
    manifest_path: Path
    outputs: list[Path]
    archive_path: Path | None = None
    tables: dict[str, ResultTable] = field(default_factory=dict)


def utc_stamp(now: datetime | None = None) -> str:
    return (now or datetime.now(timezone.utc)).strftime("%Y%m%d-%H%M%S")


def _spawn(name: str, fn: Callable, *args) -> Future:
    """Run ``fn`` on a daemon thread so an abandoned pipeline never blocks exit."""
    fut: Future = Future()

    def target():
        if not fut.set_running_or_notify_cancel():
            return
        try:
            result = fn(*args)
        except BaseException as exc:  # handed to whoever waits on the future
            try:
                fut.set_exception(exc)
            except InvalidStateError:
                pass
        else:
            try:
                fut.set_result(result)
            except InvalidStateError:
                pass

    threading.Thread(target=target, name=name, daemon=True).start()
    return fut


# -- extraction ---------------------------------------------------------------

class _Extraction:
    def __init__(self, plan: ExperimentPlan, sequential: bool):
        self.plan = plan
        self.sequential = sequential
        self.cache = ModelCache(plan.cache_dir)
        self.code = Stream("code") if CODE in plan.pipelines else None
        self.futures: dict[str, Future] = {}
        self.warnings: dict[str, list[str]] = {k: [] for k in PIPELINE_ORDER}
        self.cancel = {k: threading.Event() for k in PIPELINE_ORDER}

    def _cached(self, kind, key, input_hash, source, settings):
        if not settings.cache_read:
            return None
        hit = self.cache.read(kind, key, input_hash, source, self.warnings[kind])
        if hit is None:
            return None
        model, stored = hit
        self.warnings[kind].extend(stored)
        return model

    def _store(self, kind, key, input_hash, model, settings, warnings):
        if settings.cache_write:
            self.cache.write(kind, key, input_hash, model, warnings)

    def run_code(self) -> dict:
        try:
            return self._run_code()
        except BaseException as exc:
            self.code.fail(exc)
            raise

    def _run_code(self) -> dict:
        plan, settings = self.plan, self.plan.pipelines[CODE]
        started = time.monotonic()
        rels = list_source_files(plan.source_tree, plan.file_regex)
        input_hash = tree_digest(plan.source_tree, rels)
        params = {
            "extractor": settings.extractor,
            "file_regex": plan.file_regex,
            "variable_regex": plan.variable_regex,
            "handle_macros": plan.handle_macros,
        }
        key = cache_key("code", params, input_hash)
        files = self._cached("code", key, input_hash, None, settings)
        status = "hit" if files is not None else ("miss" if settings.cache_read else "off")
        if files is not None:
            for sf in files:
                self.code.put(sf)
        else:
            local: list[str] = []
            files = scan_source_tree(
                plan.source_tree, plan.file_regex, plan.handle_macros, plan.variable_regex,
                local, 1 if self.sequential else plan.code_threads, self.cancel[CODE], self.code.put,
            )
            self.warnings[CODE].extend(local)
            if self.cancel[CODE].is_set():
                return {}
            self._store("code", key, input_hash, files, settings, local)
        self.code.close()
        logging.getLogger("splworkbench.code").info("code model: %d files (cache %s)", len(files), status)
        return {
            "extractor": settings.extractor, "input_hash": input_hash, "cache_key": key,
            "cache": status, "files": len(files), "seconds": time.monotonic() - started,
        }

    def run_build(self):
        plan, settings = self.plan, self.plan.pipelines[BUILD]
        started = time.monotonic()
        if settings.extractor == "CsvBuildModel":
            input_hash = file_digest(plan.csv_path)
            params = {"extractor": settings.extractor}
            source = str(plan.csv_path)
        else:
            rels = list_source_files(plan.source_tree, ".*")
            names = set(plan.entry_makefiles)
            listing = "\n".join(rels).encode("utf-8")
            makefiles = [r for r in rels if r.rsplit("/", 1)[-1] in names]
            input_hash = bytes_digest(
                (bytes_digest(listing) + tree_digest(plan.source_tree, makefiles)).encode("ascii"))
            params = {"extractor": settings.extractor, "entry_makefiles": list(plan.entry_makefiles)}
            source = None
        key = cache_key("build", params, input_hash)
        model = self._cached("build", key, input_hash, source, settings)
        status = "hit" if model is not None else ("miss" if settings.cache_read else "off")
        if model is None:
            local: list[str] = []
            if settings.extractor == "CsvBuildModel":
                model = parse_build_model_csv(read_source(plan.csv_path), source)
            else:
                model = parse_kbuild_tree(plan.source_tree, plan.entry_makefiles, local)
            self.warnings[BUILD].extend(local)
            self._store("build", key, input_hash, model, settings, local)
        logging.getLogger("splworkbench.build").info("build model: %d files (cache %s)", len(model.pcs), status)
        info = {
            "extractor": settings.extractor, "input_hash": input_hash, "cache_key": key,
            "cache": status, "files": len(model.pcs), "seconds": time.monotonic() - started,
        }
        return model, info

    def run_vm(self):
        plan, settings = self.plan, self.plan.pipelines[VM]
        started = time.monotonic()
        input_hash = file_digest(plan.vm_file)
        key = cache_key("vm", {"extractor": settings.extractor}, input_hash)
        source = str(plan.vm_file)
        model = self._cached("vm", key, input_hash, source, settings)
        status = "hit" if model is not None else ("miss" if settings.cache_read else "off")
        if model is None:
            local: list[str] = []
            model = parse_dimacs(read_source(plan.vm_file), source, local)
            self.warnings[VM].extend(local)
            self._store("vm", key, input_hash, model, settings, local)
        logging.getLogger("splworkbench.vm").info("variability model: %d variables (cache %s)", len(model.variables), status)
        info = {
            "extractor": settings.extractor, "input_hash": input_hash, "cache_key": key,
            "cache": status, "variables": len(model.variables), "seconds": time.monotonic() - started,
        }
        return model, info

    def start(self, kind: str) -> Future:
        runner = {CODE: self.run_code, BUILD: self.run_build, VM: self.run_vm}[kind]
        self.futures[kind] = _spawn(f"extract-{kind}", runner)
        return self.futures[kind]

    def wait(self, kind: str, started: float) -> None:
        timeout_ms = self.plan.pipelines[kind].timeout_ms
        fut = self.futures[kind]
        remaining = None
        if timeout_ms:
            remaining = max(0.0, started + timeout_ms / 1000 - time.monotonic())
        try:
            fut.result(timeout=remaining)
        except FutureTimeout:
            error = ExtractorTimeout(PIPELINE_PREFIX[kind], timeout_ms)
            self.cancel[kind].set()
            if kind == CODE:
                self.code.fail(error)
            try:
                fut.set_exception(error)
            except InvalidStateError:
                pass
            log.error("%s", error)
            raise error from None

    def model(self, kind: str):
        if kind == CODE:
            return self.code
        return self.futures[kind].result()[0]

    def info(self, kind: str) -> dict:
        result = self.futures[kind].result()
        return result if kind == CODE else result[1]

    def abandon(self) -> None:
        for event in self.cancel.values():
            event.set()
        if self.code is not None and not self.code.closed:
            self.code.fail(WorkbenchError("run aborted"))


# -- analyses -----------------------------------------------------------------

def _apply(node: PipelineNode, inputs: dict, plan: ExperimentPlan, vm_of: Callable, warnings: list):
    name = node.name
    code, build, vm = inputs.get(CODE), inputs.get(BUILD), inputs.get(VM)
    if name == "PcFinder":
        value = pc_finder(code, build, plan.combine_build_pc, warnings)
        return value, pc_table(value)
    if name == "FeatureEffectFinder":
        entries = feature_effect(inputs[PCS])
        if plan.relevant_features_only:
            entries = filter_relevant(entries, vm_of())
        return entries, effect_table(entries)
    if name == "ConfigurationMismatches":
        table = configuration_mismatches(inputs[EFFECTS], vm)
    elif name == "UnDeadAnalysis":
        table = undead_analysis(code, build, vm, warnings)
    elif name == "MissingFeatures":
        table = missing_features(list(code), build, vm, plan.variable_regex)
    elif name == "MetricsPerFile":
        table = metrics_per_file(code, build, vm, plan.variable_regex)
    else:
        raise ValueError(f"no implementation for {name}")
    return table, table


class _Analyses:
    def __init__(self, plan: ExperimentPlan, extraction: _Extraction):
        self.plan = plan
        self.extraction = extraction
        self.nodes = [n for n in plan.root.walk()]
        self.index = {id(n): i for i, n in enumerate(self.nodes)}
        self.results: dict[int, Future] = {}
        self.tables: dict[int, ResultTable] = {}
        self.warnings: dict[int, list[str]] = {}
        self.seconds: dict[int, float] = {}

    def _vm(self):
        return self.extraction.model(VM) if VM in self.plan.pipelines else None

    def _value(self, node: PipelineNode):
        kind = TERMINALS.get(node.name)
        if kind is not None:
            return self.extraction.model(kind)
        return self.results[self.index[id(node)]].result()[0]

    def compute(self, node: PipelineNode):
        i = self.index[id(node)]
        started = time.monotonic()
        inputs = {kind: self._value(arg) for kind, arg in bind_inputs(node).items()}
        warnings = self.warnings.setdefault(i, [])
        try:
            value, table = _apply(node, inputs, self.plan, self._vm, warnings)
        except WorkbenchError:
            raise
        except Exception as exc:
            raise AnalysisFailed(node.name, exc) from exc
        self.tables[i] = table
        self.seconds[i] = time.monotonic() - started
        logging.getLogger(f"splworkbench.analysis.{node.name}").info("%d result rows", len(table.rows))
        return value, table

    def stages(self) -> list[tuple[int, PipelineNode]]:
        return [(i, n) for i, n in enumerate(self.nodes) if n.name not in TERMINALS]

    def run_parallel(self) -> None:
        for i, node in self.stages():
            self.results[i] = _spawn(f"analysis-{node.name}", self.compute, node)

    def run_sequential(self) -> None:
        for i, node in self.stages():
            fut: Future = Future()
            fut.set_result(self.compute(node))
            self.results[i] = fut

    def root_result(self, timeout: float | None = None):
        return self.results[len(self.nodes) - 1].result(timeout)


# -- run ----------------------------------------------------------------------

def _logical_names(analyses: _Analyses, ext: str, intermediates: bool) -> list[tuple[int, str]]:
    stages = analyses.stages()
    chosen = stages if intermediates else stages[-1:]
    seen: dict[str, int] = {}
    out = []
    for i, node in chosen:
        seen[node.name] = seen.get(node.name, 0) + 1
        suffix = "" if seen[node.name] == 1 else f"_{seen[node.name]}"
        out.append((i, f"{node.name}{suffix}"))
    return out


def run_experiment(
    config: ExperimentConfig | ExperimentPlan,
    verify: Callable[[list[dict]], tuple[dict, Exception | None]] | None = None,
) -> RunResult:
    """Validate, extract, analyse and write results, the manifest and the archive."""
    plan = config if isinstance(config, ExperimentPlan) else validate_config(config)
    now = datetime.now(timezone.utc)
    stamp = utc_stamp(now)
    log_path = unique_path(plan.log_dir, f"splworkbench_{stamp}", ".log") if plan.log_file else None
    with run_logging(plan.log_level, plan.log_console, log_path):
        return _run(plan, now, stamp, log_path, verify)


def _run(plan, now, stamp, log_path, verify) -> RunResult:
    began = time.monotonic()
    sequential = plan.force_sequential
    log.info("analysis %s (%s)", plan.root, "sequential" if sequential else "parallel")
    for message in plan.config.warnings:
        log.warning("config: %s", message)
    extraction = _Extraction(plan, sequential)
    analyses = _Analyses(plan, extraction)
    kinds = [k for k in PIPELINE_ORDER if k in plan.pipelines]
    try:
        if sequential:
            for kind in kinds:
                started = time.monotonic()
                extraction.start(kind)
                extraction.wait(kind, started)
            analyses.run_sequential()
        else:
            started = time.monotonic()
            for kind in kinds:
                extraction.start(kind)
            analyses.run_parallel()
            for kind in kinds:
                extraction.wait(kind, started)
        analyses.root_result()
        for i, _ in analyses.stages():
            analyses.results[i].result()
    except BaseException:
        extraction.abandon()
        raise

    ext = ".csv" if plan.output_format == "csv" else ".json"
    plan.output_dir.mkdir(parents=True, exist_ok=True)
    outputs, records, tables = [], [], {}
    for i, logical in _logical_names(analyses, ext, plan.report_intermediates):
        data = render_table(analyses.tables[i], plan.output_format, plan.round_decimals)
        target = unique_path(plan.output_dir, f"{logical}_{stamp}", ext)
        atomic_write(target, data)
        outputs.append(target)
        tables[logical + ext] = analyses.tables[i]
        records.append({
            "logical_name": logical + ext,
            "file": target.name,
            "stage": analyses.nodes[i].name,
            HASH_ALGORITHM: bytes_digest(data),
            "rows": len(analyses.tables[i].rows),
        })
        log.info("wrote %s", target)

    warnings = list(plan.config.warnings)
    for kind in kinds:
        warnings.extend(extraction.warnings[kind])
    for i, _ in analyses.stages():
        warnings.extend(analyses.warnings.get(i, []))
    warnings = list(dict.fromkeys(warnings))

    timings = {f"extract.{PIPELINE_PREFIX[kind]}": extraction.info(kind)["seconds"] for kind in kinds}
    for i, node in analyses.stages():
        timings[f"analysis.{i}.{node.name}"] = analyses.seconds[i]
    timings["total"] = time.monotonic() - began

    archive_path = unique_path(plan.archive_dir, f"experiment_{stamp}", ".zip") if plan.archive else None
    manifest = {
        "tool": "splworkbench",
        "version": __version__,
        "hash_algorithm": HASH_ALGORITHM,
        "created": now.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "config_source": str(plan.config.source_file) if plan.config.source_file else None,
        "config": resolved_snapshot(plan.config),
        "pipeline": str(plan.root),
        "force_sequential": plan.force_sequential,
        "inputs": {PIPELINE_PREFIX[k]: {x: v for x, v in extraction.info(k).items() if x != "seconds"}
                   for k in kinds},
        "outputs": records,
        "logs": [log_path.name] if log_path else [],
        "timings": timings,
        "warnings": warnings,
        "archive": archive_path.name if archive_path else None,
        "archive_includes_inputs": plan.archive_inputs if archive_path else False,
    }
    failure = None
    if verify is not None:
        extra, failure = verify(records)
        manifest.update(extra)
    manifest_path = unique_path(plan.output_dir, f"manifest_{stamp}", ".json")
    atomic_write(manifest_path, (json.dumps(manifest, indent=2) + "\n").encode("utf-8"))
    log.info("wrote %s", manifest_path)

    if archive_path is not None:
        from .archive import create_archive

        for handler in logging.getLogger("splworkbench").handlers:
            handler.flush()
        create_archive(plan, manifest_path, outputs, [log_path] if log_path else [], archive_path)
        log.info("archived experiment to %s", archive_path)
    if failure is not None:
        raise failure
    return RunResult(manifest, manifest_path, outputs, archive_path, tables)
