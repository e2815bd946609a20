"""Experiment archives and their re-execution.

Layout: ``config.properties``, ``manifest.json``, ``output/*``, ``log/*`` and,
when enabled, ``inputs/source_tree/**``, ``inputs/build/*``,
``inputs/variability/*``.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
import zipfile
from pathlib import Path

from ..errors import ArchiveIncomplete, ReproductionMismatch
from .cache import HASH_ALGORITHM
from .config import parse_properties, resolved_snapshot
from .plan import ExperimentPlan

log = logging.getLogger("splworkbench.archive")

_FIXED_TIME = (1980, 1, 1, 0, 0, 0)


def _add(zf: zipfile.ZipFile, name: str, data: bytes) -> None:
    info = zipfile.ZipInfo(name, _FIXED_TIME)
    info.compress_type = zipfile.ZIP_DEFLATED
    info.external_attr = 0o644 << 16
    zf.writestr(info, data)


def _tree_files(root: Path) -> list[Path]:
    found = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for name in sorted(filenames):
            path = Path(dirpath) / name
            if path.is_file():
                found.append(path)
    return found


def create_archive(plan: ExperimentPlan, manifest_path: Path, outputs, logs, dest: Path) -> Path:
    snapshot = resolved_snapshot(plan.config)
    config_text = "".join(f"{k}={v}\n" for k, v in snapshot.items())
    dest.parent.mkdir(parents=True, exist_ok=True)
    tmp = dest.with_name(f".{dest.name}.part")
    with zipfile.ZipFile(tmp, "w") as zf:
        _add(zf, "config.properties", config_text.encode("utf-8"))
        _add(zf, "manifest.json", Path(manifest_path).read_bytes())
        for path in outputs:
            _add(zf, f"output/{Path(path).name}", Path(path).read_bytes())
        for path in logs:
            _add(zf, f"log/{Path(path).name}", Path(path).read_bytes())
        if plan.archive_inputs:
            if plan.source_tree is not None:
                for path in _tree_files(plan.source_tree):
                    rel = path.relative_to(plan.source_tree).as_posix()
                    _add(zf, f"inputs/source_tree/{rel}", path.read_bytes())
            if plan.csv_path is not None and "build" in plan.pipelines:
                _add(zf, f"inputs/build/{plan.csv_path.name}", plan.csv_path.read_bytes())
            if plan.vm_file is not None and "vm" in plan.pipelines:
                _add(zf, f"inputs/variability/{plan.vm_file.name}", plan.vm_file.read_bytes())
    os.replace(tmp, dest)
    return dest


def _safe_extract(zf: zipfile.ZipFile, target: Path) -> None:
    root = target.resolve()
    for member in zf.namelist():
        dest = (target / member).resolve()
        if root != dest and root not in dest.parents:
            raise ArchiveIncomplete([f"unsafe member path {member}"])
    zf.extractall(target)


def rerun_archive(archive_path: str | Path, workdir: str | Path | None = None, overrides=None):
    """Re-execute an archived experiment and compare result hashes.

    Returns the RunResult of the new run; its manifest records the
    comparison. Raises ReproductionMismatch when any result differs.
    """
    from .engine import run_experiment

    archive_path = Path(archive_path)
    if not zipfile.is_zipfile(archive_path):
        raise ArchiveIncomplete([f"{archive_path} is not a zip archive"])
    work = Path(workdir) if workdir else Path(tempfile.mkdtemp(prefix="splworkbench-rerun-"))
    extracted = work / "archive"
    with zipfile.ZipFile(archive_path) as zf:
        names = set(zf.namelist())
        missing = [n for n in ("config.properties", "manifest.json") if n not in names]
        if missing:
            raise ArchiveIncomplete(missing)
        _safe_extract(zf, extracted)
    manifest = json.loads((extracted / "manifest.json").read_text(encoding="utf-8"))
    expected = manifest.get("outputs", [])
    missing = [f"output/{o['file']}" for o in expected if f"output/{o['file']}" not in names]
    if manifest.get("archive_includes_inputs"):
        if not any(n.startswith("inputs/") for n in names):
            missing.append("inputs/")
    if missing:
        raise ArchiveIncomplete(missing)

    cfg = parse_properties((extracted / "config.properties").read_text(encoding="utf-8"), extracted)
    values = {
        "output_dir": str(work / "output"),
        "log.dir": str(work / "log"),
        "cache_dir": str(work / "cache"),
        "archive": "false",
        "code.provider.cache.read": "false",
        "build.provider.cache.read": "false",
        "variability.provider.cache.read": "false",
    }
    inputs = extracted / "inputs"
    if manifest.get("archive_includes_inputs"):
        if cfg.get("source_tree") is not None:
            values["source_tree"] = str(inputs / "source_tree")
        for key, sub in (("build.extractor.csv_path", "build"), ("variability.input_file", "variability")):
            if cfg.get(key) is not None and (inputs / sub).is_dir():
                values[key] = str(inputs / sub / Path(cfg.get(key)).name)
    values.update(overrides or {})
    cfg = cfg.with_overrides(values)

    def verify(records):
        got = {r["logical_name"]: r[HASH_ALGORITHM] for r in records}
        failure = None
        compared = []
        for item in expected:
            name, want = item["logical_name"], item[HASH_ALGORITHM]
            have = got.get(name)
            compared.append({"logical_name": name, "expected": want, "got": have})
            if have != want and failure is None:
                failure = ReproductionMismatch(name, want, have)
        status = "ReproductionMatch" if failure is None else "ReproductionMismatch"
        log.info("reproduction check: %s", status)
        return {"reproduction": {"archive": str(archive_path), "status": status, "compared": compared}}, failure

    return run_experiment(cfg, verify)
