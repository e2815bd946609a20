"""Properties-file experiment configuration."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ConfigError, MalformedLine

log = logging.getLogger("splworkbench.config")

KNOWN_KEYS = frozenset({
    "source_tree", "output_dir", "plugins_dir", "cache_dir",
    "log.dir", "log.level", "log.console", "log.file",
    "archive", "archive.dir", "archive.include_inputs",
    "code.extractor", "code.extractor.file_regex", "code.extractor.handle_macros",
    "code.extractor.variable_regex", "code.extractor.threads",
    "code.provider.timeout", "code.provider.cache.write", "code.provider.cache.read",
    "build.extractor", "build.extractor.csv_path", "build.extractor.entry_makefiles",
    "build.provider.timeout", "build.provider.cache.write", "build.provider.cache.read",
    "variability.extractor", "variability.input_file",
    "variability.provider.timeout", "variability.provider.cache.write",
    "variability.provider.cache.read",
    "analysis", "analysis.pipeline", "analysis.output.format", "analysis.round_decimals",
    "analysis.relevant_features_only", "analysis.force_sequential",
    "analysis.report_intermediates", "analysis.pc_finder.combine_build_pc",
    "analysis.metrics_runner.metrics_class",
})

ALIASES = {
    "code.extractor.class": "code.extractor",
    "build.extractor.class": "build.extractor",
    "variability.extractor.class": "variability.extractor",
    "analysis.class": "analysis",
    "analysis.output.type": "analysis.output.format",
    "analysis.output.intermediate_results": "analysis.report_intermediates",
}

PATH_KEYS = (
    "source_tree", "output_dir", "plugins_dir", "cache_dir", "log.dir", "archive.dir",
    "build.extractor.csv_path", "variability.input_file",
)

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


@dataclass
class ExperimentConfig:
    values: dict[str, str] = field(default_factory=dict)
    base_dir: Path | None = None
    source_file: Path | None = None
    warnings: list[str] = field(default_factory=list)

    def __contains__(self, key: str) -> bool:
        return key in self.values

    def get(self, key: str, default: str | None = None) -> str | None:
        value = self.values.get(key)
        return default if value is None or value == "" else value

    def get_bool(self, key: str, default: bool = False) -> bool:
        raw = self.get(key)
        if raw is None:
            return default
        low = raw.lower()
        if low in _TRUE:
            return True
        if low in _FALSE:
            return False
        raise ConfigError(f"{key}: expected a boolean, got {raw!r}")

    def get_int(self, key: str, default: int = 0) -> int:
        raw = self.get(key)
        if raw is None:
            return default
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"{key}: expected an integer, got {raw!r}") from None

    def path(self, key: str, default: str | Path | None = None) -> Path | None:
        raw = self.get(key)
        if raw is None:
            if default is None:
                return None
            raw = str(default)
        p = Path(raw).expanduser()
        if not p.is_absolute() and self.base_dir is not None:
            p = self.base_dir / p
        return p

    def component(self, key: str) -> str | None:
        """Component name with any dotted package prefix removed."""
        raw = self.get(key)
        return None if raw is None else raw.rsplit(".", 1)[-1]

    def with_overrides(self, overrides: dict[str, str]) -> ExperimentConfig:
        values = dict(self.values)
        values.update(overrides)
        return ExperimentConfig(values, self.base_dir, self.source_file, list(self.warnings))

    def to_properties(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.values.items())


def parse_properties(text: str, base_dir: Path | None = None) -> ExperimentConfig:
    cfg = ExperimentConfig(base_dir=base_dir)
    origin: dict[str, str] = {}

    def warn(message: str) -> None:
        log.warning(message)
        cfg.warnings.append(message)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise MalformedLine(line_no, raw)
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        canonical = ALIASES.get(key, key)
        if canonical in cfg.values:
            warn(f"line {line_no}: {key} overrides earlier {origin[canonical]}")
        elif canonical not in KNOWN_KEYS:
            warn(f"line {line_no}: unknown key {key}")
        if key == "plugins_dir":
            warn("plugins_dir is accepted but ignored; components are built in")
        cfg.values[canonical] = value
        origin[canonical] = key
    return cfg


def load_config(path: str | Path) -> ExperimentConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"configuration file not found: {path}") from None
    except OSError as exc:
        raise ConfigError(f"cannot read configuration file {path}: {exc}") from None
    cfg = parse_properties(text, path.resolve().parent)
    cfg.source_file = path
    return cfg


def resolved_snapshot(cfg: ExperimentConfig) -> dict[str, str]:
    """Config values with path keys made absolute."""
    out = dict(cfg.values)
    for key in PATH_KEYS:
        if cfg.get(key) is not None:
            out[key] = str(cfg.path(key).resolve())
    return out
