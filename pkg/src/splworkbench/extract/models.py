"""Data models produced by the build and variability-model pipelines."""

from __future__ import annotations

import logging
import posixpath
import re
from dataclasses import dataclass, field
from typing import Mapping

from ..logic import TRUE, Formula

log = logging.getLogger("splworkbench.build")


def normalize_path(path: str) -> str:
    """Repository-relative POSIX path without ``.``, ``..`` or doubled separators."""
    path = re.sub(r"/+", "/", path.replace("\\", "/"))
    norm = posixpath.normpath(path)
    if norm.startswith("./"):
        norm = norm[2:]
    return norm


@dataclass(frozen=True)
class VariabilityModel:
    variables: tuple[tuple[str, int], ...]
    constraint: Formula
    source_path: str | None = field(default=None, compare=False)
    clauses: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.variables)

    def __contains__(self, name: str) -> bool:
        return name in self._name_set

    @property
    def _name_set(self) -> frozenset[str]:
        cached = self.__dict__.get("_names_cache")
        if cached is None:
            cached = frozenset(self.names)
            object.__setattr__(self, "_names_cache", cached)
        return cached


@dataclass(frozen=True)
class BuildModel:
    """Source path to presence condition; paths are normalized on creation."""

    pcs: Mapping[str, Formula]
    source_path: str | None = field(default=None, compare=False)

    def __post_init__(self):
        normalized = {normalize_path(p): f for p, f in self.pcs.items()}
        object.__setattr__(self, "pcs", dict(sorted(normalized.items())))

    def __contains__(self, path: str) -> bool:
        return normalize_path(path) in self.pcs

    def pc(self, path: str, warnings: list[str] | None = None) -> Formula:
        """Presence condition of ``path``; unknown files count as always built."""
        found = self.pcs.get(normalize_path(path))
        if found is None:
            message = f"{path} has no build presence condition, assuming true"
            log.warning(message)
            if warnings is not None:
                warnings.append(message)
            return TRUE
        return found
