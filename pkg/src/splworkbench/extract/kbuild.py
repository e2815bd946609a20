"""Presence conditions of source files from Kbuild/Make files.

Handles ``obj-y``/``obj-m``/``obj-$(CONFIG_X)`` object and directory lists,
composite objects (``foo-objs``, ``foo-y``, ``foo-$(CONFIG_X)``) and line
continuations.  Tristate ``m`` is folded into the same boolean as ``y``.
Conditionals, ``$(call ...)`` and non-``CONFIG_`` variables are skipped with
a warning.
"""

from __future__ import annotations

import logging
import os
import re
from pathlib import Path
from typing import Sequence

from ..errors import BuildTreeMissing, CycleDetected
from ..logic import TRUE, And, Formula, Or, Var, simplify
from .models import BuildModel, normalize_path

log = logging.getLogger("splworkbench.build")

DEFAULT_MAKEFILES = ("Kbuild", "Makefile")

_ASSIGN = re.compile(r"^([A-Za-z0-9_]+)-(y|m|objs|\$\(([^)]*)\))\s*(\+=|:=|\?=|=)\s*(.*)$")
_MAKE_CONDITIONAL = re.compile(r"^(ifeq|ifneq|ifdef|ifndef|else|endif)\b")
_TOP_LEVEL = {"obj", "lib", "core", "drivers", "subdir"}


def _logical_lines(text: str) -> list[tuple[int, str]]:
    """Comment-free lines with backslash continuations joined."""
    out = []
    buf = ""
    start = 0
    for no, raw in enumerate(text.splitlines(), start=1):
        if not buf:
            start = no
        line = raw.split("#", 1)[0].rstrip()
        if line.endswith("\\"):
            buf += line[:-1] + " "
            continue
        out.append((start, (buf + line).strip()))
        buf = ""
    if buf.strip():
        out.append((start, buf.strip()))
    return out


class _KbuildWalker:
    def __init__(self, root: Path, makefile_names: Sequence[str], warnings: list[str] | None):
        self.root = root
        self.makefile_names = tuple(makefile_names)
        self.warnings = warnings
        self.found: dict[str, list[Formula]] = {}

    def warn(self, message: str) -> None:
        log.warning(message)
        if self.warnings is not None:
            self.warnings.append(message)

    def source_for(self, obj: str) -> str:
        stem = obj[:-2]
        for ext in (".c", ".S"):
            if (self.root / (stem + ext)).is_file():
                return normalize_path(stem + ext)
        self.warn(f"no source file for object {obj}, mapping to {stem}.c")
        return normalize_path(stem + ".c")

    def add(self, path: str, pc: Formula) -> None:
        pcs = self.found.setdefault(path, [])
        if pc not in pcs:
            pcs.append(pc)

    def visit(self, rel_dir: str, pc: Formula, stack: tuple[str, ...]) -> None:
        directory = self.root / rel_dir if rel_dir else self.root
        real = os.path.realpath(directory)
        if real in stack:
            raise CycleDetected(rel_dir or ".")
        makefile = next((directory / n for n in self.makefile_names if (directory / n).is_file()), None)
        if makefile is None:
            self.warn(f"no makefile in {rel_dir or '.'}")
            return
        label = makefile.relative_to(self.root).as_posix()
        objects: list[tuple[str, Formula]] = []
        subdirs: list[tuple[str, Formula]] = []
        composites: dict[str, list[tuple[str, Formula]]] = {}

        for line_no, line in _logical_lines(makefile.read_text(encoding="utf-8", errors="replace")):
            if not line:
                continue
            m = _ASSIGN.match(line)
            if m is None:
                if _MAKE_CONDITIONAL.match(line) or "$(call" in line:
                    self.warn(f"{label}:{line_no}: unsupported make construct ignored: {line}")
                continue
            target, selector, variable, _, rhs = m.groups()
            if variable is not None:
                if not re.fullmatch(r"CONFIG_\w+", variable):
                    self.warn(f"{label}:{line_no}: unsupported variable $({variable}) ignored")
                    continue
                cond: Formula = Var(variable)
            else:
                cond = TRUE
            for item in rhs.split():
                if "$(" in item:
                    self.warn(f"{label}:{line_no}: unsupported item {item} ignored")
                    continue
                if target in _TOP_LEVEL:
                    if item.endswith("/"):
                        subdirs.append((item, cond))
                    elif item.endswith(".o") and target != "subdir":
                        objects.append((item, cond))
                else:
                    composites.setdefault(target, []).append((item, cond))

        def place(obj: str, cond: Formula, seen: frozenset[str]) -> None:
            name = obj[:-2]
            parts = composites.get(name)
            if parts and name not in seen:
                for part, part_cond in parts:
                    if part.endswith(".o"):
                        place(part, simplify(And(cond, part_cond)), seen | {name})
                return
            target = f"{rel_dir}/{obj}" if rel_dir else obj
            self.add(self.source_for(target), cond)

        for obj, cond in objects:
            place(obj, simplify(And(pc, cond)), frozenset())
        for sub, cond in subdirs:
            child = normalize_path(f"{rel_dir}/{sub}" if rel_dir else sub)
            self.visit(child, simplify(And(pc, cond)), stack + (real,))


def parse_kbuild_tree(
    root,
    entry_makefile_names: Sequence[str] = DEFAULT_MAKEFILES,
    warnings: list[str] | None = None,
) -> BuildModel:
    root = Path(root)
    if not root.is_dir():
        raise BuildTreeMissing(root)
    walker = _KbuildWalker(root, entry_makefile_names, warnings)
    walker.visit("", TRUE, ())
    pcs = {path: simplify(Or(*conds)) for path, conds in walker.found.items()}
    return BuildModel(pcs, str(root))
