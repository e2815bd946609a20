"""Run-scoped log sinks: ``LEVEL timestamp [stage] message``."""

from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from pathlib import Path

ROOT_LOGGER = "splworkbench"
FORMAT = "%(levelname)s %(asctime)s [%(stage)s] %(message)s"


class _StageFilter(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        name = record.name
        record.stage = name[len(ROOT_LOGGER) + 1:] if name.startswith(ROOT_LOGGER + ".") else "main"
        return True


def make_formatter() -> logging.Formatter:
    fmt = logging.Formatter(FORMAT, datefmt="%Y-%m-%dT%H:%M:%SZ")
    fmt.converter = time.gmtime
    return fmt


def _handler(handler: logging.Handler, level: int) -> logging.Handler:
    handler.setLevel(level)
    handler.setFormatter(make_formatter())
    handler.addFilter(_StageFilter())
    return handler


@contextmanager
def run_logging(level: str, console: bool, log_file: Path | None):
    """Attach console and file sinks to the package logger for one run."""
    logger = logging.getLogger(ROOT_LOGGER)
    numeric = getattr(logging, level.upper())
    handlers: list[logging.Handler] = []
    if console:
        handlers.append(_handler(logging.StreamHandler(), numeric))
    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(_handler(logging.FileHandler(log_file, encoding="utf-8"), numeric))
    previous = logger.level
    logger.setLevel(min(numeric, previous) if previous else numeric)
    for h in handlers:
        logger.addHandler(h)
    try:
        yield
    finally:
        for h in handlers:
            logger.removeHandler(h)
            h.close()
        logger.setLevel(previous)
