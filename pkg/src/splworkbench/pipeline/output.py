"""Result-table writers."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from pathlib import Path

from ..analysis.tables import ResultTable


def format_number(value, decimals: int) -> str:
    """Half-up rounding to a fixed number of decimals."""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    exact = Fraction(value)
    scaled = exact * 10 ** decimals
    magnitude = (abs(scaled) * 2 + 1) // 2
    units = -magnitude if scaled < 0 else magnitude
    return str(Decimal(units).scaleb(-decimals).quantize(Decimal(1).scaleb(-decimals), ROUND_HALF_UP))


def _cell(value, decimals: int) -> str:
    if isinstance(value, (int, float, Fraction)):
        return format_number(value, decimals)
    return str(value)


def table_to_csv(table: ResultTable, decimals: int = 2) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(v, decimals) for v in row])
    return buf.getvalue()


def _json_cell(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    return value


def table_to_json(table: ResultTable) -> str:
    body = {"columns": list(table.columns), "rows": [[_json_cell(v) for v in row] for row in table.rows]}
    return json.dumps(body, indent=2, ensure_ascii=False) + "\n"


def render_table(table: ResultTable, fmt: str = "csv", decimals: int = 2) -> bytes:
    text = table_to_csv(table, decimals) if fmt == "csv" else table_to_json(table)
    return text.encode("utf-8")


def atomic_write(path: Path, data: bytes) -> None:
    """Write through a temporary sibling and rename, so readers never see a partial file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def write_table(table: ResultTable, fmt: str, round_decimals: int, path: Path) -> Path:
    atomic_write(Path(path), render_table(table, fmt, round_decimals))
    return Path(path)


def unique_path(directory: Path, stem: str, suffix: str) -> Path:
    candidate = directory / f"{stem}{suffix}"
    n = 1
    while candidate.exists():
        candidate = directory / f"{stem}-{n}{suffix}"
        n += 1
    return candidate
