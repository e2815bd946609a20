"""Precomputed build models as ``path,presence_condition`` CSV."""

from __future__ import annotations

import csv
import io
import logging
from pathlib import Path

from ..errors import MalformedRow
from ..logic import Formula, Or, parse_formula, simplify, to_string
from .models import BuildModel, normalize_path

log = logging.getLogger("splworkbench.build")

HEADER = ["path", "presence_condition"]


def parse_build_model_csv(text: str, source_path: str | None = None) -> BuildModel:
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedRow(1, "missing header") from None
    if [h.strip() for h in header] != HEADER:
        raise MalformedRow(1, f"expected header {','.join(HEADER)}")
    pcs: dict[str, Formula] = {}
    for row in reader:
        line_no = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2 or not row[0].strip():
            raise MalformedRow(line_no, f"expected 2 cells, got {len(row)}")
        pc = parse_formula(row[1], line_no)
        path = normalize_path(row[0].strip())
        if path in pcs:
            log.warning("%s listed twice, using the disjunction", path)
            pc = simplify(Or(pcs[path], pc))
        pcs[path] = pc
    return BuildModel(pcs, source_path)


def load_build_model_csv(path) -> BuildModel:
    path = Path(path)
    return parse_build_model_csv(path.read_text(encoding="utf-8"), str(path))


def write_build_model_csv(model: BuildModel) -> str:
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for path, pc in model.pcs.items():
        writer.writerow([path, to_string(pc)])
    return buf.getvalue()
