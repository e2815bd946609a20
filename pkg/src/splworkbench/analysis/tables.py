"""Tabular analysis results handed to the output writers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

Cell = Union[str, int, float, Fraction]


@dataclass(frozen=True)
class ResultTable:
    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        width = len(self.columns)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"{self.name}: row {i} has {len(row)} cells, expected {width}")

    def column(self, name: str) -> list[Cell]:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def as_dicts(self) -> list[dict[str, Cell]]:
        return [dict(zip(self.columns, row)) for row in self.rows]

    @classmethod
    def build(cls, name: str, columns: Sequence[str], rows) -> ResultTable:
        return cls(name, tuple(columns), tuple(tuple(r) for r in rows))
