"""Block dimensions for unordered pairs, triples and quads, and their layout.

``REFERENCE_TABLES`` holds the published values for d = 2..10 (``None``
where the diagram is taller than d). ``build_table`` recomputes a table from
the Weyl product formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .young import YoungDiagram, enumerate_diagrams, schur_weyl_multiplicity

TABLE_SIZES = {"pairs": 2, "triples": 3, "quads": 4}

_ = None
REFERENCE_TABLES: dict[str, dict[int, list[int | None]]] = {
    "pairs": {
        2: [3, 1],
        3: [6, 3],
        4: [10, 6],
        5: [15, 10],
        6: [21, 15],
        7: [28, 21],
        8: [36, 28],
        9: [45, 36],
        10: [55, 45],
    },
    "triples": {
        2: [4, 2, _],
        3: [10, 8, 1],
        4: [20, 20, 4],
        5: [35, 40, 10],
        6: [56, 70, 20],
        7: [84, 112, 35],
        8: [120, 168, 56],
        9: [165, 240, 84],
        10: [220, 330, 120],
    },
    "quads": {
        2: [5, 3, 1, _, _],
        3: [15, 15, 6, 3, _],
        4: [35, 45, 20, 15, 1],
        5: [70, 105, 50, 45, 5],
        6: [126, 210, 105, 105, 15],
        7: [210, 378, 196, 210, 35],
        8: [330, 630, 336, 378, 70],
        9: [495, 990, 540, 630, 126],
        10: [715, 1485, 825, 990, 210],
    },
}
del _


@dataclass(frozen=True)
class Table:
    which: str
    n: int
    columns: tuple[YoungDiagram, ...]
    rows: dict[int, list[int | None]]

    def to_dict(self) -> dict:
        return {
            "which": self.which,
            "n": self.n,
            "columns": [list(c.trimmed) for c in self.columns],
            "rows": [{"d": d, "cells": cells} for d, cells in self.rows.items()],
        }


def table_columns(n: int) -> tuple[YoungDiagram, ...]:
    """All partitions of n, trimmed, in decreasing lexicographic order."""
    return tuple(YoungDiagram(lam.trimmed) for lam in enumerate_diagrams(n, n))


def build_table(which: str, d_min: int = 2, d_max: int = 10) -> Table:
    if which not in TABLE_SIZES:
        raise ValueError(f"unknown table {which!r}; choose from {sorted(TABLE_SIZES)}")
    n = TABLE_SIZES[which]
    columns = table_columns(n)
    rows = {
        d: [schur_weyl_multiplicity(lam, d) if lam.height <= d else None for lam in columns]
        for d in range(d_min, d_max + 1)
    }
    return Table(which=which, n=n, columns=columns, rows=rows)
