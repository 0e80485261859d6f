"""Text and CSV layouts for the coefficient triangles and the pairing grids.

The CSV layouts are the ones used by the golden files shipped in
``foilstates/data``: a header row, then one row per table row, with cells
outside the triangle left empty.
"""

from __future__ import annotations

import csv
import io
from importlib import resources
from pathlib import Path

from .bijection import pairing_grid
from .polynomials import Polynomial, poly_foil_closed, poly_twist_closed

GOLDEN_FILES = {
    "twist": "table1.csv",
    "foil": "table2.csv",
    "regions-grid": "table3.csv",
    "states-grid": "table4.csv",
}

# (n, k) cells where the shipped foil table differs from (x+1)^n + x^2 - 1
FOIL_TABLE_ERRATA = {(12, 8): (465, 495)}


def polynomial_rows(kind: str, max_n: int) -> list[Polynomial]:
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    build = {"twist": poly_twist_closed, "foil": poly_foil_closed}[kind]
    return [build(n) for n in range(max_n + 1)]


def triangle_cells(kind: str, max_n: int) -> tuple[list[str], list[list[str]]]:
    """Header and rows of the coefficient triangle as strings; blanks past each row's degree."""
    polys = polynomial_rows(kind, max_n)
    width = max(p.degree for p in polys) + 1
    header = ["n"] + [str(k) for k in range(width)]
    rows = []
    for n, p in enumerate(polys):
        cells = [str(p.coefficient(k)) if k <= p.degree else "" for k in range(width)]
        rows.append([str(n)] + cells)
    return header, rows


def grid_cells(which: str, n: int) -> tuple[list[str], list[list[str]]]:
    """Header and rows (``k`` down, ``p`` across) of the region or image grid."""
    codes, images = pairing_grid(n)
    grid = codes if which == "regions-grid" else images
    header = ["k"] + [str(p) for p in range(n)]
    return header, [[str(k)] + row for k, row in enumerate(grid)]


def to_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def to_text(header: list[str], rows: list[list[str]], corner: str) -> str:
    """Right-aligned columns with a rule under the header, like a printed table."""
    header = [corner] + header[1:]
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = []
    for idx, row in enumerate([header] + rows):
        first = row[0].rjust(widths[0])
        rest = "  ".join(c.rjust(w) for c, w in zip(row[1:], widths[1:]))
        lines.append(f"{first} | {rest}".rstrip())
        if idx == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def read_csv(text: str) -> tuple[list[str], list[list[str]]]:
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def load_golden(name: str, golden_dir: str | Path | None = None) -> str:
    """Text of a golden CSV, from ``golden_dir`` if given, else the packaged copy."""
    filename = GOLDEN_FILES[name]
    if golden_dir is not None:
        return (Path(golden_dir) / filename).read_text()
    return resources.files("foilstates").joinpath("data", filename).read_text()
