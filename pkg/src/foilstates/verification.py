"""Cross-checks between independent routes, as run by ``foilstates verify``.

Every check returns ``None`` on success or a short failure description.
State enumeration checks run up to ``max_n`` crossings; the word, geometry
and bijection checks use fixed ranges that are cheap at any ``max_n``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Callable

from . import arrangement as geo
from .bijection import phi, phi_inverse
from .diagram import build_foil, build_twist, state_sum, states_by_components
from .polynomials import (
    lazy_caterer,
    poly_foil_closed,
    poly_foil_recurrence,
    poly_twist_closed,
)
from .tables import FOIL_TABLE_ERRATA, grid_cells, load_golden, read_csv, triangle_cells
from .words import (
    foil_two_state_words,
    foil_two_state_words_rec,
    region_codes_closed,
    region_codes_rec,
    twist_two_state_words,
)

LAZY_CATERER = [1, 2, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67, 79, 92, 106]

WORD_RANGE = 64
GEOMETRY_RANGE = 10
UPPER_RANGE = 40
BIJECTION_RANGE = 200


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _foil_oracle(max_n, golden_dir):
    for n in range(max_n + 1):
        got = state_sum(build_foil(n), cap=max(max_n, 0))
        if got != poly_foil_closed(n):
            return f"n={n}: state sum {got} != {poly_foil_closed(n)}"


def _twist_oracle(max_n, golden_dir):
    for n in range(max_n + 1):
        got = state_sum(build_twist(n), cap=max(max_n, 0))
        if got != poly_twist_closed(n):
            return f"n={n}: state sum {got} != {poly_twist_closed(n)}"


def _foil_recurrence(max_n, golden_dir):
    for n in range(WORD_RANGE + 1):
        if poly_foil_recurrence(n) != poly_foil_closed(n):
            return f"n={n}: recurrence and closed form differ"


def _lazy_caterer(max_n, golden_dir):
    got = [poly_foil_closed(n).coefficient(2) for n in range(1, 16)]
    if got != LAZY_CATERER:
        return f"x^2 coefficients {got}"
    if got != [lazy_caterer(n - 1) for n in range(1, 16)]:
        return "counting formula disagrees"


def _triangle_check(kind):
    def check(max_n, golden_dir):
        header, rows = read_csv(load_golden(kind, golden_dir))
        want_max = len(rows) - 1
        mine_header, mine = triangle_cells(kind, want_max)
        if header != mine_header:
            return f"header {mine_header} != golden {header}"
        for n, (g, m) in enumerate(zip(rows, mine)):
            for k, (gc, mc) in enumerate(zip(g[1:], m[1:])):
                if gc == mc:
                    continue
                erratum = FOIL_TABLE_ERRATA.get((n, k)) if kind == "foil" else None
                if erratum and (gc, mc) == tuple(map(str, erratum)):
                    continue
                return f"cell (n={n}, k={k}): emitted {mc!r}, golden {gc!r}"
            if len(g) != len(m):
                return f"row {n} has {len(m)} cells, golden {len(g)}"
        if len(rows) != len(mine):
            return "row count differs"

    return check


def _grid_check(which):
    def check(max_n, golden_dir):
        header, rows = read_csv(load_golden(which, golden_dir))
        if (header, rows) != grid_cells(which, 7):
            return f"n=7 {which} differs from golden file"

    return check


def _words(max_n, golden_dir):
    for n in range(WORD_RANGE + 1):
        regions = region_codes_closed(n)
        if regions != region_codes_rec(n):
            return f"n={n}: region codes closed form != recurrence"
        if len(regions) != (n * n + n + 2) // 2:
            return f"n={n}: |regions| = {len(regions)}"
        foils = foil_two_state_words(n)
        if foils != foil_two_state_words_rec(n):
            return f"n={n}: foil 2-states closed form != recurrence"
        if n >= 1 and len(foils) != (n * n - n + 2) // 2:
            return f"n={n}: |foil 2-states| = {len(foils)}"


def _geometry(max_n, golden_dir):
    for n in range(1, GEOMETRY_RANGE + 1):
        codes = {geo.signvector_to_code(v) for v in geo.enumerate_region_signvectors(n)}
        if codes != set(region_codes_closed(n)):
            return f"n={n}: geometric codes differ from closed form"
        if len(codes) != lazy_caterer(n):
            return f"n={n}: {len(codes)} regions"


def _upper_intersections(max_n, golden_dir):
    for r in range(UPPER_RANGE + 1):
        for q in range(r):
            for p in range(q):
                if geo.halfplane_sign(r, geo.intersection(p, q)) != 1:
                    return f"(p, q, r) = ({p}, {q}, {r})"


def _general_arrangement(max_n, golden_dir):
    report = geo.check_general_arrangement([geo.family_line(i) for i in range(50)])
    if not report.ok:
        return f"{report.kind} {report.indices}"


def _bijection(max_n, golden_dir):
    for n in range(BIJECTION_RANGE + 1):
        regions = region_codes_closed(n)
        image = {phi(w): w for w in regions}
        if len(image) != len(regions):
            return f"n={n}: phi is not injective"
        target = foil_two_state_words(n + 1)
        if target != set(image):
            return f"n={n}: image of phi differs from the 2-states of the {n + 1}-foil"
        # with image == target, this also gives phi(phi_inverse(t)) = t for every target t
        if any(phi_inverse(t) != w for t, w in image.items()):
            return f"n={n}: phi_inverse is not the inverse of phi"


def _two_states(max_n, golden_dir):
    for n in range(1, max_n + 1):
        if n >= 2 and states_by_components(build_foil(n), 2, cap=max_n) != foil_two_state_words(n):
            return f"n={n}: foil 2-states by enumeration differ"
        if states_by_components(build_twist(n), 2, cap=max_n) != twist_two_state_words(n):
            return f"n={n}: twist 2-states by enumeration differ"


def _binomial_columns(max_n, golden_dir):
    for n in range(1, WORD_RANGE + 1):
        f = poly_foil_closed(n)
        if f.coefficient(0) != 0 or f.coefficient(1) != n or f.coefficient(2) != comb(n, 2) + 1:
            return f"n={n}: low coefficients {f.coefficients[:3]}"
        if any(f.coefficient(k) != comb(n, k) for k in range(3, n + 1)):
            return f"n={n}: a column k >= 3 is not binomial"


CHECKS: list[tuple[str, Callable]] = [
    ("foil-state-sum", _foil_oracle),
    ("twist-state-sum", _twist_oracle),
    ("foil-recurrence", _foil_recurrence),
    ("foil-binomial-columns", _binomial_columns),
    ("lazy-caterer", _lazy_caterer),
    ("golden-twist-table", _triangle_check("twist")),
    ("golden-foil-table", _triangle_check("foil")),
    ("word-set-identities", _words),
    ("geometry-vs-codes", _geometry),
    ("general-arrangement", _general_arrangement),
    ("upper-intersections", _upper_intersections),
    ("bijection", _bijection),
    ("golden-region-grid", _grid_check("regions-grid")),
    ("golden-state-grid", _grid_check("states-grid")),
    ("two-state-enumeration", _two_states),
]


def run_checks(max_n: int, golden_dir=None) -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        start = time.perf_counter()
        try:
            problem = check(max_n, golden_dir)
        except Exception as exc:  # a crashing check is a failed check
            problem = f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        results.append(CheckResult(name, problem is None, problem or "", elapsed))
    return results
