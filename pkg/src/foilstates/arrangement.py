"""Exact geometry of the line family ``y = n x - n^2``.

Every predicate runs on :class:`fractions.Fraction`, so signs are never
subject to rounding. ``enumerate_region_signvectors`` finds the regions cut
by the first ``n`` lines by sampling witness points, independently of the
combinatorial construction in :mod:`foilstates.words`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapacityError, DomainError

__all__ = [
    "TEST_POINT",
    "DEFAULT_ORACLE_CAP",
    "Line",
    "RationalPoint",
    "SignVector",
    "ArrangementReport",
    "family_line",
    "halfplane_sign",
    "intersection",
    "check_general_arrangement",
    "region_witnesses",
    "enumerate_region_signvectors",
    "signvector_to_code",
]

DEFAULT_ORACLE_CAP = 64


@dataclass(frozen=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))


TEST_POINT = RationalPoint(Fraction(-1), Fraction(1))


@dataclass(frozen=True)
class Line:
    """The line ``a x + b y + c = 0`` with integer coefficients."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise DomainError("a line needs (a, b) != (0, 0)")

    @classmethod
    def from_slope(cls, slope: int, intercept: int) -> Line:
        """The line ``y = slope * x + intercept``."""
        return cls(-slope, 1, -intercept)

    def value(self, p: RationalPoint) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def sign(self, p: RationalPoint) -> int:
        v = self.value(p)
        return (v > 0) - (v < 0)

    def y_at(self, x: Fraction) -> Fraction:
        if self.b == 0:
            raise DomainError("vertical line has no y value at a given x")
        return Fraction(-(self.a * x + self.c), self.b)

    def meet(self, other: Line) -> RationalPoint | None:
        """Intersection point, or ``None`` for parallel lines."""
        det = self.a * other.b - other.a * self.b
        if det == 0:
            return None
        x = Fraction(self.b * other.c - other.b * self.c, det)
        y = Fraction(other.a * self.c - self.a * other.c, det)
        return RationalPoint(x, y)


@dataclass(frozen=True)
class SignVector:
    """Signs ``+1``/``-1`` of a point against lines ``0..n-1``."""

    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(self.signs)
        if any(s not in (1, -1) for s in signs):
            raise DomainError(f"sign vector entries must be +1 or -1: {signs}")
        object.__setattr__(self, "signs", signs)

    def __len__(self):
        return len(self.signs)

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


@dataclass(frozen=True)
class ArrangementReport:
    """Outcome of :func:`check_general_arrangement`.

    ``kind`` is ``"ok"``, ``"parallel_pair"`` or ``"triple_point"``; for
    failures ``indices`` names the offending lines and ``point`` the common
    point of a triple.
    """

    kind: str
    indices: tuple[int, ...] = ()
    point: RationalPoint | None = None

    @property
    def ok(self) -> bool:
        return self.kind == "ok"


def family_line(n: int) -> Line:
    """The line ``y = n x - n^2``, written ``-n x + y + n^2 = 0``."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    return Line(-n, 1, n * n)


def halfplane_sign(n: int, p: RationalPoint) -> int:
    """Sign of ``y - n x + n^2`` at ``p``: ``1``, ``-1``, or ``0`` on the line."""
    return family_line(n).sign(p)


def intersection(p: int, q: int) -> RationalPoint:
    """Meeting point ``(p + q, p q)`` of the family lines ``p`` and ``q``."""
    if p == q:
        raise DomainError("a line does not meet itself in a single point")
    if p < 0 or q < 0:
        raise DomainError("family indices must be nonnegative")
    return RationalPoint(Fraction(p + q), Fraction(p * q))


def check_general_arrangement(lines: Sequence[Line]) -> ArrangementReport:
    """Check that no two lines are parallel and no three meet in a point.

    Parallel pairs are reported before triple points; within each kind the
    lexicographically first index tuple wins.
    """
    lines = list(lines)
    if not lines:
        raise DomainError("need at least one line")
    points = {}
    for i, j in itertools.combinations(range(len(lines)), 2):
        pt = lines[i].meet(lines[j])
        if pt is None:
            return ArrangementReport("parallel_pair", (i, j))
        points[i, j] = pt
    for i, j, k in itertools.combinations(range(len(lines)), 3):
        pt = points[i, j]
        if lines[k].value(pt) == 0:
            return ArrangementReport("triple_point", (i, j, k), pt)
    return ArrangementReport("ok")


def _sample_xs(n: int) -> list[Fraction]:
    # family vertices sit at the integers p + q in [1, 2n - 3]
    xs = [Fraction(-1)]
    xs += [Fraction(2 * m + 1, 2) for m in range(max(2 * n - 2, 0))]
    xs.append(Fraction(2 * n - 1))
    return xs


def region_witnesses(
    n: int, cap: int = DEFAULT_ORACLE_CAP
) -> dict[SignVector, RationalPoint]:
    """One witness point per region of the arrangement of lines ``0..n-1``.

    At each sample abscissa the lines are sorted by height and a witness is
    placed between every pair of neighbours, plus one above and one below.
    Each region's projection to the x-axis is an open interval bounded by
    vertex abscissae, so some sample falls inside it. The first witness found
    for a sign vector is kept.

    Raises:
        CapacityError: ``n`` exceeds ``cap``.
    """
    if n < 1:
        raise DomainError("need at least one line")
    if n > cap:
        raise CapacityError(
            f"{n} lines exceeds the oracle cap of {cap}", cap=cap, flag="--max-enumeration"
        )
    lines = [family_line(i) for i in range(n)]
    found: dict[SignVector, RationalPoint] = {}
    for x in _sample_xs(n):
        heights = sorted(line.y_at(x) for line in lines)
        ys = [heights[0] - 1]
        ys += [(lo + hi) / 2 for lo, hi in zip(heights, heights[1:])]
        ys.append(heights[-1] + 1)
        for y in ys:
            pt = RationalPoint(x, y)
            signs = tuple(line.sign(pt) for line in lines)
            if 0 in signs:
                raise AssertionError(f"witness {pt} lies on a line")
            found.setdefault(SignVector(signs), pt)
    return found


def enumerate_region_signvectors(n: int, cap: int = DEFAULT_ORACLE_CAP) -> set[SignVector]:
    """Sign vectors of all open regions cut by the family lines ``0..n-1``."""
    return set(region_witnesses(n, cap))


def signvector_to_code(v: SignVector) -> str:
    """``+`` becomes ``1`` (upper side, containing ``(-1, 1)``), ``-`` becomes ``0``."""
    return "".join("1" if s > 0 else "0" for s in v.signs)
