"""Shadow diagrams, crossing splits and brute-force state sums.

A diagram is a set of arcs whose ends meet at 4-valent crossings. Each
crossing carries its two smoothings as explicit pairings of the four arc
ends; digit ``0`` of a split word selects the A pairing and digit ``1`` the B
pairing. Splitting every crossing leaves a disjoint union of closed curves,
which are counted by joining arcs through the selected pairings.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import CapacityError, DomainError, WordLengthError
from .polynomials import Polynomial
from .words import WordSet, check_word, int_to_word

__all__ = [
    "HEAD",
    "TAIL",
    "DEFAULT_ENUMERATION_CAP",
    "ArcEnd",
    "Crossing",
    "PlanarDiagram",
    "build_foil",
    "build_twist",
    "count_components",
    "component_counts",
    "state_sum",
    "states_by_components",
]

HEAD = "head"
TAIL = "tail"

DEFAULT_ENUMERATION_CAP = 30


@dataclass(frozen=True, order=True)
class ArcEnd:
    arc: int
    side: str

    def __post_init__(self):
        if self.side not in (HEAD, TAIL):
            raise ValueError(f"side must be {HEAD!r} or {TAIL!r}, got {self.side!r}")
        if self.arc < 0:
            raise ValueError("arc index must be nonnegative")


Pair = tuple[ArcEnd, ArcEnd]


def _canonical_pairing(pairing) -> tuple[Pair, Pair]:
    pairs = [tuple(sorted(pair)) for pair in pairing]
    if len(pairs) != 2 or any(len(p) != 2 for p in pairs):
        raise ValueError("a pairing consists of exactly two pairs of arc ends")
    return tuple(sorted(pairs))


@dataclass(frozen=True)
class Crossing:
    """A crossing with its A and B smoothings.

    Each pairing splits the same four arc ends into two pairs; the pairs are
    stored sorted so equal crossings compare equal.
    """

    pairing_a: tuple[Pair, Pair]
    pairing_b: tuple[Pair, Pair]

    def __post_init__(self):
        a = _canonical_pairing(self.pairing_a)
        b = _canonical_pairing(self.pairing_b)
        ends_a = {e for pair in a for e in pair}
        ends_b = {e for pair in b for e in pair}
        if len(ends_a) != 4:
            raise ValueError("a crossing joins four distinct arc ends")
        if ends_a != ends_b:
            raise ValueError("both smoothings must pair the same four arc ends")
        if a == b:
            raise ValueError("the A and B smoothings must differ")
        object.__setattr__(self, "pairing_a", a)
        object.__setattr__(self, "pairing_b", b)

    @classmethod
    def around(cls, e0: ArcEnd, e1: ArcEnd, e2: ArcEnd, e3: ArcEnd) -> Crossing:
        """Crossing from its four ends in cyclic order.

        The strands pass ``e0``-``e2`` and ``e1``-``e3``. The A smoothing
        joins ``e0``-``e1`` and ``e2``-``e3``; the B smoothing joins
        ``e3``-``e0`` and ``e1``-``e2``.
        """
        return cls(((e0, e1), (e2, e3)), ((e3, e0), (e1, e2)))

    @property
    def ends(self) -> frozenset[ArcEnd]:
        return frozenset(e for pair in self.pairing_a for e in pair)

    def pairing(self, digit: int) -> tuple[Pair, Pair]:
        return self.pairing_b if digit else self.pairing_a


@dataclass(frozen=True)
class PlanarDiagram:
    """Arcs ``0..arc_count-1`` wired through ``crossings``.

    ``base_loops`` counts closed curves that meet no crossing; they add to
    every state unchanged.
    """

    arc_count: int
    crossings: tuple[Crossing, ...]
    base_loops: int = 0

    def __post_init__(self):
        crossings = tuple(self.crossings)
        object.__setattr__(self, "crossings", crossings)
        if self.arc_count < 0 or self.base_loops < 0:
            raise ValueError("arc_count and base_loops must be nonnegative")
        seen: set[ArcEnd] = set()
        for i, crossing in enumerate(crossings):
            for end in crossing.ends:
                if end.arc >= self.arc_count:
                    raise ValueError(f"crossing {i} references unknown arc {end.arc}")
                if end in seen:
                    raise ValueError(f"arc end {end} occupies more than one crossing slot")
                seen.add(end)
        if len(seen) != 2 * self.arc_count:
            missing = sorted(
                ArcEnd(a, s)
                for a in range(self.arc_count)
                for s in (HEAD, TAIL)
                if ArcEnd(a, s) not in seen
            )
            raise ValueError(f"dangling arc ends: {missing}")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @functools.cached_property
    def _arc_pairs(self) -> tuple[tuple[tuple[tuple[int, int], ...], ...], ...]:
        # per crossing, per digit: the two arc-index edges that digit adds
        return tuple(
            tuple(
                tuple((p[0].arc, p[1].arc) for p in c.pairing(digit))
                for digit in (0, 1)
            )
            for c in self.crossings
        )


def build_foil(n: int) -> PlanarDiagram:
    """Shadow of the n-foil: the closure of a two-strand braid with ``n`` crossings.

    Gap ``i`` holds a left arc ``2i`` and a right arc ``2i + 1`` running from
    crossing ``i`` to crossing ``i + 1`` (mod ``n``). The A smoothing joins the
    two ends on each side of the crossing, the B smoothing keeps the left and
    right strands apart. The 0-foil is two disjoint circles.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return PlanarDiagram(0, (), base_loops=2)
    crossings = []
    for i in range(n):
        g = (i - 1) % n
        crossings.append(
            Crossing.around(
                ArcEnd(2 * g, HEAD),
                ArcEnd(2 * g + 1, HEAD),
                ArcEnd(2 * i + 1, TAIL),
                ArcEnd(2 * i, TAIL),
            )
        )
    return PlanarDiagram(2 * n, tuple(crossings))


def build_twist(n: int) -> PlanarDiagram:
    """Shadow of the n-twist loop: one closed strand with ``n`` kinks in series.

    Stem arc ``2i`` runs from crossing ``i`` to crossing ``i + 1`` (mod ``n``)
    and kink arc ``2i + 1`` leaves and re-enters crossing ``i``. The A
    smoothing pinches the kink off as its own circle; the B smoothing folds it
    into the stem. The 0-twist loop is a single circle.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return PlanarDiagram(0, (), base_loops=1)
    crossings = []
    for i in range(n):
        stem_in = ArcEnd(2 * ((i - 1) % n), HEAD)
        stem_out = ArcEnd(2 * i, TAIL)
        kink_out = ArcEnd(2 * i + 1, TAIL)
        kink_in = ArcEnd(2 * i + 1, HEAD)
        crossings.append(Crossing(((stem_in, stem_out), (kink_out, kink_in)),
                                  ((stem_in, kink_in), (kink_out, stem_out))))
    return PlanarDiagram(2 * n, tuple(crossings))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def count_components(d: PlanarDiagram, w: str | Sequence[int]) -> int:
    """Number of closed curves left after splitting ``d`` according to ``w``.

    Raises:
        WordLengthError: ``len(w)`` differs from the crossing count.
    """
    digits = _digits(w)
    if len(digits) != d.crossing_count:
        raise WordLengthError(
            f"split word has length {len(digits)}, diagram has {d.crossing_count} crossings"
        )
    parent = list(range(d.arc_count))
    merged = 0
    for pairs, digit in zip(d._arc_pairs, digits):
        for u, v in pairs[digit]:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[rv] = ru
                merged += 1
    return d.arc_count - merged + d.base_loops


def _digits(w) -> list[int]:
    if isinstance(w, str):
        check_word(w)
        return [1 if c == "1" else 0 for c in w]
    digits = [int(c) for c in w]
    if any(c not in (0, 1) for c in digits):
        raise DomainError(f"split word digits must be 0 or 1: {w!r}")
    return digits


def _check_cap(d: PlanarDiagram, cap: int) -> None:
    if d.crossing_count > cap:
        raise CapacityError(
            f"diagram has {d.crossing_count} crossings, above the enumeration cap of {cap} "
            f"(raise it with --max-enumeration)",
            cap=cap,
            flag="--max-enumeration",
        )


def _walk(d: PlanarDiagram, leaf) -> None:
    """Depth-first over all split words, calling ``leaf(index, components)``.

    Uses a union-find with undo so each tree edge costs at most two unions.
    ``index`` reads the word as a binary number with crossing 0 most
    significant, so increasing index is lexicographic word order.
    """
    n, m, base = d.crossing_count, d.arc_count, d.base_loops
    pairs = d._arc_pairs
    parent = list(range(m))
    size = [1] * m

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def visit(i, index, merged):
        if i == n:
            leaf(index, m - merged + base)
            return
        for digit in (0, 1):
            undo = []
            for u, v in pairs[i][digit]:
                ru, rv = find(u), find(v)
                if ru != rv:
                    if size[ru] < size[rv]:
                        ru, rv = rv, ru
                    parent[rv] = ru
                    size[ru] += size[rv]
                    undo.append((rv, ru))
            visit(i + 1, (index << 1) | digit, merged + len(undo))
            for rv, ru in reversed(undo):
                parent[rv] = rv
                size[ru] -= size[rv]

    visit(0, 0, 0)


@functools.lru_cache(maxsize=8)
def _component_counts(d: PlanarDiagram) -> bytes:
    counts = bytearray(1 << d.crossing_count)

    def leaf(index, k):
        counts[index] = k

    _walk(d, leaf)
    return bytes(counts)


def component_counts(d: PlanarDiagram, cap: int = DEFAULT_ENUMERATION_CAP) -> bytes:
    """Component count of every split word, indexed by the word read in binary."""
    _check_cap(d, cap)
    if d.arc_count + d.base_loops > 255:
        raise CapacityError("too many arcs for a byte-packed count table", cap=cap)
    return _component_counts(d)


def state_sum(d: PlanarDiagram, cap: int = DEFAULT_ENUMERATION_CAP) -> Polynomial:
    """Generating polynomial: sum of ``x**|S|`` over all ``2**n`` states ``S``.

    Raises:
        CapacityError: the diagram has more than ``cap`` crossings.
    """
    _check_cap(d, cap)
    hist: Counter[int] = Counter()

    def leaf(index, k):
        hist[k] += 1

    _walk(d, leaf)
    if not hist:
        return Polynomial()
    return Polynomial(tuple(hist[k] for k in range(max(hist) + 1)))


def states_by_components(
    d: PlanarDiagram, k: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> WordSet:
    """All split words of ``d`` whose state has exactly ``k`` components."""
    if k < 1:
        raise DomainError("k must be a positive integer")
    counts = component_counts(d, cap)
    n = d.crossing_count
    return WordSet(
        (int_to_word(i, n) for i, c in enumerate(counts) if c == k), length=n
    )
