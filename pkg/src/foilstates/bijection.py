"""The bijection from plane-region codes of ``n`` lines to 2-state words of the (n+1)-foil.

A region code other than ``1^n`` has the shape ``1^k 0^z 1^p`` with
``z >= 1``; it is sent to ``1^p 0 1^k 0 1^(z-1)``. The all-ones code goes to
the all-ones word one digit longer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DomainError
from .words import check_word, ones, zeros

__all__ = [
    "AllOnes",
    "Triple",
    "TwoZeros",
    "parse_region_code",
    "parse_state_word",
    "phi",
    "phi_inverse",
    "phi_ell",
    "pairing_table",
    "pairing_grid",
]


@dataclass(frozen=True)
class AllOnes:
    n: int

    def word(self) -> str:
        return ones(self.n)


@dataclass(frozen=True)
class Triple:
    """Region code ``1^k 0^z 1^p`` with ``z >= 1``."""

    k: int
    z: int
    p: int

    def __post_init__(self):
        if self.z < 1 or self.k < 0 or self.p < 0:
            raise DomainError(f"invalid region decomposition {self}")

    @property
    def n(self) -> int:
        return self.k + self.z + self.p

    def word(self) -> str:
        return ones(self.k) + zeros(self.z) + ones(self.p)


@dataclass(frozen=True)
class TwoZeros:
    """Split word ``1^p 0 1^k 0 1^m``."""

    p: int
    k: int
    m: int

    def __post_init__(self):
        if min(self.p, self.k, self.m) < 0:
            raise DomainError(f"invalid state decomposition {self}")

    @property
    def n(self) -> int:
        return self.p + self.k + self.m + 2

    def word(self) -> str:
        return ones(self.p) + "0" + ones(self.k) + "0" + ones(self.m)


RegionParse = Union[AllOnes, Triple]
StateParse = Union[AllOnes, TwoZeros]


def _region_runs(w: str) -> tuple[int, int, int] | None:
    """``(k, z, p)`` for ``1^k 0^z 1^p`` with ``z >= 1``; ``None`` for all ones."""
    stripped = w.lstrip("1")
    if not stripped:
        return None
    middle = stripped.rstrip("1")
    if middle.strip("0"):
        check_word(w)
        raise DomainError(f"{w!r} is not a region code")
    return len(w) - len(stripped), len(middle), len(stripped) - len(middle)


def _state_runs(w: str) -> tuple[int, int, int] | None:
    """``(p, k, m)`` for ``1^p 0 1^k 0 1^m``; ``None`` for all ones."""
    n_ones = w.count("1")
    if n_ones == len(w):
        return None
    if n_ones != len(w) - 2 or w.count("0") != 2:
        check_word(w)
        raise DomainError(
            f"{w!r} has {w.count('0')} zeros; a foil 2-state word has 0 or 2"
        )
    first = w.find("0")
    second = w.find("0", first + 1)
    return first, second - first - 1, len(w) - second - 1


def parse_region_code(w: str) -> RegionParse:
    """Split a region code into its leading ones, zero run and trailing ones.

    Raises:
        DomainError: a ``1`` sits between two ``0`` digits.
    """
    runs = _region_runs(w)
    return AllOnes(len(w)) if runs is None else Triple(*runs)


def parse_state_word(w: str) -> StateParse:
    """Split a foil 2-state word around its two ``0`` digits.

    Raises:
        DomainError: the word has a number of zeros other than 0 or 2.
    """
    runs = _state_runs(w)
    return AllOnes(len(w)) if runs is None else TwoZeros(*runs)


def phi(w: str) -> str:
    """Map a region code of length ``n`` to a 2-state word of length ``n + 1``.

    >>> phi("1100001")
    '10110111'
    >>> phi("")
    '1'
    """
    # inlined run parsing: this is the hot loop of the bijection checks
    stripped = w.lstrip("1")
    if not stripped:
        return w + "1"
    middle = stripped.rstrip("1")
    if middle.strip("0"):
        check_word(w)
        raise DomainError(f"{w!r} is not a region code")
    return (
        "1" * (len(stripped) - len(middle))
        + "0"
        + "1" * (len(w) - len(stripped))
        + "0"
        + "1" * (len(middle) - 1)
    )


def phi_inverse(w: str) -> str:
    """Inverse of :func:`phi`: drop the leading ``1^p 0`` and rebuild ``1^k 0^(m+1) 1^p``."""
    first = w.find("0")
    if first < 0:
        if not w or w.count("1") != len(w):
            check_word(w)
            raise DomainError("the empty word is not the image of a region code")
        return w[1:]
    second = w.find("0", first + 1)
    if second < 0 or w.count("1") != len(w) - 2:
        _state_runs(w)  # raises with the precise reason
    return "1" * (second - first - 1) + "0" * (len(w) - second) + "1" * first


def phi_ell(pi: str) -> str:
    """Send a new-region code ``1^k 0^(l-k)`` to the twist 2-state ``1^k 0 1^(l-k-1)``."""
    check_word(pi)
    k = len(pi) - len(pi.lstrip("1"))
    if k == len(pi) or pi[k:] != zeros(len(pi) - k):
        raise DomainError(f"{pi!r} is not of the form 1^k 0^(l-k) with l > k")
    return ones(k) + "0" + ones(len(pi) - k - 1)


def pairing_table(n: int) -> list[tuple[str, str]]:
    """Pairs ``(code, phi(code))`` for all region codes of ``n`` lines.

    Ordered by trailing-ones count ``p``, then leading-ones count ``k``; the
    all-ones pair comes last.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    pairs = []
    for p in range(n):
        for k in range(n - p):
            code = ones(k) + zeros(n - p - k) + ones(p)
            pairs.append((code, phi(code)))
    pairs.append((ones(n), ones(n + 1)))
    return pairs


def pairing_grid(n: int) -> tuple[list[list[str]], list[list[str]]]:
    """Region codes and their images laid out with rows ``k`` and columns ``p``.

    Cells with ``k + p >= n`` are empty strings. The all-ones pair is not part
    of the grid.
    """
    if n < 1:
        raise DomainError("the grid needs n >= 1")
    codes = [[""] * n for _ in range(n)]
    images = [[""] * n for _ in range(n)]
    for p in range(n):
        for k in range(n - p):
            code = ones(k) + zeros(n - p - k) + ones(p)
            codes[k][p] = code
            images[k][p] = phi(code)
    return codes, images
