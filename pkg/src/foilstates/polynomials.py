"""Integer polynomials and the generating polynomials of twist loops and foils.

Coefficients are Python ints, so nothing overflows: the central binomial
coefficient of the foil polynomial passes 2**63 around ``n = 67``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_twist_closed",
    "poly_twist_recurrence",
    "poly_foil_closed",
    "poly_foil_recurrence",
    "coefficient_table",
    "lazy_caterer",
]


def _normalize(coefficients: Iterable[int]) -> tuple[int, ...]:
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with nonnegative integer coefficients.

    ``coefficients[k]`` is the coefficient of ``x**k``. The tuple is stored
    without trailing zeros, so the zero polynomial has no coefficients.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = _normalize(self.coefficients)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            if c < 0:
                raise ValueError(f"coefficients must be nonnegative, got {c}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> Polynomial:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; ``-1`` for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_mul(self, other)

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Polynomial((1,)), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self):
        return bool(self.coefficients)

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            head = "" if c == 1 else str(c)
            terms.append(head + ("x" if k == 1 else f"x^{k}"))
        return " + ".join(terms)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    """Coefficient-wise sum."""
    long, short = (a.coefficients, b.coefficients)
    if len(long) < len(short):
        long, short = short, long
    out = list(long)
    for k, c in enumerate(short):
        out[k] += c
    return Polynomial(tuple(out))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Convolution product."""
    if not a or not b:
        return Polynomial()
    out = [0] * (len(a.coefficients) + len(b.coefficients) - 1)
    for i, ca in enumerate(a.coefficients):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coefficients):
            out[i + j] += ca * cb
    return Polynomial(tuple(out))


_X = Polynomial((0, 1))
_X_PLUS_ONE = Polynomial((1, 1))


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


def poly_twist_closed(n: int) -> Polynomial:
    """Generating polynomial ``x(x+1)^n`` of the n-twist loop."""
    _check_n(n)
    return _X * _X_PLUS_ONE**n


def poly_twist_recurrence(n: int) -> Polynomial:
    """Twist-loop polynomial from ``T_n = x T_{n-1} + T_{n-1}``, ``T_0 = x``."""
    _check_n(n)
    t = _X
    for _ in range(n):
        t = _X * t + t
    return t


def poly_foil_closed(n: int) -> Polynomial:
    """Generating polynomial ``(x+1)^n + x^2 - 1`` of the n-foil.

    Built from binomial coefficients directly so the ``-1`` never produces a
    negative intermediate coefficient.
    """
    _check_n(n)
    coeffs = [comb(n, k) for k in range(n + 1)]
    coeffs += [0] * (3 - len(coeffs))
    coeffs[0] -= 1
    coeffs[2] += 1
    return Polynomial(tuple(coeffs))


def poly_foil_recurrence(n: int) -> Polynomial:
    """Foil polynomial by iterating ``F_n = T_{n-1} + F_{n-1}`` from ``F_0 = x^2``.

    The twist polynomials are accumulated alongside (``T_k = (x+1) T_{k-1}``)
    rather than taken from the closed form.
    """
    _check_n(n)
    f = Polynomial((0, 0, 1))
    t = _X
    for _ in range(n):
        f = t + f
        t = _X_PLUS_ONE * t
    return f


def coefficient_table(kind: str, max_n: int) -> list[list[int]]:
    """Coefficient triangle of the twist (``"twist"``) or foil (``"foil"``) polynomials.

    Row ``n`` holds the coefficients of ``x^0 .. x^K`` where ``K`` is the
    largest degree among rows ``0..max_n``; cells past a row's degree are 0.
    """
    _check_n(max_n)
    if kind == "twist":
        polys = [poly_twist_closed(n) for n in range(max_n + 1)]
    elif kind == "foil":
        polys = [poly_foil_closed(n) for n in range(max_n + 1)]
    else:
        raise ValueError(f"kind must be 'twist' or 'foil', got {kind!r}")
    width = max(p.degree for p in polys) + 1
    return [[p.coefficient(k) for k in range(width)] for p in polys]


def lazy_caterer(n: int) -> int:
    """Maximum number of plane regions cut by ``n`` lines, ``(n^2 + n + 2) / 2``."""
    _check_n(n)
    return (n * n + n + 2) // 2

