"""Binary words and the word sets for 2-states and plane regions.

Words are plain ``str`` values over ``"0"``/``"1"``; the empty string is the
empty word. A :class:`WordSet` is a duplicate-free, sorted collection of words
of one length.

Sets built here:

* ``twist_two_state_words(n)``: split words of the n-twist loop giving 2 components.
* ``foil_two_state_words(n)``: split words of the n-foil giving 2 components.
* ``region_codes_closed(n)``: half-plane codes of the regions cut by n lines.
* ``new_region_codes(n)``: codes of the regions created by the n-th line.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DomainError

__all__ = [
    "WordSet",
    "check_word",
    "ones",
    "zeros",
    "int_to_word",
    "twist_two_state_words",
    "foil_two_state_words",
    "foil_two_state_words_rec",
    "region_codes_closed",
    "region_codes_rec",
    "new_region_codes",
    "peel",
    "peel_prefix",
    "is_region_code",
    "is_foil_two_state_word",
]

EMPTY = ""


def check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip("01"):
        raise DomainError(f"not a binary word: {w!r}")
    return w


def ones(k: int) -> str:
    """``1`` repeated ``k`` times; empty for ``k <= 0``."""
    return "1" * k


def zeros(k: int) -> str:
    return "0" * k


def int_to_word(index: int, length: int) -> str:
    """Binary expansion of ``index`` padded to ``length`` digits, most significant first."""
    return format(index, f"0{length}b") if length else EMPTY


class WordSet:
    """Canonically ordered set of binary words sharing one length.

    ``length`` must be given for an empty set built from no words; otherwise
    it is read off the words. Iteration follows lexicographic order.
    """

    __slots__ = ("_sorted", "_length", "_members")

    def __init__(self, words: Iterable[str] = (), length: int | None = None):
        unique = {check_word(w) for w in words}
        lengths = {len(w) for w in unique}
        if len(lengths) > 1:
            raise DomainError(f"words of mixed lengths {sorted(lengths)}")
        if lengths:
            (found,) = lengths
            if length is not None and length != found:
                raise DomainError(f"expected words of length {length}, got {found}")
            length = found
        self._length = length
        self._members = frozenset(unique)
        self._sorted = None

    @classmethod
    def _trusted(cls, words: Iterable[str], length: int) -> WordSet:
        """Build from words already known to be binary, distinct-length-free and of ``length``."""
        self = cls.__new__(cls)
        self._members = frozenset(words)
        self._sorted = None
        self._length = length
        return self

    @property
    def length(self) -> int | None:
        """Common word length, ``None`` for an empty set of unknown length."""
        return self._length

    @property
    def words(self) -> tuple[str, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._members))
        return self._sorted

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __len__(self):
        return len(self._members)

    def __contains__(self, w):
        return w in self._members

    def __eq__(self, other):
        if isinstance(other, WordSet):
            return self._members == other._members
        if isinstance(other, (set, frozenset)):
            return self._members == other
        return NotImplemented

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        shown = ", ".join(w or "ε" for w in self.words)
        return f"WordSet({{{shown}}})"

    def prepend(self, prefix: str) -> WordSet:
        return WordSet._trusted((prefix + w for w in self._members), _shift(self._length, prefix))

    def append(self, suffix: str) -> WordSet:
        return WordSet._trusted((w + suffix for w in self._members), _shift(self._length, suffix))

    def __or__(self, other: WordSet) -> WordSet:
        length = self._length if self._length is not None else other._length
        if self._members and other._members and self._length != other._length:
            raise DomainError(f"cannot join words of lengths {self._length} and {other._length}")
        return WordSet._trusted(self._members | other._members, length)


def _shift(length, affix):
    return None if length is None else length + len(affix)


def _check_n(n: int, minimum: int = 0) -> None:
    if not isinstance(n, int) or n < minimum:
        raise DomainError(f"n must be an integer >= {minimum}, got {n!r}")


def twist_two_state_words(n: int) -> WordSet:
    """Words ``1^k 0 1^(n-k-1)``, one A-split among B-splits.

    By convention the 0-twist loop has no 2-state, so ``n = 0`` gives the
    empty set.
    """
    _check_n(n)
    return WordSet((ones(k) + "0" + ones(n - k - 1) for k in range(n)), length=n)


def foil_two_state_words(n: int) -> WordSet:
    """Split words of the n-foil giving exactly two components.

    Either two A-splits among B-splits, ``1^p 0 1^k 0 1^(n-p-k-2)``, or all
    B-splits. The 0-foil is already two circles, so ``n = 0`` gives ``{ε}``.
    """
    _check_n(n)
    words = [ones(n)]
    for p in range(n - 1):
        for k in range(n - p - 1):
            words.append("1" * p + "0" + "1" * k + "0" + "1" * (n - p - k - 2))
    return WordSet._trusted(words, n)


def foil_two_state_words_rec(n: int) -> WordSet:
    """Same set as :func:`foil_two_state_words`, from ``F_n = 0 T_(n-1) ∪ 1 F_(n-1)``."""
    _check_n(n)
    if n == 0:
        return WordSet([EMPTY])
    current = {"1"}
    for m in range(2, n + 1):
        twist = (ones(k) + "0" + ones(m - k - 2) for k in range(m - 1))
        current = {"0" + w for w in twist} | {"1" + w for w in current}
    return WordSet._trusted(current, n)


def new_region_codes(n: int) -> WordSet:
    """Codes ``1^k 0^(n-k)``, ``0 <= k < n``, of the regions the n-th line creates."""
    _check_n(n, minimum=1)
    return WordSet((ones(k) + zeros(n - k) for k in range(n)), length=n)


def region_codes_closed(n: int) -> WordSet:
    """Codes ``1^k 0^(n-p-k) 1^p`` plus ``1^n`` of the regions cut by ``n`` lines."""
    _check_n(n)
    words = [ones(n)]
    for p in range(n):
        for k in range(n - p):
            words.append("1" * k + "0" * (n - p - k) + "1" * p)
    return WordSet._trusted(words, n)


def region_codes_rec(n: int) -> WordSet:
    """Region codes from ``P_0 = {ε}``, ``P_n = P_(n-1) 1 ∪ R_n``."""
    _check_n(n)
    current = {EMPTY}
    for m in range(1, n + 1):
        current = {w + "1" for w in current} | {ones(k) + zeros(m - k) for k in range(m)}
    return WordSet._trusted(current, n)


def peel(s: WordSet) -> WordSet:
    """Words of ``s`` ending in ``1``, with that digit removed.

    Inverts the ``P_(n-1) 1`` step of the region-code recurrence.
    """
    if not s.length:
        raise DomainError("peel needs words of length >= 1")
    return WordSet((w[:-1] for w in s if w.endswith("1")), length=s.length - 1)


def peel_prefix(s: WordSet) -> WordSet:
    """Words of ``s`` starting with ``1``, with that digit removed (the 2-state recurrence)."""
    if not s.length:
        raise DomainError("peel needs words of length >= 1")
    return WordSet((w[1:] for w in s if w.startswith("1")), length=s.length - 1)


def is_region_code(w: str) -> bool:
    """True iff ``w`` is ``1^n`` or ``1^a 0^b 1^c`` with ``b >= 1``."""
    check_word(w)
    return "1" not in w.strip("1")


def is_foil_two_state_word(w: str) -> bool:
    """True iff ``w`` is all ones or has exactly two zeros."""
    check_word(w)
    return w.count("0") in (0, 2)
