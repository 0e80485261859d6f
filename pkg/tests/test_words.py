import itertools
import re

import pytest
from hypothesis import given, strategies as st

from foilstates.errors import DomainError
from foilstates.words import (
    WordSet,
    foil_two_state_words,
    foil_two_state_words_rec,
    is_foil_two_state_word,
    is_region_code,
    new_region_codes,
    peel,
    peel_prefix,
    region_codes_closed,
    region_codes_rec,
    twist_two_state_words,
)

REGION_SHAPE = re.compile(r"1*0+1*")


def all_words(n):
    return ["".join(d) for d in itertools.product("01", repeat=n)]


def test_wordset_canonical_and_uniform():
    s = WordSet(["10", "01", "10"])
    assert s.words == ("01", "10")
    assert s.length == 2
    with pytest.raises(DomainError):
        WordSet(["1", "10"])
    with pytest.raises(DomainError):
        WordSet(["12"])
    assert WordSet([], length=3).length == 3
    assert WordSet([""]).length == 0


def test_twist_two_state_words():
    assert twist_two_state_words(3) == {"011", "101", "110"}
    assert len(twist_two_state_words(0)) == 0
    # a single A-split (digit 0) pinches the 1-twist loop into two circles
    assert twist_two_state_words(1) == {"0"}


def test_foil_two_state_words():
    assert foil_two_state_words(4) == {"0011", "0101", "0110", "1001", "1010", "1100", "1111"}
    assert foil_two_state_words(2) == {"00", "11"}
    assert foil_two_state_words(0) == {""}
    assert foil_two_state_words(1) == {"1"}


def test_foil_two_state_words_rec():
    assert foil_two_state_words_rec(3) == {"001", "010", "100", "111"}
    assert foil_two_state_words_rec(1) == {"1"}
    assert len(foil_two_state_words_rec(5)) == 11


def test_region_codes():
    p4 = {"0000", "1000", "1100", "1110", "0001", "1001", "1101", "0011", "1011", "0111", "1111"}
    assert region_codes_closed(4) == p4
    assert region_codes_closed(1) == {"0", "1"}
    assert region_codes_closed(0) == {""}
    assert region_codes_rec(2) == {"00", "10", "01", "11"}
    assert region_codes_rec(3) == {"000", "100", "110", "001", "101", "011", "111"}
    assert len(region_codes_rec(8)) == 37


def test_new_region_codes():
    assert new_region_codes(1) == {"0"}
    assert new_region_codes(3) == {"000", "100", "110"}
    assert new_region_codes(7) == {"0000000", "1000000", "1100000", "1110000",
                                   "1111000", "1111100", "1111110"}
    with pytest.raises(DomainError):
        new_region_codes(0)


def test_peel():
    assert peel(region_codes_closed(4)) == region_codes_closed(3)
    assert peel_prefix(foil_two_state_words(4)) == foil_two_state_words(3)
    assert peel(WordSet(["11"])) == {"1"}
    with pytest.raises(DomainError):
        peel(WordSet([""]))


@pytest.mark.parametrize("n", range(0, 65))
def test_closed_forms_match_recurrences(n):
    assert region_codes_closed(n) == region_codes_rec(n)
    assert foil_two_state_words(n) == foil_two_state_words_rec(n)


@pytest.mark.parametrize("n", range(0, 65))
def test_cardinalities(n):
    assert len(region_codes_closed(n)) == (n * n + n + 2) // 2
    if n >= 1:
        assert len(foil_two_state_words(n)) == (n * n - n + 2) // 2
        assert len(twist_two_state_words(n)) == n


@pytest.mark.parametrize("n", range(1, 40))
def test_peel_inverts_append(n):
    assert peel(region_codes_closed(n)) == region_codes_closed(n - 1)
    assert peel_prefix(foil_two_state_words(n)) == foil_two_state_words(n - 1)


@pytest.mark.parametrize("n", range(0, 13))
def test_membership_by_exhaustion(n):
    words = all_words(n)
    regions = {w for w in words if w == "1" * n or REGION_SHAPE.fullmatch(w)}
    assert region_codes_closed(n) == regions
    if n >= 2:
        foils = {w for w in words if w.count("0") in (0, 2)}
        assert foil_two_state_words(n) == foils


@given(st.text(alphabet="01", max_size=40))
def test_membership_predicates(w):
    n = len(w)
    assert is_region_code(w) == (w in region_codes_closed(n))
    if n >= 2:
        assert is_foil_two_state_word(w) == (w in foil_two_state_words(n))
