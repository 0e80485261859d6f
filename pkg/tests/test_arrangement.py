from fractions import Fraction

import pytest

from foilstates.arrangement import (
    TEST_POINT,
    Line,
    RationalPoint,
    SignVector,
    check_general_arrangement,
    enumerate_region_signvectors,
    family_line,
    halfplane_sign,
    intersection,
    region_witnesses,
    signvector_to_code,
)
from foilstates.errors import CapacityError, DomainError
from foilstates.words import region_codes_closed


def test_family_line():
    assert family_line(0) == Line(0, 1, 0)
    assert family_line(1).y_at(Fraction(5)) == 4
    assert family_line(3).y_at(Fraction(0)) == -9
    assert family_line(3).y_at(Fraction(1)) == -6


def test_from_slope_matches_family():
    for n in range(6):
        assert Line.from_slope(n, -n * n) == family_line(n)


def test_halfplane_sign_examples():
    for n in range(100):
        assert halfplane_sign(n, TEST_POINT) == 1
    assert halfplane_sign(2, RationalPoint(3, 2)) == 0
    assert halfplane_sign(0, RationalPoint(0, -1)) == -1


def test_intersection_examples():
    assert intersection(1, 2) == RationalPoint(3, 2)
    assert intersection(0, 1) == RationalPoint(1, 0)
    assert intersection(2, 5) == RationalPoint(7, 10)
    with pytest.raises(DomainError):
        intersection(4, 4)


@pytest.mark.parametrize("p,q", [(0, 1), (2, 5), (3, 11), (7, 4)])
def test_intersection_agrees_with_generic_solver(p, q):
    assert family_line(p).meet(family_line(q)) == intersection(p, q)


def test_general_arrangement_reports():
    assert check_general_arrangement([family_line(i) for i in range(50)]).ok
    r = check_general_arrangement([Line.from_slope(1, 0), Line.from_slope(1, 1)])
    assert (r.kind, r.indices) == ("parallel_pair", (0, 1))
    r = check_general_arrangement(
        [Line.from_slope(0, 0), Line.from_slope(1, 0), Line.from_slope(-1, 0)])
    assert (r.kind, r.indices, r.point) == ("triple_point", (0, 1, 2), RationalPoint(0, 0))
    assert check_general_arrangement([Line(1, 0, 0)]).ok
    with pytest.raises(DomainError):
        Line(0, 0, 1)


def test_upper_intersections():
    for r in range(41):
        for q in range(r):
            for p in range(q):
                assert halfplane_sign(r, intersection(p, q)) == 1


def test_signvector_to_code():
    assert signvector_to_code(SignVector((1, 1, 1, 1))) == "1111"
    assert signvector_to_code(SignVector((-1, -1, -1, -1))) == "0000"
    assert signvector_to_code(SignVector((1, -1))) == "10"
    assert str(SignVector((1, -1))) == "+-"
    with pytest.raises(DomainError):
        SignVector((1, 0))


def test_region_enumeration_examples():
    assert {signvector_to_code(v) for v in enumerate_region_signvectors(1)} == {"0", "1"}
    codes4 = {signvector_to_code(v) for v in enumerate_region_signvectors(4)}
    assert codes4 == {"0000", "1000", "1100", "1110", "0001", "1001", "1101",
                      "0011", "1011", "0111", "1111"}
    assert len(enumerate_region_signvectors(8)) == 37


@pytest.mark.parametrize("n", range(1, 16))
def test_geometry_matches_codes(n):
    vectors = enumerate_region_signvectors(n)
    assert {signvector_to_code(v) for v in vectors} == set(region_codes_closed(n))
    assert len(vectors) == (n * n + n + 2) // 2


@pytest.mark.parametrize("n", [1, 2, 6, 12])
def test_witnesses_realize_their_sign_vectors(n):
    for vector, pt in region_witnesses(n).items():
        assert tuple(halfplane_sign(i, pt) for i in range(n)) == vector.signs


def test_sampling_finds_every_region_of_a_fine_grid():
    # brute-force the n = 5 arrangement on a dense rational grid; no new codes appear
    n = 5
    known = enumerate_region_signvectors(n)
    seen = set()
    for i in range(-40, 120):
        for j in range(-120, 60):
            pt = RationalPoint(Fraction(i, 8) + Fraction(1, 97), Fraction(j, 4) + Fraction(1, 89))
            signs = tuple(halfplane_sign(k, pt) for k in range(n))
            assert 0 not in signs
            seen.add(SignVector(signs))
    assert seen == known


def test_oracle_cap():
    with pytest.raises(CapacityError):
        enumerate_region_signvectors(65)
    assert len(enumerate_region_signvectors(3, cap=3)) == 7
    with pytest.raises(DomainError):
        enumerate_region_signvectors(0)
