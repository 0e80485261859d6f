"""
Regions cut by the lines y = n x - n^2
======================================

The lines ``y = n x - n^2`` are tangent to the parabola ``y = x^2 / 4``,
so no two are parallel and no three meet. Each region of the plane gets a
binary code: digit ``i`` is ``1`` when the region lies on the same side
of line ``i`` as the point ``(-1, 1)``.
"""

from fractions import Fraction

from foilstates import arrangement as geo

# the first few lines, and where two of them cross
for i in range(4):
    print(f"line {i}: {geo.family_line(i)}")
print("lines 2 and 5 meet at", geo.intersection(2, 5))

# no parallel pairs, no triple points
print("general position (50 lines):", geo.check_general_arrangement(
    [geo.family_line(i) for i in range(50)]).ok)

# find every region by sampling points, exactly
n = 4
witnesses = geo.region_witnesses(n)
for vector, point in sorted(witnesses.items(), key=lambda kv: geo.signvector_to_code(kv[0])):
    print(f"{geo.signvector_to_code(vector)}  at ({point.x}, {point.y})")

# the codes are 1^k 0^z 1^p, or all ones
from foilstates import lazy_caterer, region_codes_closed

codes = {geo.signvector_to_code(v) for v in witnesses}
print("matches the combinatorial description:", codes == set(region_codes_closed(n)))
print("region counts:", [len(region_codes_closed(m)) for m in range(1, 11)])
print("lazy caterer :", [lazy_caterer(m) for m in range(1, 11)])

# every intersection of two lines lies above all later lines
point = geo.intersection(1, 3)
print("sign of line 7 at (4, 3):", geo.halfplane_sign(7, point))
assert point == geo.RationalPoint(Fraction(4), Fraction(3))
