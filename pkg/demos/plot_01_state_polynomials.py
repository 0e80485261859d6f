"""
State polynomials of foil knots and twist loops
===============================================

Each crossing of a diagram can be split two ways. Counting the closed
loops left over after every choice gives a polynomial in ``x``: the
coefficient of ``x^k`` is the number of choices that leave ``k`` loops.
"""

# the closed forms, as exact integer polynomials
from foilstates import poly_foil_closed, poly_twist_closed

for n in range(6):
    print(f"foil  n={n}:  {poly_foil_closed(n)}")
print()
for n in range(6):
    print(f"twist n={n}:  {poly_twist_closed(n)}")

# the same polynomials by brute force: enumerate all 2^n splittings
from foilstates import build_foil, build_twist, state_sum

for n in range(9):
    assert state_sum(build_foil(n)) == poly_foil_closed(n)
    assert state_sum(build_twist(n)) == poly_twist_closed(n)
print("\nenumeration agrees with the closed forms for n <= 8")

# a foil is one twist loop plus a smaller foil
from foilstates import poly_foil_recurrence

print("F_10 by recurrence:", poly_foil_recurrence(10))

# the x^2 column counts the pieces of a pancake cut n - 1 times
from foilstates import lazy_caterer

print("x^2 coefficients:", [poly_foil_closed(n).coefficient(2) for n in range(1, 12)])
print("lazy caterer    :", [lazy_caterer(n - 1) for n in range(1, 12)])

# the coefficient triangle, laid out like a printed table
from foilstates.tables import to_text, triangle_cells

print()
print(to_text(*triangle_cells("foil", 8), corner="n\\k"))
