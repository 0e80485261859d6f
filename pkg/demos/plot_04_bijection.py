"""
Matching regions with foil splittings
=====================================

The ``n`` lines cut the plane into ``(n^2 + n + 2) / 2`` regions, and the
(n+1)-foil has the same number of two-loop splittings. ``phi`` pairs them:
a region code ``1^k 0^z 1^p`` goes to ``1^p 0 1^k 0 1^(z-1)``.
"""

from foilstates import foil_two_state_words, phi, phi_inverse, region_codes_closed

print("phi('1100001') =", phi("1100001"))
print("phi_inverse('10110111') =", phi_inverse("10110111"))

# the full pairing for four lines
from foilstates import pairing_table

for code, word in pairing_table(4):
    print(f"{code} -> {word}")

# it is a bijection: check it for every n up to 60
for n in range(61):
    regions = region_codes_closed(n)
    image = {phi(w) for w in regions}
    assert len(image) == len(regions)
    assert foil_two_state_words(n + 1) == image
    assert all(phi_inverse(phi(w)) == w for w in regions)
print("\nphi is a bijection for n <= 60")

# the pairing laid out by leading ones (rows) and trailing ones (columns)
from foilstates.tables import grid_cells, to_text

print(to_text(*grid_cells("regions-grid", 5), corner="k\\p"))
print(to_text(*grid_cells("states-grid", 5), corner="k\\p"))
