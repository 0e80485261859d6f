"""
Which splittings leave exactly two loops
========================================

The ``x^2`` coefficient of a state polynomial counts splittings that
leave two loops. For foils and twist loops those splittings have a short
description as binary words: ``0`` marks an A-split, ``1`` a B-split.
"""

from foilstates import (
    build_foil,
    build_twist,
    foil_two_state_words,
    states_by_components,
    twist_two_state_words,
)

# a twist loop with n kinks: exactly one A-split
print("twist, n=4:", list(twist_two_state_words(4)))

# a foil: exactly two A-splits, or none at all
print("foil,  n=4:", list(foil_two_state_words(4)))

# the descriptions agree with brute-force enumeration
for n in range(2, 11):
    assert states_by_components(build_foil(n), 2) == foil_two_state_words(n)
    assert states_by_components(build_twist(n), 2) == twist_two_state_words(n)
print("enumeration agrees for n <= 10")

# the same sets grow by peeling: F_n = 0 T_(n-1) + 1 F_(n-1)
from foilstates import foil_two_state_words_rec

print("recurrence agrees at n=30:", foil_two_state_words_rec(30) == foil_two_state_words(30))

# counting loops of a single splitting directly
from foilstates import count_components

foil = build_foil(5)
for word in ("00000", "11111", "01011", "10001"):
    print(f"foil n=5, split {word}: {count_components(foil, word)} loops")
