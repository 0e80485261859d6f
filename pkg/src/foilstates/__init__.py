"""State enumeration of foil knots, line-arrangement region codes, and a bijection between them."""

from .arrangement import (
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
from .bijection import parse_region_code, parse_state_word, pairing_table, phi, phi_ell, phi_inverse
from .diagram import (
    ArcEnd,
    Crossing,
    PlanarDiagram,
    build_foil,
    build_twist,
    count_components,
    state_sum,
    states_by_components,
)
from .errors import CapacityError, DomainError, FoilStatesError, WordLengthError
from .polynomials import (
    Polynomial,
    coefficient_table,
    lazy_caterer,
    poly_add,
    poly_foil_closed,
    poly_foil_recurrence,
    poly_mul,
    poly_twist_closed,
    poly_twist_recurrence,
)
from .words import (
    WordSet,
    foil_two_state_words,
    foil_two_state_words_rec,
    new_region_codes,
    peel,
    peel_prefix,
    region_codes_closed,
    region_codes_rec,
    twist_two_state_words,
)

__version__ = "0.1.0"
