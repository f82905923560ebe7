"""Reference basis of the degree-8 quotient in four variables.

The 55 classes split into seven symmetric families A..G, each listed in
lexicographically decreasing order.  A, B, C and F are full orbits under
variable permutations; D, E and G are hand-picked subsets of theirs.
"""

from __future__ import annotations

from .poly import Polynomial

FAMILY_A = (
    (7, 1, 0, 0), (7, 0, 1, 0), (7, 0, 0, 1), (1, 7, 0, 0), (1, 0, 7, 0),
    (1, 0, 0, 7), (0, 7, 1, 0), (0, 7, 0, 1), (0, 1, 7, 0), (0, 1, 0, 7),
    (0, 0, 7, 1), (0, 0, 1, 7),
)

FAMILY_B = (
    (3, 3, 1, 1), (3, 1, 3, 1), (3, 1, 1, 3), (1, 3, 3, 1), (1, 3, 1, 3),
    (1, 1, 3, 3),
)

FAMILY_C = (
    (6, 1, 1, 0), (6, 1, 0, 1), (6, 0, 1, 1), (1, 6, 1, 0), (1, 6, 0, 1),
    (1, 1, 6, 0), (1, 1, 0, 6), (1, 0, 6, 1), (1, 0, 1, 6), (0, 6, 1, 1),
    (0, 1, 6, 1), (0, 1, 1, 6),
)

FAMILY_D = (
    (5, 3, 0, 0), (5, 0, 3, 0), (5, 0, 0, 3), (0, 5, 3, 0), (0, 5, 0, 3),
    (0, 0, 5, 3),
)

FAMILY_E = (
    (5, 2, 1, 0), (5, 2, 0, 1), (5, 0, 2, 1), (2, 5, 1, 0), (2, 5, 0, 1),
    (2, 1, 5, 0), (2, 1, 0, 5), (2, 0, 5, 1), (2, 0, 1, 5), (0, 5, 2, 1),
    (0, 2, 5, 1), (0, 2, 1, 5),
)

FAMILY_F = (
    (5, 1, 1, 1), (1, 5, 1, 1), (1, 1, 5, 1), (1, 1, 1, 5),
)

FAMILY_G = (
    (4, 2, 1, 1), (4, 1, 2, 1), (1, 4, 2, 1),
)

FAMILIES = {
    "A": FAMILY_A,
    "B": FAMILY_B,
    "C": FAMILY_C,
    "D": FAMILY_D,
    "E": FAMILY_E,
    "F": FAMILY_F,
    "G": FAMILY_G,
}

BASIS_55 = (
    FAMILY_A + FAMILY_B + FAMILY_C + FAMILY_D + FAMILY_E + FAMILY_F + FAMILY_G
)


def family_sum(letter: str) -> Polynomial:
    """Sum of all monomials of one family, e.g. s_G for letter "G"."""
    return Polynomial(4, FAMILIES[letter])
