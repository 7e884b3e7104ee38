"""Hand-checked reference values for small instances.

These freeze the worked examples that the regression and verification
suites pin against: scaled right-eigenvector matrices at n = 3, two fully
worked bijection pipelines (one per sign), single-shuffle windows, a
re-indexing example, and a factorization row.  Multi-digit rows are given
least significant digit first.
"""

from __future__ import annotations

from fractions import Fraction

# --- scaled right eigenvector matrices at n = 3 --------------------------
# Entries of n! p^n R for p = 1, 2, 3, 3/2.  Integer for integer p.

SCALED_RIGHT_N3 = {
    Fraction(1): (
        (1, 3, 2),
        (1, 0, -1),
        (1, -3, 2),
    ),
    Fraction(2): (
        (1, 9, 23, 15),
        (1, 3, -1, -3),
        (1, -3, -1, 3),
        (1, -9, 23, -15),
    ),
    Fraction(3): (
        (1, 15, 66, 80),
        (1, 6, 3, -10),
        (1, -3, -6, 8),
        (1, -12, 39, -28),
    ),
    Fraction(3, 2): (
        (1, 6, Fraction(39, 4), Fraction(7, 2)),
        (1, Fraction(3, 2), Fraction(-3, 2), -1),
        (1, -3, Fraction(3, 4), Fraction(5, 4)),
        (1, Fraction(-15, 2), Fraction(33, 2), -10),
    ),
}

# --- deformed first-kind rows --------------------------------------------

STIRLING_FROBENIUS_ROWS = {
    (1, Fraction(2)): (1, 1),
    (2, Fraction(2)): (3, 4, 1),
    (3, Fraction(2)): (15, 23, 9, 1),
    (3, Fraction(3)): (80, 66, 15, 1),
    (3, Fraction(1)): (0, 2, 3, 1),
}

# --- single-shuffle windows ----------------------------------------------
# (b, n, p, labels, window pairs)

GSR_EXAMPLES = [
    (
        7, 8, 3,
        (4, 1, 6, 3, 0, 5, 0, 2),
        ((6, 1), (3, 1), (8, 0), (5, 0), (1, 0), (7, 2), (2, 0), (4, 2)),
    ),
    (
        3, 6, 2,
        (2, 1, 0, 1, 0, 1),
        ((6, 0), (3, 1), (1, 0), (4, 1), (2, 0), (5, 1)),
    ),
]

# --- two-level re-indexing example ---------------------------------------
# Applying the second word along the sorted order of the first.

STAR_EXAMPLE = {
    "word1": (1, 3, 2, 0, 1, 2),
    "word2": (5, 0, 3, 4, 6, 3),
    "starred2": (0, 3, 4, 5, 3, 6),
}

# --- window inversion example --------------------------------------------

INVERSE_EXAMPLE = {
    "n": 7,
    "p": 3,
    "pairs": ((6, 2), (5, 1), (2, 1), (3, 2), (1, 0), (7, 0), (4, 0)),
    "inverse_pairs": ((5, 0), (3, 2), (4, 1), (7, 0), (2, 2), (1, 1), (6, 0)),
    "inverse_descents": 2,
    "unique_word": (5, 4, 1, 2, 0, 6, 3),
}

# --- fully worked positive-base pipeline ---------------------------------
# b = 7, p = 3, n = 4, N = 3.  Rows least significant digit first.

PLUS_PIPELINE = {
    "b": 7,
    "p": 3,
    "n": 4,
    "rows": ((4, 5, 3), (5, 2, 0), (6, 4, 4), (2, 3, 0)),
    "values": (186, 19, 230, 23),
    "kappas": (0, 3, 3, 2),
    "remainders": (0, 0, 0),
    "bar_rows": ((4, 5, 3), (2, 1, 4), (1, 6, 1), (3, 2, 2)),
    "bar_values": (186, 205, 92, 115),
    "f_rows": ((5, 2, 4), (6, 3, 5), (3, 4, 5), (2, 0, 0)),
    "words": ((5, 6, 3, 2), (0, 4, 2, 3), (0, 4, 5, 5)),
    "factors": (
        ((3, 2), (4, 0), (2, 0), (1, 2)),
        ((1, 0), (4, 1), (2, 2), (3, 0)),
        ((1, 0), (2, 1), (3, 2), (4, 2)),
    ),
    "elements": (
        ((3, 2), (4, 0), (2, 0), (1, 2)),
        ((2, 1), (3, 0), (4, 1), (1, 2)),
        ((2, 2), (3, 2), (4, 0), (1, 2)),
    ),
    "descents": (3, 3, 2),
}

# --- fully worked negative-base pipeline ---------------------------------
# b = 8, p = 3, n = 4, N = 4.

MINUS_PIPELINE = {
    "b": 8,
    "p": 3,
    "n": 4,
    "rows": ((4, 7, 4, 0), (3, 5, 2, 1), (1, 4, 5, 2), (2, 6, 3, 0)),
    "kappas": (0, 3, 1, 2, 4),
    "remainders": (4, 3, 1, 7),
    "flipped_rows": ((4, 0, 4, 7), (3, 2, 2, 6), (1, 3, 5, 5), (2, 1, 3, 7)),
    "bar_rows": ((4, 0, 4, 7), (7, 2, 6, 5), (0, 6, 3, 3), (2, 7, 6, 2)),
    "f_rows": ((4, 1, 4, 6), (5, 0, 3, 1), (0, 2, 3, 2), (6, 5, 4, 0)),
    "words": ((4, 5, 0, 6), (2, 1, 0, 5), (3, 4, 3, 4), (1, 2, 6, 0)),
    "factors": (
        ((2, 1), (3, 2), (1, 0), (4, 0)),
        ((3, 2), (2, 1), (1, 0), (4, 2)),
        ((1, 0), (3, 1), (2, 0), (4, 1)),
        ((2, 1), (3, 2), (4, 0), (1, 0)),
    ),
    "primed_factors": {
        2: ((3, 1), (2, 2), (1, 0), (4, 1)),
        4: ((2, 2), (3, 1), (4, 0), (1, 0)),
    },
    "elements": (
        ((2, 1), (3, 2), (1, 0), (4, 0)),
        ((2, 0), (1, 2), (3, 1), (4, 1)),
        ((3, 1), (1, 2), (2, 1), (4, 2)),
        ((4, 1), (2, 1), (3, 2), (1, 2)),
    ),
    "raw_descents": (1, 1, 2, 4),  # dash, plain, dash, plain
    "matched_values": (3, 1, 2, 4),
}
