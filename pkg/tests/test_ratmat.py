"""Exact matrix arithmetic and serialization."""

from fractions import Fraction
from random import Random

import pytest

from carrieslab import RationalMatrix
from carrieslab.ratmat import solve_linear


def _random_matrix(rng, dim, span=9):
    return RationalMatrix(
        [
            [Fraction(rng.randint(-span, span), rng.randint(1, span)) for _ in range(dim)]
            for _ in range(dim)
        ]
    )


def test_constructor_rejects_ragged_and_empty():
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        RationalMatrix([])


def test_identity_and_diagonal():
    i3 = RationalMatrix.identity(3)
    d = RationalMatrix.diagonal([1, Fraction(1, 2), Fraction(1, 4)])
    assert i3 @ d == d == d @ i3
    assert d[1][1] == Fraction(1, 2) and d[0][1] == 0


def test_power_matches_repeated_product():
    rng = Random(5)
    m = _random_matrix(rng, 3)
    by_hand = RationalMatrix.identity(3)
    for k in range(6):
        assert m.power(k) == by_hand
        by_hand = by_hand @ m
    with pytest.raises(ValueError):
        m.power(-1)


def test_inverse_round_trip_and_singular():
    rng = Random(7)
    for dim in (1, 2, 3, 4):
        while True:  # singular draws are rare but possible
            m = _random_matrix(rng, dim)
            try:
                inv = m.inverse()
                break
            except ValueError:
                continue
        assert m @ inv == RationalMatrix.identity(dim)
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [2, 4]]).inverse()


def test_solve_linear_agrees_with_inverse():
    m = RationalMatrix([[2, 1], [1, 3]])
    rhs = (Fraction(1), Fraction(0))
    x = solve_linear(m, rhs)
    assert tuple(sum(m[i][j] * x[j] for j in range(2)) for i in range(2)) == rhs


def test_transpose_scale_row_col_mul():
    m = RationalMatrix([[1, 2], [3, 4]])
    assert m.transpose() == RationalMatrix([[1, 3], [2, 4]])
    assert m.scale(Fraction(1, 2)) == RationalMatrix(
        [[Fraction(1, 2), 1], [Fraction(3, 2), 2]]
    )
    assert m.row_mul([1, 2]) == (7, 10)  # row vector times matrix
    assert m.col_mul([1, 0]) == (1, 3)  # matrix times column vector


def test_stochastic_and_positive_predicates():
    half = Fraction(1, 2)
    m = RationalMatrix([[half, half], [1, 0]])
    assert m.is_stochastic() and not m.is_positive()
    assert m.row_sums() == (1, 1)
    assert RationalMatrix([[half, half], [half, half]]).is_positive()
    assert not RationalMatrix([[half, 1]] * 2).is_stochastic()


def test_serialization_round_trips():
    rng = Random(11)
    m = _random_matrix(rng, 3)
    assert RationalMatrix.from_string_rows(m.to_string_rows()) == m
    assert RationalMatrix.from_json_obj(m.to_json_obj()) == m
    assert RationalMatrix.from_csv(m.to_csv()) == m


def test_csv_header_mismatch_rejected():
    text = "dim,3\n1,0\n0,1\n"
    with pytest.raises(ValueError):
        RationalMatrix.from_csv(text)
    with pytest.raises(ValueError):
        RationalMatrix.from_csv("1,0\n0,1\n")
