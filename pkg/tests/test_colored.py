"""Colored permutations: algebra, orders, and descent statistics."""

import pytest

from carrieslab import (
    ColoredPermutation,
    compose,
    dash_descent_count,
    descent_count,
    enumerate_group,
    inverse,
    reverse_map,
)
from carrieslab.colored import dash_key, full_mapping, standard_key


def test_validation():
    with pytest.raises(ValueError):
        ColoredPermutation(2, 2, ((1, 0),))  # wrong length
    with pytest.raises(ValueError):
        ColoredPermutation(2, 2, ((1, 0), (1, 1)))  # repeated position
    with pytest.raises(ValueError):
        ColoredPermutation(2, 2, ((1, 2), (2, 0)))  # color out of range
    with pytest.raises(ValueError):
        ColoredPermutation(2, 0, ((1, 0), (2, 0)))  # bad p


def test_group_axioms_on_small_groups():
    for n, p in ((2, 2), (3, 2), (2, 3)):
        elements = list(enumerate_group(n, p))
        assert len(elements) == p**n * (1 if n == 0 else __import__("math").factorial(n))
        identity = ColoredPermutation.identity(n, p)
        for sigma in elements:
            assert compose(sigma, identity) == sigma == compose(identity, sigma)
            assert compose(inverse(sigma), sigma) == identity
            assert compose(sigma, inverse(sigma)) == identity
        # Spot-check associativity on a few triples.
        for a, b, c in zip(elements, elements[1:], elements[2:]):
            assert compose(a, compose(b, c)) == compose(compose(a, b), c)


def test_composition_acts_on_windows():
    # tau o sigma: apply sigma first, then tau; colors add along the way.
    sigma = ColoredPermutation(2, 3, ((2, 1), (1, 0)))
    tau = ColoredPermutation(2, 3, ((1, 2), (2, 1)))
    prod = compose(tau, sigma)
    # Letter 1: sigma sends it to 2 with color 1, tau sends 2 to 2 adding 1.
    assert prod.pairs == ((2, 2), (1, 2))


def test_full_mapping_is_equivariant():
    sigma = ColoredPermutation(3, 2, ((2, 1), (3, 0), (1, 1)))
    mapping = full_mapping(sigma)
    assert mapping[(1, 0)] == (2, 1)
    # Shifting the input color shifts the output color by the same amount.
    for (k, c), (image, color) in mapping.items():
        shifted = mapping[(k, (c + 1) % 2)]
        assert shifted == (image, (color + 1) % 2)


def test_keys_order_colors_differently():
    p = 3
    # Standard order: color 0 first, then colors p-1 down to 1.
    assert standard_key((5, 0), p) < standard_key((5, 2), p) < standard_key((5, 1), p)
    # Dash order: colors 0, 1, ..., p-1.
    assert dash_key((5, 0), p) < dash_key((5, 1), p) < dash_key((5, 2), p)
    # Within one color, positions increase.
    assert standard_key((1, 1), p) < standard_key((2, 1), p)


def test_descent_counts_small_cases():
    identity = ColoredPermutation.identity(3, 2)
    assert descent_count(identity) == 0
    # A nonzero color at the last letter always counts for the standard
    # statistic, and a color p-1 there counts for the dash statistic.
    sigma = ColoredPermutation(3, 2, ((1, 0), (2, 0), (3, 1)))
    assert descent_count(sigma) == 1
    assert dash_descent_count(sigma) == 1
    drop = ColoredPermutation(3, 2, ((2, 0), (1, 0), (3, 0)))
    assert descent_count(drop) == 1  # the internal drop 2 > 1
    assert dash_descent_count(drop) == 1


def test_dash_equals_standard_for_one_color():
    for sigma in enumerate_group(3, 1):
        assert dash_descent_count(sigma) == descent_count(sigma)


def test_reverse_maps_are_involutive_bijections():
    for variant, n, p in (("R1", 3, 1), ("R2", 2, 2), ("prime", 2, 3)):
        seen = set()
        count = 0
        for sigma in enumerate_group(n, p):
            image = reverse_map(sigma, variant)
            assert reverse_map(image, variant) == sigma
            seen.add(image.pairs)
            count += 1
        assert len(seen) == count
    with pytest.raises(ValueError):
        reverse_map(ColoredPermutation.identity(2, 3), "R1")
    with pytest.raises(ValueError):
        reverse_map(ColoredPermutation.identity(2, 3), "R2")
    with pytest.raises(ValueError):
        reverse_map(ColoredPermutation.identity(2, 2), "R3")


def test_prime_negates_colors():
    sigma = ColoredPermutation(2, 3, ((2, 1), (1, 2)))
    assert reverse_map(sigma, "prime").pairs == ((2, 2), (1, 1))


def test_text_and_pairs_round_trip():
    sigma = ColoredPermutation(3, 2, ((2, 1), (3, 0), (1, 1)))
    assert sigma.to_text() == "(2,1)(3,0)(1,1)"
    assert ColoredPermutation.from_pairs(3, 2, sigma.to_pairs()) == sigma
