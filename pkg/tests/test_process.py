"""Chain parameters, digit sets, and trace mechanics."""

from fractions import Fraction

import pytest

from carrieslab import (
    CarrySet,
    ProcessParams,
    derive_carry_set,
    derive_p,
    digit_expansion,
    digit_value,
    make_process,
    original_step,
    process_from_digit_set,
    realized_carry_set,
    simulate_trace,
    step_carry,
)


def test_carry_set_normalization_round_trip():
    cs = derive_carry_set("-", 3, -1, 4)
    assert cs.size in (4, 5)
    for carry in cs.values():
        assert carry in cs
        assert cs.to_original(cs.to_normalized(carry)) == carry
    with pytest.raises(ValueError):
        cs.to_normalized(cs.max_carry + 1)
    with pytest.raises(ValueError):
        cs.to_original(-1)


def test_carry_set_size_tracks_p():
    for sign in ("+", "-"):
        for b in (2, 3, 4, 5):
            for d in range(1 - b, 1):
                for n in (1, 2, 3, 4):
                    cs = derive_carry_set(sign, b, d, n)
                    p = derive_p(sign, b, d, n)
                    assert cs.size == (n if p == 1 else n + 1)


def test_classical_digit_set_gives_p_one():
    assert derive_p("+", 10, 0, 5) == 1
    cs = derive_carry_set("+", 10, 0, 5)
    assert (cs.min_carry, cs.max_carry) == (0, 4)


def test_params_validation():
    with pytest.raises(ValueError):
        make_process("+", 3, 2, Fraction(5, 2))  # (b-1)/p = 4/5
    with pytest.raises(ValueError):
        make_process("-", 3, 2, 3)  # (b+1)/p = 4/3
    with pytest.raises(ValueError):
        make_process("+", 1, 2, 1)
    with pytest.raises(ValueError):
        make_process("x", 3, 2, 1)
    with pytest.raises(ValueError):
        make_process("+", 3, 0, 1)
    params = make_process("+", 3, 2, Fraction(2))
    assert params.p == 2 and isinstance(params.p, Fraction)


def test_state_count_and_shift():
    plus = make_process("+", 5, 3, 2)
    assert plus.state_count == 4
    assert plus.column_shift == 2  # (b-1)(1 - 1/p)
    assert plus.reflected_column_shift == plus.b - 1 - plus.column_shift
    minus = make_process("-", 5, 3, 2)
    assert minus.state_count == 4
    assert minus.column_shift == 2  # (b+1)/p - 1
    one = make_process("+", 5, 3, 1)
    assert one.state_count == 3 and one.column_shift == 0


def test_conjugate_parameter():
    params = make_process("+", 7, 2, 3)
    assert params.p_conjugate == Fraction(3, 2)
    assert make_process("+", 7, 2, 1).p_conjugate is None


def test_digit_set_pins_down_params():
    params = process_from_digit_set("-", 2, -1, 2)
    assert params.sign == "-" and params.p == 3 and params.d == -1
    # Passing a p that disagrees with d is rejected.
    with pytest.raises(ValueError):
        make_process("-", 2, 2, 1, d=-1)


def test_step_carry_agrees_with_original_coordinates():
    for sign in ("+", "-"):
        for b, d in ((3, 0), (3, -1), (4, -2), (5, -4)):
            for n in (1, 2, 3):
                params = process_from_digit_set(sign, b, d, n)
                cs = derive_carry_set(sign, b, d, n)
                for carry in cs.values():
                    for digits in [(0,) * n, (b - 1,) * n, tuple(range(n))]:
                        offset = tuple(x + d for x in digits)
                        nxt_orig, rem_orig = original_step(sign, b, d, carry, offset)
                        nxt, rem = step_carry(params, cs.to_normalized(carry), digits)
                        assert nxt == cs.to_normalized(nxt_orig)
                        assert rem == rem_orig - d


def test_realized_carries_fill_the_interval():
    for sign in ("+", "-"):
        for b in (2, 3, 4):
            for d in range(1 - b, 1):
                for n in (1, 2, 3):
                    cs = derive_carry_set(sign, b, d, n)
                    assert realized_carry_set(sign, b, d, n) == frozenset(cs.values())


def test_simulate_trace_reproducible_and_valid():
    params = make_process("-", 4, 3, 5)
    a = simulate_trace(params, 20, seed=11)
    b = simulate_trace(params, 20, seed=11)
    c = simulate_trace(params, 20, seed=12)
    assert a == b and a != c
    assert a.kappas[0] == 0 and len(a.kappas) == 21 and a.steps == 20
    for step in range(20):
        nxt, rem = step_carry(params, a.kappas[step], a.summand_digits[step])
        assert (nxt, rem) == (a.kappas[step + 1], a.remainders[step])
        assert all(0 <= x < params.b for x in a.summand_digits[step])


def test_simulate_trace_with_given_columns():
    params = make_process("+", 3, 2, 1)
    trace = simulate_trace(params, 2, columns=[(2, 2), (1, 2)])
    assert trace.kappas == (0, 1, 1)
    assert trace.remainders == (1, 1)
    with pytest.raises(ValueError):
        simulate_trace(params, 2, columns=[(2, 2)])
    with pytest.raises(ValueError):
        simulate_trace(params, 1, columns=[(3, 0)])


def test_digit_expansion_round_trip():
    for sign, b, d in (("+", 2, 0), ("+", 5, -2), ("-", 2, 0), ("-", 3, -1), ("-", 10, -9)):
        for x in (0, 1, 7, 25, 1000):
            digits = digit_expansion(x, sign, b, d)
            assert digit_value(digits, sign, b) == x
            assert all(d <= a < d + b for a in digits)


def test_expansion_domain_errors():
    with pytest.raises(ValueError):
        digit_expansion(-9, "-", 3, 0)  # only nonnegative inputs
    with pytest.raises(ValueError):
        digit_expansion(7, "+", 4, -3)  # all-nonpositive digit set
