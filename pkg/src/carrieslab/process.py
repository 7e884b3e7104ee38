"""Carries chains over positive and negative bases, in exact arithmetic.

A chain is described by a sign, a base magnitude b >= 2, the number of
summands n >= 1, and a rational parameter p >= 1 subject to the validity
condition that (b - 1)/p (positive base) or (b + 1)/p (negative base) is a
positive integer.  The normalized state space is {0, ..., n-1} when p = 1
and {0, ..., n} otherwise.

Chains that arise from repeatedly adding n numbers written over a digit set
{d, ..., d + b - 1} carry the offset d; ``derive_p`` recovers the parameter
from (sign, b, d, n) and ``derive_carry_set`` gives the interval of carries
the column additions can produce.  All quantities are exact: states and
digits are ints, parameters are ``fractions.Fraction``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

SIGNS = ("+", "-")

#: Seed used by sampling helpers when the caller does not pass one.
DEFAULT_SEED = 1729

#: Upper bound on the number of digit tuples an enumeration helper may visit.
ENUMERATION_LIMIT = 10**7


def _check_base(b: int) -> None:
    if not isinstance(b, int) or b < 2:
        raise ValueError(f"base magnitude must be an integer >= 2, got {b!r}")


def _check_sign(sign: str) -> None:
    if sign not in SIGNS:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def _check_offset(b: int, d: int) -> None:
    if not isinstance(d, int) or not (1 - b <= d <= 0):
        raise ValueError(f"digit offset must satisfy 1-b <= d <= 0, got d={d!r} for b={b}")


def carry_slope(sign: str, b: int, d: int) -> Fraction:
    """Slope of the carry range in the summand count.

    Equals d/(b-1) for base +b and -(b+d)/(b+1) for base -b; always lies
    in [-1, 0].
    """
    _check_sign(sign)
    _check_base(b)
    _check_offset(b, d)
    if sign == "+":
        return Fraction(d, b - 1)
    return Fraction(-(b + d), b + 1)


@dataclass(frozen=True)
class CarrySet:
    """Integer interval of carries produced by an n-fold column addition."""

    min_carry: int
    max_carry: int

    @property
    def size(self) -> int:
        return self.max_carry - self.min_carry + 1

    def values(self) -> range:
        return range(self.min_carry, self.max_carry + 1)

    def __contains__(self, carry: int) -> bool:
        return self.min_carry <= carry <= self.max_carry

    def to_normalized(self, carry: int) -> int:
        """Translate an original-coordinate carry to a 0-based state."""
        if carry not in self:
            raise ValueError(f"carry {carry} outside {self}")
        return carry - self.min_carry

    def to_original(self, state: int) -> int:
        if not 0 <= state < self.size:
            raise ValueError(f"state {state} outside normalized range of {self}")
        return state + self.min_carry


def derive_carry_set(sign: str, b: int, d: int, n: int) -> CarrySet:
    """Carry interval for n-fold addition over the digit set {d..d+b-1}.

    The interval is [floor((n-1)l), ceil((n-1)(l+1))] where l is
    ``carry_slope``; its size is n when (n-1)l is an integer and n+1
    otherwise.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"summand count must be a positive integer, got {n!r}")
    slope = carry_slope(sign, b, d)
    lo = math.floor((n - 1) * slope)
    hi = math.ceil((n - 1) * (slope + 1))
    return CarrySet(lo, hi)


def derive_p(sign: str, b: int, d: int, n: int) -> Fraction:
    """Chain parameter determined by the digit set: 1/(1 - <(n-1)l>).

    <x> is the fractional part.  The result is 1 exactly when (n-1)l is an
    integer, which is also the case where the carry set has only n values.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"summand count must be a positive integer, got {n!r}")
    slope = carry_slope(sign, b, d)
    t = (n - 1) * slope
    fractional = t - math.floor(t)
    return 1 / (1 - fractional)


@dataclass(frozen=True)
class ProcessParams:
    """Validated parameter bundle for a carries chain.

    ``d`` is optional; when present the chain is the one realized by the
    digit set {d..d+b-1} and ``p`` must agree with ``derive_p``.
    """

    sign: str
    b: int
    n: int
    p: Fraction
    d: int | None = None

    def __post_init__(self) -> None:
        _check_sign(self.sign)
        _check_base(self.b)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"summand count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "p", Fraction(self.p))
        if self.p < 1:
            raise ValueError(f"parameter p must be >= 1, got {self.p}")
        ratio = Fraction(self.b - 1 if self.sign == "+" else self.b + 1) / self.p
        if ratio.denominator != 1 or ratio <= 0:
            side = "(b-1)/p" if self.sign == "+" else "(b+1)/p"
            raise ValueError(
                f"invalid parameter: {side} must be a positive integer, "
                f"got {ratio} for sign={self.sign} b={self.b} p={self.p}"
            )
        if self.d is not None:
            _check_offset(self.b, self.d)
            expected = derive_p(self.sign, self.b, self.d, self.n)
            if expected != self.p:
                raise ValueError(
                    f"digit offset d={self.d} determines p={expected}, "
                    f"but p={self.p} was given"
                )

    @property
    def state_count(self) -> int:
        return self.n if self.p == 1 else self.n + 1

    @property
    def states(self) -> range:
        return range(self.state_count)

    @property
    def signed_base(self) -> int:
        return self.b if self.sign == "+" else -self.b

    @property
    def column_shift(self) -> int:
        """Constant added to every column sum: (b-1)(1 - 1/p) or (b+1)/p - 1."""
        if self.sign == "+":
            value = (self.b - 1) * (1 - Fraction(1, 1) / self.p)
        else:
            value = Fraction(self.b + 1) / self.p - 1
        assert value.denominator == 1
        return int(value)

    @property
    def reflected_column_shift(self) -> int:
        """Image b - 1 - shift of the column shift under digit reversal."""
        return self.b - 1 - self.column_shift

    @property
    def p_conjugate(self) -> Fraction | None:
        """Conjugate exponent p* with 1/p + 1/p* = 1, or None when p = 1."""
        if self.p == 1:
            return None
        return self.p / (self.p - 1)


def make_process(sign: str, b: int, n: int, p, d: int | None = None) -> ProcessParams:
    """Build and validate chain parameters; ``p`` may be int, str or Fraction."""
    return ProcessParams(sign, b, n, Fraction(p), d)


def process_from_digit_set(sign: str, b: int, d: int, n: int) -> ProcessParams:
    """Chain realized by n-fold addition over the digit set {d..d+b-1}."""
    return ProcessParams(sign, b, n, derive_p(sign, b, d, n), d)


def step_carry(params: ProcessParams, kappa: int, digits: Sequence[int]) -> tuple[int, int]:
    """One column addition in normalized coordinates.

    Returns (next state, remainder digit).  For base +b the update is
    kappa + sum + shift = kappa' * b + s; for base -b it is
    kappa + sum + shift = (n - kappa') * b + s, with s in {0..b-1}.
    """
    total = kappa + sum(digits) + params.column_shift
    quotient, remainder = divmod(total, params.b)
    if params.sign == "+":
        return quotient, remainder
    return params.n - quotient, remainder


def original_step(sign: str, b: int, d: int, carry: int, digits: Sequence[int]) -> tuple[int, int]:
    """One column addition in original coordinates over the digit set {d..d+b-1}.

    carry + sum(digits) = carry' * (+-b) + r with r in {d..d+b-1}; both
    carry' and r are uniquely determined.
    """
    total = carry + sum(digits)
    r = d + (total - d) % b
    signed = b if sign == "+" else -b
    return (total - r) // signed, r


def realized_carry_set(sign: str, b: int, d: int, n: int) -> frozenset[int]:
    """Carries reachable from 0 by exhaustive closure of ``original_step``.

    Independent of the interval formula; intended as a brute-force check
    of ``derive_carry_set`` at small sizes.
    """
    _check_sign(sign)
    _check_base(b)
    _check_offset(b, d)
    if b**n > ENUMERATION_LIMIT:
        raise ValueError(f"digit enumeration too large: {b}^{n} > {ENUMERATION_LIMIT}")
    digit_tuples = list(product(range(d, d + b), repeat=n))
    seen: set[int] = {0}
    frontier = [0]
    while frontier:
        carry = frontier.pop()
        for digits in digit_tuples:
            nxt, _ = original_step(sign, b, d, carry, digits)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


@dataclass(frozen=True)
class CarriesTrace:
    """Realized chain path: states, remainder digits, and the digit columns.

    ``kappas`` has one more entry than the others (the start state 0).
    ``summand_digits[r]`` is the n-tuple of digits consumed at step r+1.
    """

    params: ProcessParams
    kappas: tuple[int, ...]
    remainders: tuple[int, ...]
    summand_digits: tuple[tuple[int, ...], ...]

    @property
    def steps(self) -> int:
        return len(self.remainders)


def simulate_trace(
    params: ProcessParams,
    steps: int,
    seed: int = DEFAULT_SEED,
    columns: Sequence[Sequence[int]] | None = None,
) -> CarriesTrace:
    """Run the chain from state 0 for ``steps`` column additions.

    Digits come from ``columns`` when given, otherwise from
    ``random.Random(seed)``: one ``randrange(b)`` call per digit, drawn
    column by column with summand 1 first, so traces are reproducible for
    a fixed seed.
    """
    if steps < 0:
        raise ValueError("step count must be nonnegative")
    if columns is None:
        rng = random.Random(seed)
        drawn = tuple(
            tuple(rng.randrange(params.b) for _ in range(params.n)) for _ in range(steps)
        )
    else:
        if len(columns) != steps:
            raise ValueError(f"expected {steps} digit columns, got {len(columns)}")
        drawn = tuple(tuple(col) for col in columns)
        for col in drawn:
            if len(col) != params.n or any(not 0 <= x < params.b for x in col):
                raise ValueError(f"bad digit column {col} for b={params.b} n={params.n}")
    kappas = [0]
    remainders = []
    for col in drawn:
        nxt, rem = step_carry(params, kappas[-1], col)
        kappas.append(nxt)
        remainders.append(rem)
    return CarriesTrace(params, tuple(kappas), tuple(remainders), drawn)


def digit_expansion(x: int, sign: str, b: int, d: int = 0) -> tuple[int, ...]:
    """Digits (a_0, ..., a_N), least significant first, of x over {d..d+b-1}.

    x = sum a_k (+-b)^k.  Every x >= 0 has a unique finite expansion except
    over (+b, d = 1-b) where only 0 is representable; that case raises
    ValueError.
    """
    _check_sign(sign)
    _check_base(b)
    _check_offset(b, d)
    if not isinstance(x, int) or x < 0:
        raise ValueError(f"expected a nonnegative integer, got {x!r}")
    if sign == "+" and d == 1 - b and x > 0:
        raise ValueError(f"{x} has no expansion over base {b} with digits {{{d}..0}}")
    signed = b if sign == "+" else -b
    digits = [ ]
    # Bound: remainders shrink; 4*bit_length + 8 steps is far more than enough.
    for _ in range(4 * x.bit_length() + 8):
        a = d + (x - d) % b
        digits.append(a)
        x = (x - a) // signed
        if x == 0:
            return tuple(digits)
    raise ValueError(f"expansion of {x} over sign={sign} b={b} d={d} did not terminate")


def digit_value(digits: Sequence[int], sign: str, b: int) -> int:
    """Evaluate a least-significant-first digit tuple: sum a_k (+-b)^k."""
    _check_sign(sign)
    _check_base(b)
    signed = b if sign == "+" else -b
    total = 0
    for a in reversed(digits):
        total = total * signed + a
    return total
