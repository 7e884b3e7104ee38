"""Closed-form moments of carries chains, with a matrix-power oracle.

All formulas are exact rationals.  The conditional variance and the
covariance do not depend on the start state or on p; the mean does.  The
oracle recomputes every quantity from exact powers of the transition
matrix so the closed forms can be checked without circularity.

The mean formula holds for every valid parameter set.  The second-moment
formulas rest on the centred square being a right eigenfunction with
eigenvalue b^-2, which requires n >= 2: a chain on fewer than three
states has no such eigenvalue, and the centred square only vanishes
identically in the two-state chain with n = 2.  For n = 1 the closed
forms are simply wrong (a one-summand chain can even be a single state
with zero variance), so those functions refuse to answer there; the
oracle still works.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .process import ProcessParams
from .spectral import stationary_distribution, transition_matrix

__all__ = [
    "has_quadratic_eigenfunction",
    "mean_conditional",
    "variance_conditional",
    "covariance_conditional",
    "stationary_moments",
    "MomentReport",
    "moments_oracle",
]

#: Largest power of the transition matrix the oracle will compute.
MAX_ORACLE_POWER = 64


def _center(params: ProcessParams, i: int) -> Fraction:
    """i + 1/p - (n+1)/2, the start-state coordinate that decays geometrically."""
    return i + Fraction(1) / params.p - Fraction(params.n + 1, 2)


def has_quadratic_eigenfunction(params: ProcessParams) -> bool:
    """Whether center(i)^2 - (n+1)/12 is a right eigenfunction (eigenvalue b^-2).

    This is the hypothesis behind every second-moment closed form.  It
    holds structurally once the chain has at least three states, and
    degenerately when the function is zero at every state (which pins
    n = 2 on two states).  Altogether the condition is exactly n >= 2.
    """
    if params.state_count >= 3:
        return True
    spread = Fraction(params.n + 1, 12)
    return all(_center(params, i) ** 2 == spread for i in params.states)


def _require_quadratic(params: ProcessParams, what: str) -> None:
    if not has_quadratic_eigenfunction(params):
        raise ValueError(
            f"the {what} closed form needs n >= 2; with n = {params.n} the chain "
            "has no quadratic eigenfunction (use moments_oracle instead)"
        )


def mean_conditional(params: ProcessParams, r: int, i: int) -> Fraction:
    """E[state after r steps | start i] = center(i)/(+-b)^r + (n+1)/2 - 1/p."""
    if r < 0:
        raise ValueError("step count must be nonnegative")
    shrink = Fraction(1, params.signed_base**r)
    return _center(params, i) * shrink - Fraction(1) / params.p + Fraction(params.n + 1, 2)


def variance_conditional(params: ProcessParams, r: int, i: int | None = None) -> Fraction:
    """Var[state after r steps | start i] = (n+1)/12 (1 - b^(-2r)).

    Independent of the start state, of p, and of the sign.  Needs n >= 2.
    """
    if r < 0:
        raise ValueError("step count must be nonnegative")
    _require_quadratic(params, "variance")
    return Fraction(params.n + 1, 12) * (1 - Fraction(1, params.b ** (2 * r)))


def covariance_conditional(
    params: ProcessParams, s: int, r: int, i: int | None = None
) -> Fraction:
    """Cov(state at s, state at s+r | start i) = (n+1)/12 (1 - b^(-2s)) / (+-b)^r.

    Needs n >= 2, like every second-moment closed form.
    """
    if r < 0 or s < 0:
        raise ValueError("step counts must be nonnegative")
    _require_quadratic(params, "covariance")
    return variance_conditional(params, s) * Fraction(1, params.signed_base**r)


def stationary_moments(params: ProcessParams, r: int = 0) -> tuple[Fraction, Fraction]:
    """Stationary mean (n+1)/2 - 1/p and autocovariance (n+1)/12 / (+-b)^r.

    At r = 0 the second value is the stationary variance.  Needs n >= 2
    (the mean alone is valid everywhere, but the pair is refused as one).
    """
    if r < 0:
        raise ValueError("step count must be nonnegative")
    _require_quadratic(params, "stationary autocovariance")
    mean = Fraction(params.n + 1, 2) - Fraction(1) / params.p
    cov = Fraction(params.n + 1, 12) * Fraction(1, params.signed_base**r)
    return mean, cov


@dataclass(frozen=True)
class MomentReport:
    """Moments computed from exact matrix powers, no closed forms involved."""

    params: ProcessParams
    start: int | str
    r: int
    s: int
    mean: Fraction
    variance: Fraction
    covariance: Fraction

    def __post_init__(self) -> None:
        if self.variance < 0:
            raise ValueError("an exact variance cannot be negative")


def moments_oracle(
    params: ProcessParams, r: int, s: int = 0, start: int | str = 0
) -> MomentReport:
    """Mean and variance after r steps, and Cov(state at s, state at s+r).

    ``start`` is a state or ``"stationary"``.  In the stationary case the
    mean and variance are those of the stationary law and the covariance
    is the lag-r autocovariance.  Everything comes from exact powers of P.
    """
    if not (0 <= r <= MAX_ORACLE_POWER and 0 <= s <= MAX_ORACLE_POWER):
        raise ValueError(f"oracle powers limited to {MAX_ORACLE_POWER}")
    matrix = transition_matrix(params)
    dim = matrix.dim
    power_r = matrix.power(r)

    def law_moments(law) -> tuple[Fraction, Fraction]:
        mean = sum(law[j] * j for j in range(dim))
        second = sum(law[j] * j * j for j in range(dim))
        return mean, second - mean * mean

    # E[state after r steps | start j], for each j: used by the covariance.
    mean_after_r = [sum(power_r[j][k] * k for k in range(dim)) for j in range(dim)]

    if start == "stationary":
        pi = stationary_distribution(params)
        mean, variance = law_moments(pi)
        cross = sum(pi[j] * j * mean_after_r[j] for j in range(dim))
        covariance = cross - mean * mean
        return MomentReport(params, start, r, s, mean, variance, covariance)

    if not (isinstance(start, int) and 0 <= start < dim):
        raise ValueError(f"start must be a state or 'stationary', got {start!r}")
    law_r = power_r[start]
    mean, variance = law_moments(law_r)
    law_s = matrix.power(s)[start]
    mean_s = sum(law_s[j] * j for j in range(dim))
    mean_sr = sum(law_s[j] * mean_after_r[j] for j in range(dim))
    cross = sum(law_s[j] * j * mean_after_r[j] for j in range(dim))
    covariance = cross - mean_s * mean_sr
    return MomentReport(params, start, r, s, mean, variance, covariance)
