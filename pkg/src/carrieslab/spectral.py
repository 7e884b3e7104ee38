"""Transition matrices of carries chains and their exact eigenstructure.

The chain with parameters (sign, b, n, p) has transition matrix
P = R D L where D = diag((+-1/b)^k), and L, R depend only on (n, p).
Everything here is exact rational arithmetic; the closed forms are
cross-checked elsewhere against brute-force enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .process import ENUMERATION_LIMIT, ProcessParams, step_carry
from .ratmat import RationalMatrix, solve_linear

__all__ = [
    "transition_matrix",
    "transition_oracle",
    "stirling_first",
    "left_eigen_matrix",
    "right_eigen_matrix",
    "right_eigen_entry",
    "eigen_values",
    "EigenSystem",
    "eigen_system",
    "stationary_distribution",
    "stationary_fixed_point",
    "duality_check_left",
    "duality_check_right",
    "symmetry_check",
    "StatTable",
    "stirling_frobenius",
    "descent_statistics",
]


def _state_count(n: int, p: Fraction) -> int:
    return n if p == 1 else n + 1


def _sum_target(params: ProcessParams, i: int, j: int) -> int:
    """Value of the (n+1)-variable digit sum whose count gives b^n P(i, j).

    Always an integer for valid parameters; a non-integer value indicates
    corrupted parameters and raises rather than rounding.
    """
    b, n, p = params.b, params.n, params.p
    if params.sign == "+":
        target = (j + Fraction(1) / p) * b - (i + Fraction(1) / p)
    else:
        target = (n + 1 - j) * b - i - Fraction(b + 1) / p
    if target.denominator != 1:
        raise ArithmeticError(f"non-integer sum target {target} for {params}")
    return int(target)


def _bounded_count(total: int, parts: int, b: int) -> int:
    """Number of tuples in {0..b-1}^parts with the given sum."""
    if total < 0:
        return 0
    acc = 0
    r = 0
    while r <= parts and total - b * r >= 0:
        acc += (-1) ** r * comb(parts, r) * comb(total - b * r + parts - 1, parts - 1)
        r += 1
    return acc


def transition_matrix(params: ProcessParams) -> RationalMatrix:
    """Exact transition matrix from the inclusion-exclusion closed form."""
    b, n = params.b, params.n
    dim = params.state_count
    denom = b**n
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            count = _bounded_count(_sum_target(params, i, j), n + 1, b)
            row.append(Fraction(count, denom))
        rows.append(row)
    return RationalMatrix(rows)


def transition_oracle(params: ProcessParams) -> RationalMatrix:
    """Transition matrix by exhaustive enumeration of all digit columns.

    Steps every state through every tuple in {0..b-1}^n with
    ``step_carry``; independent of the closed form.  Guarded by
    ``ENUMERATION_LIMIT`` on b^n.
    """
    b, n = params.b, params.n
    if b**n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration too large: {b}^{n} > {ENUMERATION_LIMIT}")
    dim = params.state_count
    counts = [[0] * dim for _ in range(dim)]
    for digits in product(range(b), repeat=n):
        for i in range(dim):
            j, _ = step_carry(params, i, digits)
            counts[i][j] += 1
    denom = b**n
    return RationalMatrix([[Fraction(c, denom) for c in row] for row in counts])


@lru_cache(maxsize=None)
def stirling_first(k: int, l: int) -> int:
    """Signed Stirling number of the first kind: x(x-1)...(x-k+1) = sum s(k,l) x^l."""
    if k < 0 or l < 0 or l > k:
        return 0
    if k == 0:
        return 1 if l == 0 else 0
    return stirling_first(k - 1, l - 1) - (k - 1) * stirling_first(k - 1, l)


def left_eigen_matrix(n: int, p) -> RationalMatrix:
    """Left eigenvector matrix L; depends only on (n, p), not on sign or b.

    Entry (i, j) is sum_{r=0}^{j} (-1)^r C(n+1, r) (p(j-r)+1)^(n-i).  Row i
    is a left eigenvector of every valid chain for eigenvalue (+-1/b)^i.
    """
    p = Fraction(p)
    dim = _state_count(n, p)
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            acc = Fraction(0)
            for r in range(j + 1):
                acc += (-1) ** r * comb(n + 1, r) * (p * (j - r) + 1) ** (n - i)
            row.append(acc)
        rows.append(row)
    return RationalMatrix(rows)


def right_eigen_matrix(n: int, p) -> RationalMatrix:
    """Right eigenvector matrix R = L^(-1), by its double-sum closed form.

    Entry (i, j) is
    sum_{k=i}^{n} sum_{l=n-j}^{k} s(k,l) (-1)^(n-j-l) / (k! p^l)
    C(l, n-j) C(n-i, n-k) with s the signed Stirling numbers.
    """
    p = Fraction(p)
    dim = _state_count(n, p)
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            acc = Fraction(0)
            for k in range(i, n + 1):
                for l in range(n - j, k + 1):
                    term = Fraction(stirling_first(k, l), factorial(k)) / p**l
                    term *= (-1) ** ((n - j - l) % 2)
                    term *= comb(l, n - j) * comb(n - i, n - k)
                    acc += term
            row.append(acc)
        rows.append(row)
    return RationalMatrix(rows)


def right_eigen_entry(n: int, p, i: int, j: int) -> Fraction:
    """Entry (i, j) of R via its generating polynomial.

    Equals the coefficient of x^(n-j) in the falling product
    prod_{m=0}^{n-1} (n + (x-1)/p - i - m) / n!.
    """
    p = Fraction(p)
    # Polynomial coefficients, constant term first.
    poly = [Fraction(1)]
    for m in range(n):
        const = n - m - i - Fraction(1) / p
        slope = Fraction(1) / p
        nxt = [Fraction(0)] * (len(poly) + 1)
        for deg, coeff in enumerate(poly):
            nxt[deg] += coeff * const
            nxt[deg + 1] += coeff * slope
        poly = nxt
    return poly[n - j] / factorial(n)


def eigen_values(params: ProcessParams) -> tuple[Fraction, ...]:
    """Spectrum (+-1/b)^k for k = 0..dim-1, in decreasing absolute value."""
    base = Fraction(1, params.signed_base)
    return tuple(base**k for k in range(params.state_count))


@dataclass(frozen=True)
class EigenSystem:
    """Verified factorization P = R D L with L R = R L = I."""

    params: ProcessParams
    left: RationalMatrix
    right: RationalMatrix
    eigenvalues: tuple[Fraction, ...]


def eigen_system(params: ProcessParams) -> EigenSystem:
    """Assemble L, R, D for the chain and verify the factorization exactly.

    An inconsistency here means a broken closed form, so it raises
    RuntimeError instead of returning a report.
    """
    left = left_eigen_matrix(params.n, params.p)
    right = right_eigen_matrix(params.n, params.p)
    dim = params.state_count
    if right @ left != RationalMatrix.identity(dim):
        raise RuntimeError(f"R L != I for {params}")
    values = eigen_values(params)
    reconstructed = right @ RationalMatrix.diagonal(values) @ left
    if reconstructed != transition_matrix(params):
        raise RuntimeError(f"R D L != P for {params}")
    return EigenSystem(params, left, right, values)


def stationary_distribution(params: ProcessParams) -> tuple[Fraction, ...]:
    """Stationary law of the chain: row 0 of L, normalized to sum 1."""
    row = left_eigen_matrix(params.n, params.p)[0]
    total = sum(row)
    return tuple(x / total for x in row)


def stationary_fixed_point(params: ProcessParams) -> tuple[Fraction, ...]:
    """Stationary law by exact linear solve of pi P = pi, sum(pi) = 1.

    Independent of the eigenvector formulas; used to check
    ``stationary_distribution``.
    """
    matrix = transition_matrix(params)
    dim = matrix.dim
    # Rows of (P^T - I), with the last equation replaced by sum(pi) = 1.
    transposed = matrix.transpose()
    rows = [
        [transposed[i][j] - (1 if i == j else 0) for j in range(dim)]
        for i in range(dim - 1)
    ]
    rows.append([Fraction(1)] * dim)
    rhs = [Fraction(0)] * (dim - 1) + [Fraction(1)]
    return solve_linear(RationalMatrix(rows), rhs)


def duality_check_left(n: int, p) -> bool:
    """Check L(p*) against the reflection identity in L(p); p must exceed 1.

    The identity: v[i, j] at p* equals (-1)^i (p*/p)^(n-i) v[i, n-j] at p.
    """
    p = Fraction(p)
    if p == 1:
        raise ValueError("p = 1 is self-conjugate in the degenerate sense; no dual matrix")
    conj = p / (p - 1)
    left_p = left_eigen_matrix(n, p)
    left_c = left_eigen_matrix(n, conj)
    for i in range(n + 1):
        for j in range(n + 1):
            expected = (-1) ** i * (conj / p) ** (n - i) * left_p[i][n - j]
            if left_c[i][j] != expected:
                return False
    return True


def duality_check_right(n: int, p) -> bool:
    """Check R(p*) against the reflection identity in R(p); p must exceed 1.

    The identity: u[i, j] at p* equals (-1)^j (p/p*)^(n-j) u[n-i, j] at p.
    """
    p = Fraction(p)
    if p == 1:
        raise ValueError("p = 1 is self-conjugate in the degenerate sense; no dual matrix")
    conj = p / (p - 1)
    right_p = right_eigen_matrix(n, p)
    right_c = right_eigen_matrix(n, conj)
    for i in range(n + 1):
        for j in range(n + 1):
            expected = (-1) ** j * (p / conj) ** (n - j) * right_p[n - i][j]
            if right_c[i][j] != expected:
                return False
    return True


def symmetry_check(params: ProcessParams) -> dict[str, bool]:
    """Reflection symmetries tying the two signs and conjugate parameters.

    Returns a dict of clause name -> bool for every clause applicable to
    the given parameters:

    - ``"centro"`` (p = 1): P+(i, j) = P+(n-1-i, n-1-j).
    - ``"sign-flip-p1"`` (p = 1): P-(i, j) = P+(i, n-1-j).
    - ``"sign-flip-p2"`` (p = 2): P-(i, j) = P+(i, n-j).
    - ``"conjugate"`` (p > 1): P_p(i, j) = P_p*(n-i, n-j), same sign.
    """
    from .process import make_process  # local import to avoid cycle at module load

    b, n, p = params.b, params.n, params.p
    results: dict[str, bool] = {}
    matrix = transition_matrix(params)
    dim = params.state_count
    if p == 1:
        plus = matrix if params.sign == "+" else transition_matrix(make_process("+", b, n, 1))
        minus = matrix if params.sign == "-" else transition_matrix(make_process("-", b, n, 1))
        results["centro"] = all(
            plus[i][j] == plus[n - 1 - i][n - 1 - j] for i in range(dim) for j in range(dim)
        )
        results["sign-flip-p1"] = all(
            minus[i][j] == plus[i][n - 1 - j] for i in range(dim) for j in range(dim)
        )
    if p == 2:
        plus = matrix if params.sign == "+" else transition_matrix(make_process("+", b, n, 2))
        minus = matrix if params.sign == "-" else transition_matrix(make_process("-", b, n, 2))
        results["sign-flip-p2"] = all(
            minus[i][j] == plus[i][n - j] for i in range(dim) for j in range(dim)
        )
    if p > 1:
        conj = make_process(params.sign, b, n, p / (p - 1))
        conj_matrix = transition_matrix(conj)
        results["conjugate"] = all(
            matrix[i][j] == conj_matrix[n - i][n - j] for i in range(dim) for j in range(dim)
        )
    return results


@dataclass(frozen=True)
class StatTable:
    """A labelled row of combinatorial statistics for fixed (n, p)."""

    n: int
    p: Fraction
    kind: str
    values: tuple[Fraction, ...]

    def ints(self) -> tuple[int, ...]:
        if any(v.denominator != 1 for v in self.values):
            raise ValueError(f"non-integer values in {self.kind} table")
        return tuple(int(v) for v in self.values)


def stirling_frobenius(n: int, p) -> StatTable:
    """Row (w_0, ..., w_n) of the p-deformed first-kind triangle.

    Recursion w_j(n) = (p n - 1) w_j(n-1) + w_{j-1}(n-1) with w_0(0) = 1.
    For p in N and p > 1 these equal n! p^n times the reversed top row of R.
    """
    p = Fraction(p)
    row = [Fraction(1)]
    for m in range(1, n + 1):
        nxt = []
        for j in range(m + 1):
            acc = Fraction(0)
            if j <= m - 1:
                acc += (p * m - 1) * row[j]
            if j - 1 >= 0 and j - 1 <= m - 1:
                acc += row[j - 1]
            nxt.append(acc)
        row = nxt
    return StatTable(n, p, "stirling-frobenius", tuple(row))


def descent_statistics(n: int, p, variant: str = "standard") -> StatTable:
    """Counts of group elements by descent statistic, from the recursions.

    ``standard``: row 0 of L; entry k counts elements with k descents.
    ``dash``: the companion recursion
    F(n, k) = (p k + p - 1) F(n-1, k) + (p(n-k) + 1) F(n-1, k-1),
    whose row reverses the standard one for p > 1.  Requires integer p.
    """
    p = Fraction(p)
    if p.denominator != 1 or p < 1:
        raise ValueError(f"descent statistics need an integer p >= 1, got {p}")
    if variant == "standard":
        top = left_eigen_matrix(n, p)[0]
        return StatTable(n, p, "descents", top)
    if variant != "dash":
        raise ValueError(f"unknown variant {variant!r}")
    row = [Fraction(1)]
    for m in range(1, n + 1):
        nxt = []
        for k in range(m + 1):
            acc = Fraction(0)
            if k <= m - 1:
                acc += (p * k + p - 1) * row[k]
            if 0 <= k - 1 <= m - 1:
                acc += (p * (m - k) + 1) * row[k - 1]
            nxt.append(acc)
        row = nxt
    return StatTable(n, p, "dash-descents", tuple(row))
