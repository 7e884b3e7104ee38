"""The wreath product Z_p wr S_n as windows of (position, color) pairs.

An element maps i to position sigma(i) with color sigma_c(i); the window
notation lists the pairs (sigma(i), sigma_c(i)) for i = 1..n.  Two linear
orders on the letters drive two descent statistics:

- standard order: color 0 first, then colors p-1, p-2, ..., 1; positions
  ascending within a color.  Descents also count the end position when its
  color is nonzero.
- dash order: colors 0, 1, ..., p-1, positions ascending within a color.
  Dash descents count the end position when its color is p-1; for p = 1
  the dash statistic is defined to coincide with the standard one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

GROUP_ENUMERATION_LIMIT = 10**7


@dataclass(frozen=True)
class ColoredPermutation:
    """Element of Z_p wr S_n in window form."""

    n: int
    p: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and self.p >= 1):
            raise ValueError(f"color count p must be a positive integer, got {self.p!r}")
        if len(self.pairs) != self.n:
            raise ValueError(f"expected {self.n} pairs, got {len(self.pairs)}")
        object.__setattr__(
            self, "pairs", tuple((int(k), int(c)) for k, c in self.pairs)
        )
        positions = sorted(k for k, _ in self.pairs)
        if positions != list(range(1, self.n + 1)):
            raise ValueError(f"positions must be a permutation of 1..{self.n}: {self.pairs}")
        if any(not 0 <= c < self.p for _, c in self.pairs):
            raise ValueError(f"colors must lie in 0..{self.p - 1}: {self.pairs}")

    @classmethod
    def identity(cls, n: int, p: int) -> "ColoredPermutation":
        return cls(n, p, tuple((i, 0) for i in range(1, n + 1)))

    def position(self, i: int) -> int:
        return self.pairs[i - 1][0]

    def color(self, i: int) -> int:
        return self.pairs[i - 1][1]

    def __mul__(self, other: "ColoredPermutation") -> "ColoredPermutation":
        return compose(self, other)

    def to_text(self) -> str:
        return "".join(f"({k},{c})" for k, c in self.pairs)

    def to_pairs(self) -> list[list[int]]:
        return [[k, c] for k, c in self.pairs]

    @classmethod
    def from_pairs(cls, n: int, p: int, pairs: Sequence[Sequence[int]]) -> "ColoredPermutation":
        return cls(n, p, tuple((int(k), int(c)) for k, c in pairs))


def compose(tau: ColoredPermutation, sigma: ColoredPermutation) -> ColoredPermutation:
    """tau after sigma: position tau(sigma(i)), color tau_c(sigma(i)) + sigma_c(i)."""
    if tau.n != sigma.n or tau.p != sigma.p:
        raise ValueError(f"cannot compose elements of ({tau.n},{tau.p}) and ({sigma.n},{sigma.p})")
    p = tau.p
    pairs = []
    for k, c in sigma.pairs:
        kt, ct = tau.pairs[k - 1]
        pairs.append((kt, (ct + c) % p))
    return ColoredPermutation(tau.n, p, tuple(pairs))


def inverse(sigma: ColoredPermutation) -> ColoredPermutation:
    """The group inverse: position sigma(i) goes back to i with negated color."""
    pairs: list[tuple[int, int]] = [(0, 0)] * sigma.n
    for i, (k, c) in enumerate(sigma.pairs, start=1):
        pairs[k - 1] = (i, (-c) % sigma.p)
    return ColoredPermutation(sigma.n, sigma.p, tuple(pairs))


def standard_key(pair: tuple[int, int], p: int) -> tuple[int, int]:
    """Sort key realizing the standard order on letters (position, color)."""
    k, c = pair
    return (0 if c == 0 else p - c, k)


def dash_key(pair: tuple[int, int], p: int) -> tuple[int, int]:
    """Sort key realizing the dash order on letters."""
    k, c = pair
    return (c, k)


def descent_count(sigma: ColoredPermutation) -> int:
    """Descents of the window word in the standard order.

    Counts i < n with pair i above pair i+1, plus the end position n when
    its color is nonzero.
    """
    p = sigma.p
    keys = [standard_key(pair, p) for pair in sigma.pairs]
    count = sum(1 for a, b in zip(keys, keys[1:]) if a > b)
    if sigma.pairs[-1][1] != 0:
        count += 1
    return count


def dash_descent_count(sigma: ColoredPermutation) -> int:
    """Descents in the dash order, with end position counted at color p-1.

    For p = 1 this is defined to equal ``descent_count`` (the end rule is
    dropped rather than firing always).
    """
    if sigma.p == 1:
        return descent_count(sigma)
    p = sigma.p
    keys = [dash_key(pair, p) for pair in sigma.pairs]
    count = sum(1 for a, b in zip(keys, keys[1:]) if a > b)
    if sigma.pairs[-1][1] == p - 1:
        count += 1
    return count


def reverse_map(sigma: ColoredPermutation, variant: str) -> ColoredPermutation:
    """Involutions used to transport descent statistics.

    - ``"R1"`` (p = 1 only): position k becomes n + 1 - k.
    - ``"R2"`` (p = 2 only): position k becomes n + 1 - k and the color flips.
    - ``"prime"`` (any p): every color is negated mod p.
    """
    n, p = sigma.n, sigma.p
    if variant == "R1":
        if p != 1:
            raise ValueError("R1 applies only to p = 1")
        return ColoredPermutation(n, p, tuple((n + 1 - k, c) for k, c in sigma.pairs))
    if variant == "R2":
        if p != 2:
            raise ValueError("R2 applies only to p = 2")
        return ColoredPermutation(
            n, p, tuple((n + 1 - k, (c + 1) % 2) for k, c in sigma.pairs)
        )
    if variant == "prime":
        return ColoredPermutation(n, p, tuple((k, (-c) % p) for k, c in sigma.pairs))
    raise ValueError(f"unknown reverse variant {variant!r}")


def enumerate_group(n: int, p: int) -> Iterator[ColoredPermutation]:
    """Yield all p^n n! elements; guarded against oversized groups."""
    if not (isinstance(p, int) and p >= 1):
        raise ValueError(f"color count p must be a positive integer, got {p!r}")
    size = p**n
    for i in range(2, n + 1):
        size *= i
    if size > GROUP_ENUMERATION_LIMIT:
        raise ValueError(f"group of size {size} exceeds enumeration limit")
    for positions in permutations(range(1, n + 1)):
        for colors in product(range(p), repeat=n):
            yield ColoredPermutation(n, p, tuple(zip(positions, colors)))


def full_mapping(sigma: ColoredPermutation) -> dict[tuple[int, int], tuple[int, int]]:
    """The element as a bijection on all n p letters (i, r) -> (sigma(i), sigma_c(i) + r)."""
    out = {}
    for i, (k, c) in enumerate(sigma.pairs, start=1):
        for r in range(sigma.p):
            out[(i, r)] = (k, (c + r) % sigma.p)
    return out
