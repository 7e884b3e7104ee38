"""Colored riffle shuffles driven by digit words, and the carries bijections.

A word A in {0..b-1}^n drives one b-shuffle of n cards: card i receives
label a_i, cards are reordered stably by label, and card i picks up color
a_i mod p.  Repeated shuffles compose on the left.  The maps in this module
(star, sharp, bar, the multiplication map f) convert between stacks of
digit words and summand arrays of multi-digit numbers, and the two
``bijection_*`` constructions realize the carries of an n-fold addition as
descent statistics of the composed shuffles, term by term.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .colored import (
    ColoredPermutation,
    compose,
    dash_descent_count,
    descent_count,
    enumerate_group,
    inverse,
    reverse_map,
    standard_key,
)
from .process import DEFAULT_SEED

__all__ = [
    "MultiDigitWord",
    "gsr_to_permutation",
    "star_map",
    "unstar_map",
    "sharp_compose",
    "f_map",
    "bar_map",
    "unbar_map",
    "word_descents",
    "ShuffleTrace",
    "trace_from_words",
    "shuffle_step",
    "sample_sequence",
    "bijection_plus",
    "bijection_minus",
    "shuffle_probability",
    "gessel_coefficients",
]


@dataclass(frozen=True)
class MultiDigitWord:
    """n summands of N base-b digits each; rows store digits least significant first."""

    b: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ValueError(f"base must be >= 2, got {self.b}")
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("need at least one summand and one digit place")
        places = len(rows[0])
        if any(len(row) != places for row in rows):
            raise ValueError("all summands must have the same number of digit places")
        if any(not 0 <= x < self.b for row in rows for x in row):
            raise ValueError(f"digits must lie in 0..{self.b - 1}")

    @property
    def places(self) -> int:
        return len(self.rows[0])

    @property
    def count(self) -> int:
        return len(self.rows)

    def column(self, place: int) -> tuple[int, ...]:
        """Digits at the given 1-based place, across summands."""
        if not 1 <= place <= self.places:
            raise ValueError(f"place {place} out of range 1..{self.places}")
        return tuple(row[place - 1] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(1, self.places + 1)]

    def row_values(self) -> tuple[int, ...]:
        out = []
        for row in self.rows:
            value = 0
            for digit in reversed(row):
                value = value * self.b + digit
            out.append(value)
        return tuple(out)

    @classmethod
    def from_values(cls, b: int, places: int, values: Sequence[int]) -> "MultiDigitWord":
        limit = b**places
        rows = []
        for value in values:
            if not 0 <= value < limit:
                raise ValueError(f"value {value} outside 0..{limit - 1}")
            row = []
            for _ in range(places):
                value, digit = divmod(value, b)
                row.append(digit)
            rows.append(tuple(row))
        return cls(b, tuple(rows))

    @classmethod
    def from_columns(cls, b: int, columns: Sequence[Sequence[int]]) -> "MultiDigitWord":
        rows = tuple(tuple(col[i] for col in columns) for i in range(len(columns[0])))
        return cls(b, rows)


def gsr_to_permutation(labels: Sequence[int], p: int) -> ColoredPermutation:
    """The shuffle produced by one digit word: stable rank plus color mod p.

    Card i moves to position 1 + #{j : a_j < a_i} + #{j < i : a_j = a_i}
    and receives color a_i mod p.
    """
    n = len(labels)
    order = sorted(range(n), key=lambda t: (labels[t], t))
    rank = [0] * n
    for pos, t in enumerate(order, start=1):
        rank[t] = pos
    pairs = tuple((rank[i], labels[i] % p) for i in range(n))
    return ColoredPermutation(n, p, pairs)


def _accumulated_ranks(levels: Sequence[Sequence[int]]) -> list[int]:
    """Stable ranks (0-based) of rows under the lex order on accumulated digits.

    Row i's key lists its digits from the latest level down to the first;
    ties break by row index.
    """
    n = len(levels[0])
    depth = len(levels)
    keys = [tuple(levels[m][i] for m in range(depth - 1, -1, -1)) for i in range(n)]
    order = sorted(range(n), key=lambda t: (keys[t], t))
    rank = [0] * n
    for pos, t in enumerate(order):
        rank[t] = pos
    return rank


def star_map(words: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Re-index each word by the sorted order of the words below it.

    ``words`` is in application order (first shuffle first).  Level k+1 of
    the output at row i is word k+1 at the rank of row i among the already
    starred levels 1..k.  Level 1 is unchanged.
    """
    if not words:
        return []
    levels: list[tuple[int, ...]] = [tuple(words[0])]
    for k in range(1, len(words)):
        rank = _accumulated_ranks(levels)
        word = tuple(words[k])
        levels.append(tuple(word[rank[i]] for i in range(len(word))))
    return levels


def unstar_map(levels: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Inverse of ``star_map``: recover the words from the starred levels."""
    if not levels:
        return []
    words: list[tuple[int, ...]] = [tuple(levels[0])]
    starred: list[tuple[int, ...]] = [tuple(levels[0])]
    for k in range(1, len(levels)):
        rank = _accumulated_ranks(starred)
        n = len(levels[k])
        out: list[int] = [0] * n
        for i in range(n):
            out[rank[i]] = levels[k][i]
        words.append(tuple(out))
        starred.append(tuple(levels[k]))
    return words


def sharp_compose(word2: Sequence[int], word1: Sequence[int], b1: int) -> tuple[int, ...]:
    """Single word over b1*b2 equivalent to shuffling by word1 then word2.

    Pairs the starred second word with the first: a_i = a2*_i b1 + a1_i.
    """
    if len(word1) != len(word2):
        raise ValueError("words must have equal length")
    starred = star_map([word1, word2])[1]
    return tuple(starred[i] * b1 + word1[i] for i in range(len(word1)))


def f_map(x: int, b: int, p: int) -> int:
    """Multiplication by p mod b; a bijection on {0..b-1} when gcd(p, b) = 1."""
    return (p * x) % b


def bar_map(word: MultiDigitWord) -> MultiDigitWord:
    """Replace each summand value by the running total mod b^N."""
    modulus = word.b ** word.places
    values = []
    acc = 0
    for value in word.row_values():
        acc = (acc + value) % modulus
        values.append(acc)
    return MultiDigitWord.from_values(word.b, word.places, values)


def unbar_map(word: MultiDigitWord) -> MultiDigitWord:
    """Inverse of ``bar_map``: successive differences mod b^N."""
    modulus = word.b ** word.places
    values = []
    prev = 0
    for value in word.row_values():
        values.append((value - prev) % modulus)
        prev = value
    return MultiDigitWord.from_values(word.b, word.places, values)


def _block_rank(color: int, p: int) -> int:
    return 0 if color == 0 else p - color


def word_descents(values: Sequence[int], b: int, p: int, variant: str) -> int:
    """Descent statistics of a word in {0..b-1}^n, in four variants.

    ``"plain"``: strict drops x_i > x_{i+1}, plus the end when
    x_n > (b-1)/p (needs b = 1 mod p).
    ``"mixed"``: drops in the order that interleaves residue classes the
    way the standard order on colored letters does, plus the end when
    x_n != 0 mod p.
    ``"plain-dash"``: strict drops plus the end when x_n > b-1-((b+1)/p-1)
    (needs b = -1 mod p).
    ``"mixed-dash"``: drops in the residue-major order, plus the end when
    x_n = p-1 mod p.
    """
    if not values:
        return 0
    if variant == "plain":
        if (b - 1) % p != 0:
            raise ValueError(f"variant 'plain' needs b = 1 mod p, got b={b} p={p}")
        threshold = (b - 1) // p
        count = sum(1 for x, y in zip(values, values[1:]) if x > y)
        return count + (1 if values[-1] > threshold else 0)
    if variant == "plain-dash":
        if (b + 1) % p != 0:
            raise ValueError(f"variant 'plain-dash' needs b = -1 mod p, got b={b} p={p}")
        threshold = b - 1 - ((b + 1) // p - 1)
        count = sum(1 for x, y in zip(values, values[1:]) if x > y)
        return count + (1 if values[-1] > threshold else 0)
    if variant == "mixed":
        keys = [(_block_rank(x % p, p), x // p) for x in values]
        count = sum(1 for a, c in zip(keys, keys[1:]) if a > c)
        return count + (1 if values[-1] % p != 0 else 0)
    if variant == "mixed-dash":
        keys = [(x % p, x // p) for x in values]
        count = sum(1 for a, c in zip(keys, keys[1:]) if a > c)
        return count + (1 if values[-1] % p == p - 1 else 0)
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class ShuffleTrace:
    """A sequence of composed shuffles with per-step descent values.

    ``words[r-1]`` drives step r; ``elements[r-1]`` is the composition
    after r steps.  For sign '+' the composition is plain and
    ``descents[r-1]`` = descent count of the r-step element.  For sign '-'
    every even-numbered factor enters with negated colors, and the recorded
    value is n - dash-descents after odd steps (n - 1 - descents when
    p = 1) and plain descents after even steps; these are the values that
    match the negative-base carries chain.
    """

    b: int
    n: int
    p: int
    sign: str
    words: tuple[tuple[int, ...], ...]
    elements: tuple[ColoredPermutation, ...]
    descents: tuple[int, ...]


def _minus_step_value(element: ColoredPermutation, step: int) -> int:
    n, p = element.n, element.p
    if step % 2 == 1:
        if p == 1:
            return n - 1 - descent_count(element)
        return n - dash_descent_count(element)
    return descent_count(element)


def trace_from_words(
    b: int, n: int, p: int, words: Sequence[Sequence[int]], sign: str = "+"
) -> ShuffleTrace:
    """Compose the shuffles driven by ``words`` and record descent values."""
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    frozen = tuple(tuple(int(x) for x in w) for w in words)
    for w in frozen:
        if len(w) != n or any(not 0 <= x < b for x in w):
            raise ValueError(f"bad word {w} for b={b} n={n}")
    elements: list[ColoredPermutation] = []
    descents: list[int] = []
    current: ColoredPermutation | None = None
    for r, w in enumerate(frozen, start=1):
        factor = gsr_to_permutation(w, p)
        if sign == "-" and r % 2 == 0:
            factor = reverse_map(factor, "prime")
        current = factor if current is None else compose(factor, current)
        elements.append(current)
        if sign == "+":
            descents.append(descent_count(current))
        else:
            descents.append(_minus_step_value(current, r))
    return ShuffleTrace(b, n, p, sign, frozen, tuple(elements), tuple(descents))


def shuffle_step(
    trace: ShuffleTrace, word: Sequence[int] | None = None, seed: int = DEFAULT_SEED
) -> ShuffleTrace:
    """Extend a trace by one more shuffle, drawn from ``seed`` if no word given."""
    if word is None:
        rng = random.Random(seed)
        word = tuple(rng.randrange(trace.b) for _ in range(trace.n))
    return trace_from_words(
        trace.b, trace.n, trace.p, trace.words + (tuple(word),), trace.sign
    )


def sample_sequence(
    b: int, n: int, p: int, steps: int, seed: int = DEFAULT_SEED, sign: str = "+"
) -> ShuffleTrace:
    """Trace of ``steps`` uniform shuffles; digits drawn card by card, word by word."""
    rng = random.Random(seed)
    words = [tuple(rng.randrange(b) for _ in range(n)) for _ in range(steps)]
    return trace_from_words(b, n, p, words, sign)


def bijection_plus(summands: MultiDigitWord, p: int) -> list[tuple[int, ...]]:
    """Digit words whose shuffles track the carries of adding the summands.

    Requires b = 1 mod p.  The construction: replace summands by running
    totals (bar), multiply each total by p mod b^N, read the digit columns
    as starred levels, and unstar.  The returned words are in application
    order, and the descent count after r shuffles equals the r-th carry of
    the positive-base chain fed the same digit columns.
    """
    b, places = summands.b, summands.places
    if (b - 1) % p != 0:
        raise ValueError(f"positive-base construction needs b = 1 mod p, got b={b} p={p}")
    modulus = b**places
    totals = bar_map(summands)
    mixed = [f_map(v, modulus, p) for v in totals.row_values()]
    levels = MultiDigitWord.from_values(b, places, mixed).columns()
    return unstar_map(levels)


def bijection_minus(summands: MultiDigitWord, p: int) -> ShuffleTrace:
    """Shuffle trace tracking the carries of a negative-base addition.

    Requires b = -1 mod p.  The construction reverses every digit at an
    even place (x -> b-1-x), applies bar and the multiplication map, and
    unstars; the resulting words drive a '-' trace whose recorded values
    equal the negative-base carries of the original summands, step by step.
    """
    b, places = summands.b, summands.places
    if (b + 1) % p != 0:
        raise ValueError(f"negative-base construction needs b = -1 mod p, got b={b} p={p}")
    flipped_rows = tuple(
        tuple(b - 1 - x if idx % 2 == 1 else x for idx, x in enumerate(row))
        for row in summands.rows
    )
    flipped = MultiDigitWord(b, flipped_rows)
    modulus = b**places
    totals = bar_map(flipped)
    mixed = [f_map(v, modulus, p) for v in totals.row_values()]
    levels = MultiDigitWord.from_values(b, places, mixed).columns()
    words = unstar_map(levels)
    return trace_from_words(b, summands.count, p, words, sign="-")


def shuffle_probability(sigma: ColoredPermutation, b: int, r: int = 1) -> Fraction:
    """Law of the element after r uniform b-shuffles of the identity.

    Closed form b^(-rn) C(n + (b^r - 1)/p - d(sigma^(-1)), n); needs
    b = 1 mod p.
    """
    n, p = sigma.n, sigma.p
    if (b - 1) % p != 0:
        raise ValueError(f"closed form needs b = 1 mod p, got b={b} p={p}")
    m = (b**r - 1) // p
    d_inv = descent_count(inverse(sigma))
    return Fraction(comb(n + m - d_inv, n), b ** (r * n))


def gessel_coefficients(
    n: int, p: int, d: int, cutoff: tuple[int, int] = (3, 3)
) -> list[list[int]]:
    """Counts c[i][j] of factorizations tau mu = sigma by descents of the parts.

    sigma is any element with d(sigma) = d; the table is independent of the
    choice, and that independence is verified over every representative
    (mismatch raises RuntimeError).  The table is also checked against its
    two-variable generating identity through degrees ``cutoff``.
    """
    elements = list(enumerate_group(n, p))
    descents = {e: descent_count(e) for e in elements}
    inverses = {e: inverse(e) for e in elements}
    representatives = [e for e in elements if descents[e] == d]
    if not representatives:
        raise ValueError(f"no element of Z_{p} wr S_{n} has descent count {d}")
    table: list[list[int]] | None = None
    for sigma in representatives:
        current = [[0] * (n + 1) for _ in range(n + 1)]
        for mu in elements:
            tau = compose(sigma, inverses[mu])
            current[descents[tau]][descents[mu]] += 1
        if table is None:
            table = current
        elif current != table:
            raise RuntimeError(
                f"factorization counts depend on the representative at n={n} p={p} d={d}"
            )
    assert table is not None
    # Generating identity: sum c[i][j] s^i t^j / ((1-s)(1-t))^(n+1) has
    # coefficient C(n + p a b + a + b - d, n) at s^a t^b.
    for a in range(cutoff[0] + 1):
        for c in range(cutoff[1] + 1):
            lhs = sum(
                table[i][j] * comb(a - i + n, n) * comb(c - j + n, n)
                for i in range(min(a, n) + 1)
                for j in range(min(c, n) + 1)
            )
            rhs = comb(n + p * a * c + a + c - d, n)
            if lhs != rhs:
                raise RuntimeError(
                    f"generating identity fails at (s^{a}, t^{c}) for n={n} p={p} d={d}"
                )
    return table
