"""Dense square matrices of exact rationals.

Just enough linear algebra for the spectral analysis: multiplication,
integer powers, Gauss-Jordan inversion, exact linear solves, and a
num/den string form for JSON and CSV interchange.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class RationalMatrix:
    """Immutable square matrix with Fraction entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Fraction | int]]):
        frozen = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not frozen:
            raise ValueError("matrix must have at least one row")
        dim = len(frozen)
        if any(len(row) != dim for row in frozen):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: int) -> tuple[Fraction, ...]:
        return self.rows[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RationalMatrix({self.dim}x{self.dim}: {body})"

    @classmethod
    def identity(cls, dim: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def diagonal(cls, values: Sequence[Fraction | int]) -> "RationalMatrix":
        dim = len(values)
        return cls([[values[i] if i == j else 0 for j in range(dim)] for i in range(dim)])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        cols = list(zip(*other.rows))
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def power(self, k: int) -> "RationalMatrix":
        if k < 0:
            raise ValueError("negative powers are not supported; invert first")
        result = RationalMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.rows))

    def scale(self, factor: Fraction | int) -> "RationalMatrix":
        factor = Fraction(factor)
        return RationalMatrix([[factor * x for x in row] for row in self.rows])

    def row_mul(self, vector: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        """vector @ self for a row vector."""
        if len(vector) != self.dim:
            raise ValueError("vector length mismatch")
        vec = [Fraction(v) for v in vector]
        return tuple(
            sum(vec[i] * self.rows[i][j] for i in range(self.dim)) for j in range(self.dim)
        )

    def col_mul(self, vector: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        """self @ vector for a column vector."""
        if len(vector) != self.dim:
            raise ValueError("vector length mismatch")
        vec = [Fraction(v) for v in vector]
        return tuple(sum(row[i] * vec[i] for i in range(self.dim)) for row in self.rows)

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(row) for row in self.rows)

    def is_stochastic(self) -> bool:
        return all(x >= 0 for row in self.rows for x in row) and all(
            s == 1 for s in self.row_sums()
        )

    def is_positive(self) -> bool:
        return all(x > 0 for row in self.rows for x in row)

    def inverse(self) -> "RationalMatrix":
        """Gauss-Jordan inverse; raises ValueError if singular."""
        dim = self.dim
        work = [list(row) + [Fraction(int(i == j)) for j in range(dim)]
                for i, row in enumerate(self.rows)]
        for col in range(dim):
            pivot = next((r for r in range(col, dim) if work[r][col] != 0), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            scale = work[col][col]
            work[col] = [x / scale for x in work[col]]
            for r in range(dim):
                if r != col and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return RationalMatrix([row[dim:] for row in work])

    # --- serialization ---------------------------------------------------

    def to_string_rows(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]

    @classmethod
    def from_string_rows(cls, rows: Sequence[Sequence[str]]) -> "RationalMatrix":
        return cls([[Fraction(x) for x in row] for row in rows])

    def to_json_obj(self) -> dict:
        return {"dim": self.dim, "rows": self.to_string_rows()}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RationalMatrix":
        matrix = cls.from_string_rows(obj["rows"])
        if matrix.dim != obj.get("dim", matrix.dim):
            raise ValueError("dimension header disagrees with row data")
        return matrix

    def to_csv(self) -> str:
        lines = [f"dim,{self.dim}"]
        lines += [",".join(str(x) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "RationalMatrix":
        lines = [line for line in text.strip().splitlines() if line]
        header = lines[0].split(",")
        if header[0] != "dim":
            raise ValueError("missing dimension header")
        dim = int(header[1])
        matrix = cls([[Fraction(x) for x in line.split(",")] for line in lines[1:]])
        if matrix.dim != dim:
            raise ValueError("dimension header disagrees with row data")
        return matrix


def solve_linear(matrix: RationalMatrix, rhs: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """Solve matrix @ x = rhs exactly; raises ValueError if singular."""
    dim = matrix.dim
    if len(rhs) != dim:
        raise ValueError("right-hand side length mismatch")
    work = [list(row) + [Fraction(rhs[i])] for i, row in enumerate(matrix.rows)]
    for col in range(dim):
        pivot = next((r for r in range(col, dim) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        scale = work[col][col]
        work[col] = [x / scale for x in work[col]]
        for r in range(dim):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return tuple(work[i][dim] for i in range(dim))
