"""Dense matrices over the rational numbers with exact arithmetic.

Everything that feeds a decision elsewhere in the package (definiteness,
kernels, matrix identities) goes through this module, so there is no
floating point anywhere below.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def vector(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def l1_norm(vec: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for v in vec:
        total += v if v >= 0 else -v
    return total


class RatMatrix:
    """Immutable rectangular matrix with Fraction entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            for row in data:
                if len(row) != width:
                    raise ValueError("ragged rows in matrix")
        self._rows = data

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        one, zero = Fraction(1), Fraction(0)
        return RatMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        zero = Fraction(0)
        return RatMatrix([[zero] * cols for _ in range(rows)])

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> "RatMatrix":
        cols = [vector(c) for c in cols]
        if not cols:
            return RatMatrix([])
        height = len(cols[0])
        return RatMatrix([[cols[j][i] for j in range(len(cols))] for i in range(height)])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"RatMatrix([{body}])"

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([-x for x in row] for row in self._rows)

    def scale(self, c) -> "RatMatrix":
        c = as_fraction(c)
        return RatMatrix([c * x for x in row] for row in self._rows)

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}")
        ocols = other.cols
        out = []
        for row in self._rows:
            acc = [Fraction(0)] * ocols
            for k, coeff in enumerate(row):
                if coeff:
                    orow = other._rows[k]
                    for j in range(ocols):
                        if orow[j]:
                            acc[j] += coeff * orow[j]
            out.append(acc)
        return RatMatrix(out)

    def apply(self, vec: Sequence) -> Vector:
        vec = vector(vec)
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((c * v for c, v in zip(row, vec) if c), Fraction(0)) for row in self._rows)

    def __pow__(self, exponent: int) -> "RatMatrix":
        if not self.is_square:
            raise ValueError("matrix power requires a square matrix")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = RatMatrix.identity(self.rows)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(zip(*self._rows)) if self._rows else RatMatrix([])

    def trace(self) -> Fraction:
        if not self.is_square:
            raise ValueError("trace requires a square matrix")
        return sum((self._rows[i][i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(not x for row in self._rows for x in row)

    def is_identity(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self._rows[i][j] == (1 if i == j else 0)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix([[self._rows[i][j] for j in cols] for i in rows])

    def leading_minor(self, k: int) -> "RatMatrix":
        idx = list(range(k))
        return self.submatrix(idx, idx)

    def det(self) -> Fraction:
        if not self.is_square:
            raise ValueError("determinant requires a square matrix")
        n = self.rows
        work = [list(row) for row in self._rows]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det *= work[col][col]
            inv = 1 / work[col][col]
            for r in range(col + 1, n):
                f = work[r][col] * inv
                if f:
                    for c in range(col, n):
                        work[r][c] -= f * work[col][c]
        return det

    def rref(self) -> tuple["RatMatrix", tuple[int, ...]]:
        work = [list(row) for row in self._rows]
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for col in range(ncols):
            if r == nrows:
                break
            pivot = next((i for i in range(r, nrows) if work[i][col]), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            inv = 1 / work[r][col]
            work[r] = [x * inv for x in work[r]]
            for i in range(nrows):
                if i != r and work[i][col]:
                    f = work[i][col]
                    work[i] = [a - f * b for a, b in zip(work[i], work[r])]
            pivots.append(col)
            r += 1
        return RatMatrix(work), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[Vector]:
        """Basis of the right null space, one vector per free column."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.cols
            vec[f] = Fraction(1)
            for r, p in enumerate(pivots):
                vec[p] = -reduced[r, f]
            basis.append(tuple(vec))
        return basis

    def inverse(self) -> "RatMatrix":
        if not self.is_square:
            raise ValueError("inverse requires a square matrix")
        n = self.rows
        work = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
                for i, row in enumerate(self._rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = 1 / work[col][col]
            work[col] = [x * inv for x in work[col]]
            for r in range(n):
                if r != col and work[r][col]:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
        return RatMatrix([row[n:] for row in work])

    def solve(self, rhs: Sequence) -> Vector | None:
        """One solution of self * x = rhs, or None if inconsistent."""
        rhs = vector(rhs)
        if len(rhs) != self.rows:
            raise ValueError("right-hand side length does not match row count")
        augmented = RatMatrix([list(row) + [rhs[i]] for i, row in enumerate(self._rows)])
        reduced, pivots = augmented.rref()
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for r, p in enumerate(pivots):
            x[p] = reduced[r, self.cols]
        return tuple(x)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return RatMatrix([list(a) + list(b) for a, b in zip(self._rows, other._rows)])

    def _check_same_shape(self, other: "RatMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


class VecSpan:
    """Growing echelon basis for a set of dense rational vectors."""

    def __init__(self, length: int):
        self.length = length
        self._pivots: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, vec: Sequence) -> list[Fraction]:
        out = [as_fraction(v) for v in vec]
        if len(out) != self.length:
            raise ValueError("vector length mismatch")
        for j in sorted(self._pivots):
            if out[j]:
                f = out[j]
                pivot_vec = self._pivots[j]
                for k in range(self.length):
                    if pivot_vec[k]:
                        out[k] -= f * pivot_vec[k]
        return out

    def add(self, vec: Sequence) -> bool:
        """Insert vec; True when it enlarges the span."""
        reduced = self.reduce(vec)
        lead = next((j for j, v in enumerate(reduced) if v), None)
        if lead is None:
            return False
        inv = 1 / reduced[lead]
        self._pivots[lead] = [v * inv for v in reduced]
        return True

    def contains(self, vec: Sequence) -> bool:
        return all(not v for v in self.reduce(vec))

    def basis(self) -> list[Vector]:
        return [tuple(self._pivots[j]) for j in sorted(self._pivots)]
