"""Exact rational linear algebra on arbitrary-precision integers.

Rationals are `fractions.Fraction`, which keeps every value in canonical
form (reduced, denominator > 0) over Python's unbounded ints, so overflow
cannot occur and no rounding ever happens.

Elimination strategy, used by `determinant`, `solve` and `inverse`: plain
rational Gaussian elimination with partial pivoting on the entry of
largest absolute value (ties break to the lowest row index).  With exact
arithmetic pivoting is only needed to step over zeros; the magnitude rule
just keeps the choice deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionError, SingularMatrixError, ValidationError

Rational = Fraction


def qvector(entries: Iterable) -> tuple[Fraction, ...]:
    """Coerce a sequence of numbers into a tuple of exact rationals."""
    return tuple(Fraction(x) for x in entries)


class QMatrix:
    """Immutable matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: Sequence[Sequence]):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionError("all matrix rows must have equal length")
        self.rows = len(data)
        self.cols = width
        self._entries = data

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._entries[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QMatrix) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._entries)
        return f"QMatrix[{body}]"

    def leading_minor(self, k: int) -> "QMatrix":
        """Top-left k-by-k submatrix."""
        if not 1 <= k <= min(self.rows, self.cols):
            raise DimensionError(f"no leading {k}x{k} minor in a {self.rows}x{self.cols} matrix")
        return QMatrix([row[:k] for row in self._entries[:k]])

    def mul_vector(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} against {self.cols} columns")
        vec = qvector(v)
        return tuple(sum((row[j] * vec[j] for j in range(self.cols)), Fraction(0))
                     for row in self._entries)

    def mul_matrix(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        return QMatrix([[sum((self._entries[i][k] * other._entries[k][j]
                              for k in range(self.cols)), Fraction(0))
                         for j in range(other.cols)]
                        for i in range(self.rows)])

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            return self.mul_matrix(other)
        return self.mul_vector(other)


def determinant(m: QMatrix) -> Fraction:
    """Exact determinant via forward elimination; 0 for singular input."""
    if not m.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = [list(m.row(i)) for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            f = a[r][col] / p
            for c in range(col, n):
                a[r][c] -= f * a[col][c]
    return det


def _gauss_jordan(m: QMatrix, aug: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduce m to the identity, applying the same row operations to aug."""
    n = m.rows
    a = [list(m.row(i)) for i in range(n)]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
        p = a[col][col]
        if p != 1:
            a[col] = [x / p for x in a[col]]
            aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r == col or a[r][col] == 0:
                continue
            f = a[r][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return aug


def solve(m: QMatrix, b: Sequence) -> tuple[Fraction, ...]:
    """Exact solution x of m @ x = b."""
    if not m.is_square:
        raise DimensionError(f"solve needs a square matrix, got {m.rows}x{m.cols}")
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} against {m.rows} rows")
    aug = [[Fraction(x)] for x in b]
    result = _gauss_jordan(m, aug)
    return tuple(row[0] for row in result)


def inverse(m: QMatrix) -> QMatrix:
    """Exact inverse; m @ inverse(m) is the identity with no rounding."""
    if not m.is_square:
        raise DimensionError(f"inverse needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    aug = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return QMatrix(_gauss_jordan(m, aug))


def is_negative_definite(m: QMatrix) -> bool:
    """Sylvester test on -m: (-1)^k det(leading k-minor) > 0 for all k.

    Valid for symmetric matrices only, so asymmetric input is rejected
    outright rather than symmetrized.
    """
    if not m.is_square:
        raise DimensionError(f"definiteness needs a square matrix, got {m.rows}x{m.cols}")
    for i in range(m.rows):
        for j in range(i + 1, m.cols):
            if m[i, j] != m[j, i]:
                raise ValidationError(
                    f"definiteness test requires a symmetric matrix; "
                    f"entries ({i},{j}) and ({j},{i}) differ")
    sign = 1
    for k in range(1, m.rows + 1):
        sign = -sign
        if sign * determinant(m.leading_minor(k)) <= 0:
            return False
    return True


def lcm_of_denominators(v: Iterable) -> int:
    """Least positive k such that k*v is integral (1 for the empty vector)."""
    return lcm(*(Fraction(x).denominator for x in v), 1)
