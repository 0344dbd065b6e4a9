"""Exact rational matrix arithmetic with orthogonality certification.

Every entry is a `fractions.Fraction`, so orthogonality, determinant signs
and commutator identities are decided exactly, never numerically.  Inverses
of orthogonal matrices are taken as transposes; a general inverse is
deliberately not provided.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rationalish = Union[int, str, Fraction]


class NotOrthogonal(ValueError):
    """An operation required an exactly orthogonal matrix."""


class OrthComponent(Enum):
    """Connected component of O(n): the rotations or the reflections."""

    SO = "SO"
    O_MINUS = "O-"


def as_fraction(value: Rationalish) -> Fraction:
    """Coerce an int, "p/q" string or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class RatMatrix:
    """Immutable square matrix over the rationals."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[Rationalish]]):
        table = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", table)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[Rationalish]) -> "RatMatrix":
        n = len(entries)
        return cls(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def block_diag(cls, *blocks: "RatMatrix") -> "RatMatrix":
        n = sum(b.n for b in blocks)
        rows = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        for b in blocks:
            for i in range(b.n):
                for j in range(b.n):
                    rows[offset + i][offset + j] = b.rows[i][j]
            offset += b.n
        return cls(rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.rows))

    def __mul__(self, other: "RatMatrix") -> "RatMatrix":
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        cols = list(zip(*other.rows))
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-x for x in row] for row in self.rows])

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RatMatrix[{body}]"

    def det(self) -> Fraction:
        """Exact determinant by fraction Gaussian elimination."""
        m = [list(row) for row in self.rows]
        n = self.n
        result = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                result = -result
            result *= m[col][col]
            inv = Fraction(1) / m[col][col]
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    f = m[r][col] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return result

    def is_orthogonal(self) -> bool:
        return self.transpose() * self == RatMatrix.identity(self.n)


def is_orthogonal(a: RatMatrix) -> bool:
    """True iff a^T a equals the identity exactly."""
    return a.is_orthogonal()


def component(a: RatMatrix) -> OrthComponent:
    """Which component of O(n) the matrix lies in (by determinant sign).

    For n even the quotient to the projective group preserves components,
    so this also decides the component of the projective class.
    """
    if not a.is_orthogonal():
        raise NotOrthogonal("component is only defined for orthogonal matrices")
    return OrthComponent.SO if a.det() == 1 else OrthComponent.O_MINUS


def commutator(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """A B A^-1 B^-1 for orthogonal A, B (inverses taken as transposes)."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    return a * b * a.transpose() * b.transpose()
