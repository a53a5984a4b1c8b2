"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples.  Nothing in
here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from .errors import DegenerateInputError, DimensionError

Scalar = Fraction
Vector = tuple


def as_fraction_vector(v) -> tuple:
    return tuple(Fraction(x) for x in v)


def dot(a: Sequence, b: Sequence) -> Fraction:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}")
    return Fraction(sum(Fraction(x) * Fraction(y) for x, y in zip(a, b)))


def int_dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _row_to_integers(row):
    """Return ``(int_row, scale)`` with ``int_row == scale * row``."""
    fr = [Fraction(x) for x in row]
    scale = reduce(lcm, (x.denominator for x in fr), 1)
    return [int(x * scale) for x in fr], scale


def _bareiss(m: list) -> int:
    # Fraction-free elimination; every division below is exact.
    n = len(m)
    m = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    rows, scales = zip(*(_row_to_integers(r) for r in m))
    den = reduce(lambda x, y: x * y, scales, 1)
    return Fraction(_bareiss(list(rows)), den)


def int_determinant(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix, as an ``int``."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("determinant needs a square matrix")
    if n == 0:
        return 1
    return _bareiss([list(r) for r in m])


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a list of rational vectors (Gaussian elimination)."""
    rows = [_row_to_integers(v)[0] for v in vectors]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [p[col] * x - f * y for x, y in zip(rows[i], p)]
        r += 1
        if r == len(rows):
            break
    return r


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for no points)."""
    if not points:
        return -1
    p0 = points[0]
    return rank([[Fraction(a) - Fraction(b) for a, b in zip(p, p0)] for p in points[1:]])


def primitive(v: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    g = reduce(gcd, (abs(int(x)) for x in v), 0)
    if g == 0:
        raise DegenerateInputError("zero vector has no primitive form")
    return tuple(int(x) // g for x in v)


def primitive_normal(v: Sequence[int], orient: Sequence | None = None) -> tuple:
    """Primitive form of a nonzero integer normal.

    Without ``orient`` the first nonzero entry is made positive.  With
    ``orient`` (a point known to lie strictly on the inner side, or any
    vector whose inner product with the normal must come out positive) the
    sign is chosen so that ``dot(normal, orient) > 0``.
    """
    p = primitive(v)
    if orient is None:
        lead = next(x for x in p if x != 0)
        flip = lead < 0
    else:
        s = dot(p, orient)
        if s == 0:
            raise DegenerateInputError("orientation vector is orthogonal to the normal")
        flip = s < 0
    return tuple(-x for x in p) if flip else p


def integer_scaled(v: Sequence) -> tuple:
    """Smallest positive integer multiple of a rational vector that is integral."""
    ints, _ = _row_to_integers(v)
    return tuple(ints)


@dataclass(frozen=True)
class Hyperplane:
    """The half-space ``<x, normal> >= offset`` (and its boundary)."""

    normal: tuple
    offset: Fraction

    @classmethod
    def from_integer_row(cls, b: Sequence[int], c) -> "Hyperplane":
        """Normalize ``<x,b> >= c`` so the normal is primitive."""
        g = reduce(gcd, (abs(x) for x in b), 0)
        if g == 0:
            raise DegenerateInputError("hyperplane normal is zero")
        return cls(tuple(x // g for x in b), Fraction(c) / g)

    def value(self, x) -> Fraction:
        return dot(self.normal, x)

    def contains(self, x) -> bool:
        return self.value(x) >= self.offset

    def is_tight(self, x) -> bool:
        return self.value(x) == self.offset

    def scaled(self, n) -> "Hyperplane":
        return Hyperplane(self.normal, self.offset * n)

    def integer_form(self) -> tuple:
        """``(b', c')`` integers with ``<x,b'> >= c'`` equivalent to this half-space."""
        den = self.offset.denominator
        return tuple(x * den for x in self.normal), self.offset.numerator
