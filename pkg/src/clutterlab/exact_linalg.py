"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors and matrices are plain
tuples (or any sequences) of them.  Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]
RatMatrix = tuple  # tuple[RatVector, ...]


def vector(values) -> RatVector:
    return tuple(Fraction(v) for v in values)


def matrix(rows) -> RatMatrix:
    rows = tuple(vector(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows must all have the same length")
    return rows


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def matvec(A: Sequence[Sequence], x: Sequence) -> RatVector:
    return tuple(dot(row, x) for row in A)


def transpose(A: Sequence[Sequence]) -> RatMatrix:
    return tuple(tuple(col) for col in zip(*A))


def _echelon(rows: list[list[Fraction]], ncols: int) -> int:
    """Reduce ``rows`` in place to row echelon form; return the rank."""
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                f /= p
                ri, rr = rows[i], rows[r]
                for j in range(col, len(ri)):
                    ri[j] -= f * rr[j]
        r += 1
        if r == len(rows):
            break
    return r


def rank(A: Sequence[Sequence]) -> int:
    """Exact rank of ``A`` over the rationals."""
    rows = [[Fraction(v) for v in row] for row in A]
    if not rows:
        return 0
    return _echelon(rows, len(rows[0]))


def solve_square(A: Sequence[Sequence], b: Sequence) -> Optional[RatVector]:
    """Solve ``A x = b`` exactly for square ``A``.

    Returns ``None`` when ``A`` is singular.  Raises ``ValueError`` on a
    dimension mismatch.
    """
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve_square needs a square matrix and a matching right-hand side")
    rows = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    if _echelon(rows, n) < n:
        return None
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = rows[i][n] - sum((rows[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = s / rows[i][i]
    return tuple(x)


def lcm_denominators(v: Sequence) -> int:
    """Smallest positive integer ``p`` such that ``p * v`` is integral."""
    return lcm(1, *(Fraction(x).denominator for x in v))


def is_integral(v: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def format_rational(x) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(v: Sequence) -> str:
    return ",".join(format_rational(x) for x in v)
