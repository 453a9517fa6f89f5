"""The blocking polyhedron {a >= 0 : a(F) >= 1 for every edge F} and its vertices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from clutterlab.exact_linalg import is_integral, lcm_denominators, solve_square
from clutterlab.hypergraph import Hypergraph, indicator
from clutterlab.optimize import INFEASIBLE, OPTIMAL, LinearProgram, cover_lp, lp_solve


class InfeasibleDecomposition(ValueError):
    """Raised when c/k lies outside the polyhedron spanned by the vertices."""


@dataclass(frozen=True)
class BlockingPolyhedron:
    H: Hypergraph

    @property
    def dim(self) -> int:
        return self.H.n

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """All m + n inequality rows ``row . a >= rhs``: edges first, then a_i >= 0."""
        n = self.H.n
        edge_rows = tuple(indicator(e, n) for e in self.H.edges)
        axis_rows = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return edge_rows + axis_rows

    def rhs(self) -> tuple[int, ...]:
        return (1,) * self.H.m + (0,) * self.H.n

    def contains(self, a: Sequence) -> bool:
        return all(x >= 0 for x in a) and all(
            sum(a[v - 1] for v in e) >= 1 for e in self.H.edges
        )

    def tight_rows(self, a: Sequence) -> list[tuple[int, ...]]:
        return [row for row, b in zip(self.rows(), self.rhs())
                if sum(r * x for r, x in zip(row, a)) == b]


@dataclass(frozen=True)
class VertexSet:
    points: tuple[tuple[Fraction, ...], ...]
    integral: tuple[bool, ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def fractional(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(p for p, ok in zip(self.points, self.integral) if not ok)


@dataclass(frozen=True)
class Decomposition:
    lambdas: tuple[tuple[int, Fraction], ...]
    remainder: tuple[Fraction, ...]
    p: int

    def reconstruct(self, V: VertexSet) -> tuple[Fraction, ...]:
        out = list(self.remainder)
        for idx, w in self.lambdas:
            for i, x in enumerate(V.points[idx]):
                out[i] += w * x
        return tuple(out)

    def integer_certificate(self, k: int) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
        """Multiplicities ``k p lambda_i`` per vertex and the remainder ``k p b``.

        Summing ``mult * vertex`` plus the remainder gives exactly ``p * c``
        using ``k p`` vertices in total.
        """
        kp = k * self.p
        mults = tuple((idx, int(kp * w)) for idx, w in self.lambdas)
        rest = tuple(int(kp * x) for x in self.remainder)
        return mults, rest


def covering_vertices(rows: Sequence[Sequence[int]], n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of ``{a in R^n : a >= 0, g . a >= 1 for every row g}``.

    The rows must be non-negative integer vectors.  For a vertex with
    support S the tight rows are among the inclusion-minimal traces g|S,
    and |S| independent ones among them pin the vertex down; only those
    bases are tried.  Output is sorted lexicographically.
    """
    rows = [tuple(r) for r in rows]
    found = set()
    for size in range(1, n + 1):
        for S in itertools.combinations(range(n), size):
            traces = {tuple(r[i] for i in S) for r in rows}
            if any(not any(t) for t in traces):
                continue
            minimal = [t for t in traces
                       if not any(u != t and all(x <= y for x, y in zip(u, t)) for u in traces)]
            if len(minimal) < size:
                continue
            minimal.sort()
            for basis in itertools.combinations(minimal, size):
                x = solve_square(basis, (1,) * size)
                if x is None or any(v <= 0 for v in x):
                    continue
                if any(sum(a * b for a, b in zip(t, x)) < 1 for t in minimal):
                    continue
                point = [Fraction(0)] * n
                for i, v in zip(S, x):
                    point[i] = v
                found.add(tuple(point))
    return tuple(sorted(found))


@lru_cache(maxsize=1024)
def extreme_points(H: Hypergraph) -> VertexSet:
    """All extreme points of the blocking polyhedron of ``H``, exactly."""
    pts = covering_vertices([indicator(e, H.n) for e in H.edges], H.n)
    return VertexSet(pts, tuple(is_integral(p) for p in pts))


def is_fulkersonian(H: Hypergraph) -> bool:
    """True iff the blocking polyhedron of ``H`` has only integral vertices."""
    return all(extreme_points(H).integral)


def hoffman_integrality_check(H: Hypergraph, box_bound: int):
    """Solve min{a.c : a in Q(H)} for every c in [0, box_bound]^n.

    Returns ``(True, None)`` when every optimum is an integer, otherwise
    ``(False, (c, value))`` for the lexicographically first c whose optimum
    is fractional.
    """
    if box_bound < 1:
        raise ValueError("box_bound must be at least 1")
    for c in itertools.product(range(box_bound + 1), repeat=H.n):
        res = lp_solve(cover_lp(H, c))
        if res.value.denominator != 1:
            # the optimum is attained at a vertex, so that vertex is fractional
            if is_fulkersonian(H):
                raise ArithmeticError(f"fractional optimum {res.value} at c={c} on an integral polyhedron")
            return False, (c, res.value)
    return True, None


def caratheodory_decompose(c: Sequence[int], k: int, V: VertexSet) -> Decomposition:
    """Write c/k as a convex combination of the vertices in ``V`` plus a remainder >= 0.

    Solved as an LP in (lambda, b) minimizing the remainder's total.  ``p``
    is the lcm of all denominators, so ``p c`` splits into ``k p`` vertices
    plus an integral remainder.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = len(c)
    pts = V.points
    if any(len(a) != n for a in pts):
        raise ValueError("vertex dimension does not match c")
    r = len(pts)
    A = [tuple(pts[j][i] for j in range(r)) + tuple(int(i == t) for t in range(n)) for i in range(n)]
    A.append((1,) * r + (0,) * n)
    rhs = tuple(Fraction(ci, k) for ci in c) + (1,)
    lp = LinearProgram("min", (0,) * r + (1,) * n, tuple(A), ("=",) * (n + 1), rhs)
    res = lp_solve(lp)
    if res.status == INFEASIBLE:
        raise InfeasibleDecomposition(f"{tuple(c)}/{k} is not in the polyhedron")
    assert res.status == OPTIMAL
    lam = res.point[:r]
    rem = res.point[r:]
    lambdas = tuple((j, w) for j, w in enumerate(lam) if w)
    p = lcm_denominators(tuple(w for _, w in lambdas) + rem)
    return Decomposition(lambdas, rem, p)
