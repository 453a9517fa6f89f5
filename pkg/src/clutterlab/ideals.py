"""Monomial ideals, their powers, symbolic powers and integral closures.

A monomial x^c is its exponent vector c.  An ideal is stored by its
minimal generators, sorted lexicographically, so equality of ideals is
equality of the dataclasses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from clutterlab.exact_linalg import lcm_denominators
from clutterlab.hypergraph import Hypergraph, blocker, indicator
from clutterlab.optimize import UNBOUNDED, LinearProgram, lp_solve
from clutterlab.polytope import covering_vertices


def minimal_vectors(vecs: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Componentwise-minimal members of ``vecs``, sorted lexicographically."""
    kept: list[tuple[int, ...]] = []
    for v in sorted({tuple(v) for v in vecs}, key=lambda v: (sum(v), v)):
        if not any(all(a <= b for a, b in zip(u, v)) for u in kept):
            kept.append(v)
    return tuple(sorted(kept))


def dominates(c: Sequence[int], g: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(c, g))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[tuple[int, ...], ...]

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]], n: Optional[int] = None) -> "MonomialIdeal":
        gens = [tuple(int(x) for x in g) for g in gens]
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        if n is None:
            n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValueError(f"all exponent vectors must have length {n}")
        if any(x < 0 for g in gens for x in g):
            raise ValueError("exponents must be non-negative")
        return cls(n, minimal_vectors(gens))

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    @property
    def max_exponent(self) -> int:
        return max(max(g) for g in self.gens)

    def contains(self, c: Sequence[int]) -> bool:
        return any(dominates(c, g) for g in self.gens)


@dataclass(frozen=True)
class MembershipVerdict:
    """``kind`` names the certificate: ``"generators"``, ``"violated_cover"`` or ``"weights"``."""

    member: bool
    certificate: object = None
    kind: str = ""


def edge_ideal(H: Hypergraph) -> MonomialIdeal:
    return MonomialIdeal.from_gens((indicator(e, H.n) for e in H.edges), H.n)


def cover_ideal(H: Hypergraph) -> MonomialIdeal:
    return edge_ideal(blocker(H))


def _check(c: Sequence[int], n: int, k: int):
    if len(c) != n:
        raise ValueError(f"exponent vector of length {len(c)}, expected {n}")
    if k < 1:
        raise ValueError("k must be at least 1")


@lru_cache(maxsize=512)
def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of I^k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return I
    prev = power(I, k - 1)
    sums = (tuple(a + b for a, b in zip(p, g)) for p in prev.gens for g in I.gens)
    return MonomialIdeal(I.n, minimal_vectors(sums))


def power_membership(c: Sequence[int], I: MonomialIdeal, k: int) -> MembershipVerdict:
    """Is x^c in I^k?  The certificate lists k generators whose sum is <= c."""
    _check(c, I.n, k)
    gens = I.gens
    dead = set()

    def search(start, r, left):
        if left == 0:
            return []
        key = (start, r, left)
        if key in dead:
            return None
        for j in range(start, len(gens)):
            g = gens[j]
            if all(a >= b for a, b in zip(r, g)):
                rest = search(j, tuple(a - b for a, b in zip(r, g)), left - 1)
                if rest is not None:
                    return [g] + rest
        dead.add(key)
        return None

    found = search(0, tuple(c), k)
    if found is None:
        return MembershipVerdict(False)
    return MembershipVerdict(True, tuple(found), "generators")


def symbolic_membership(c: Sequence[int], H: Hypergraph, k: int) -> MembershipVerdict:
    """Is x^c in the k-th symbolic power of the edge ideal of ``H``?

    That holds iff c puts weight >= k on every minimal vertex cover of H.
    A non-member comes with the first violated cover.
    """
    _check(c, H.n, k)
    for C in blocker(H).edges:
        if sum(c[v - 1] for v in C) < k:
            return MembershipVerdict(False, C, "violated_cover")
    return MembershipVerdict(True)


def _box(bound: int, n: int) -> np.ndarray:
    return np.indices((bound + 1,) * n).reshape(n, -1).T


def _minimal_in_grid(member: np.ndarray) -> np.ndarray:
    """Exponent vectors c with ``member[c]`` true but ``member[c - e_i]`` false for all i."""
    minimal = member.copy()
    for axis in range(member.ndim):
        shifted = np.zeros_like(member)
        src = [slice(None)] * member.ndim
        dst = [slice(None)] * member.ndim
        src[axis] = slice(None, -1)
        dst[axis] = slice(1, None)
        shifted[tuple(dst)] = member[tuple(src)]
        minimal &= ~shifted
    return np.argwhere(minimal)


def symbolic_power_gens(H: Hypergraph, k: int) -> MonomialIdeal:
    """Minimal generators of the k-th symbolic power of the edge ideal of ``H``.

    Capping each exponent at k keeps every cover sum >= k, so the minimal
    generators live in the box [0, k]^n.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    covers = np.array([indicator(C, H.n) for C in blocker(H).edges], dtype=np.int64)
    pts = _box(k, H.n)
    member = ((pts @ covers.T) >= k).all(axis=1).reshape((k + 1,) * H.n)
    gens = [tuple(int(x) for x in row) for row in _minimal_in_grid(member)]
    return MonomialIdeal(H.n, tuple(sorted(gens)))


@lru_cache(maxsize=65536)
def _packing_weight(I: MonomialIdeal, c: tuple) -> tuple:
    """max sum(lambda) subject to sum(lambda_j g_j) <= c, lambda >= 0."""
    A = tuple(tuple(g[i] for g in I.gens) for i in range(I.n))
    res = lp_solve(LinearProgram("max", (1,) * len(I.gens), A, ("<=",) * I.n, c))
    return res.status, res.value, res.point


def closure_membership(c: Sequence[int], I: MonomialIdeal, k: int) -> MembershipVerdict:
    """Is x^c in the integral closure of I^k?

    Equivalent to c lying in k times the Newton polyhedron of I: some
    lambda >= 0 with sum(lambda) = k and sum(lambda_j g_j) <= c.  The
    certificate is such a lambda, one weight per generator.
    """
    _check(c, I.n, k)
    status, value, point = _packing_weight(I, tuple(int(x) for x in c))
    m = len(I.gens)
    if status == UNBOUNDED:
        # only the unit ideal has a zero generator
        j = I.gens.index((0,) * I.n)
        return MembershipVerdict(True, tuple(Fraction(k if i == j else 0) for i in range(m)), "weights")
    if value < k:
        return MembershipVerdict(False)
    scale = Fraction(k) / value
    return MembershipVerdict(True, tuple(x * scale for x in point), "weights")


@lru_cache(maxsize=256)
def newton_dual_vertices(I: MonomialIdeal) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of {a >= 0 : g . a >= 1 for every generator g}.

    x^c lies in the closure of I^k iff a . c >= k at every one of them.
    """
    return covering_vertices(I.gens, I.n)


def closure_gens(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of the integral closure of I^k.

    Minimal members are rounded-up points of k conv(gens), so they sit in
    the box [0, kD]^n with D the largest exponent; the box is scanned
    against the facet description of the Newton polyhedron.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if (0,) * I.n in I.gens:
        return I
    verts = newton_dual_vertices(I)
    scales = [lcm_denominators(a) for a in verts]
    W = np.array([[int(x * s) for x in a] for a, s in zip(verts, scales)], dtype=np.int64)
    need = k * np.array(scales, dtype=np.int64)
    bound = k * I.max_exponent
    pts = _box(bound, I.n)
    member = ((pts @ W.T) >= need).all(axis=1).reshape((bound + 1,) * I.n)
    gens = [tuple(int(x) for x in row) for row in _minimal_in_grid(member)]
    return MonomialIdeal(I.n, tuple(sorted(gens)))


def is_normal_up_to(I: MonomialIdeal, K: int):
    """Check that I^k is integrally closed for k = 1..K.

    Returns ``(True, None)`` or ``(False, (k, c))`` with c the
    lexicographically first generator of the closure of I^k outside I^k.
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    for k in range(1, K + 1):
        pw = power(I, k)
        for g in closure_gens(I, k).gens:
            if not pw.contains(g):
                return False, (k, g)
    return True, None
