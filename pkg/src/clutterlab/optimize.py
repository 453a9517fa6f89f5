"""Exact linear programs and the two small integer programs on a clutter.

``lp_solve`` is a two-phase simplex with Bland's rule.  The tableau is kept
fraction-free: it holds integers ``T`` and a common denominator ``d`` so
that the true tableau is ``T / d``, and every pivot divides exactly by the
previous pivot (Bareiss / Edmonds).  This keeps all arithmetic in Python
ints while staying exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional, Sequence

from clutterlab.hypergraph import Hypergraph, incidence_matrix

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """``sense`` of ``objective . x`` subject to ``A x (senses) rhs``, ``x >= 0``.

    ``senses`` holds one of ``">="``, ``"<="``, ``"="`` per row.
    """

    sense: str
    objective: tuple
    A: tuple
    senses: tuple
    rhs: tuple

    def __post_init__(self):
        if self.sense not in ("min", "max"):
            raise ValueError(f"sense must be 'min' or 'max', not {self.sense!r}")
        n = len(self.objective)
        if any(len(row) != n for row in self.A):
            raise ValueError("constraint rows must match the objective length")
        if not len(self.A) == len(self.senses) == len(self.rhs):
            raise ValueError("A, senses and rhs must have the same number of rows")
        bad = set(self.senses) - {">=", "<=", "="}
        if bad:
            raise ValueError(f"unknown constraint sense {bad.pop()!r}")

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    point: Optional[tuple] = None


@dataclass(frozen=True)
class IPResult:
    value: int
    point: tuple


def _integer_row(values) -> list[int]:
    values = list(values)
    if all(type(v) is int for v in values):
        return values
    fr = [Fraction(v) for v in values]
    scale = lcm(1, *(x.denominator for x in fr))
    return [int(x * scale) for x in fr]


class _Tableau:
    def __init__(self, rows, basis, ncols):
        self.T = rows
        self.basis = basis
        self.ncols = ncols
        self.d = 1

    def pivot(self, r, s, extra):
        T, d = self.T, self.d
        rr = T[r]
        p = rr[s]
        for block in (T, extra):
            for i, row in enumerate(block):
                if row is rr:
                    continue
                f = row[s]
                if f:
                    block[i] = [(a * p - f * b) // d for a, b in zip(row, rr)]
                elif p != d:
                    block[i] = [a * p // d for a in row]
        self.d = p
        self.basis[r] = s

    def run(self, obj, allowed, extra):
        """Minimize the reduced-cost row ``obj`` (inside ``extra``) with Bland's rule."""
        T, rhs = self.T, self.ncols
        while True:
            d = self.d
            sgn = 1 if d > 0 else -1
            orow = extra[obj]
            s = next((j for j in allowed if orow[j] * sgn < 0), None)
            if s is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(T):
                a = row[s]
                if a * sgn <= 0:
                    continue
                if best is None:
                    best = i
                    continue
                b = T[best]
                lhs, rhs_ = row[rhs] * b[s], b[rhs] * a
                # both pivot candidates share the sign of d, so cross-multiplying is safe
                if lhs < rhs_:
                    best = i
                elif lhs == rhs_ and self.basis[i] < self.basis[best]:
                    best = i
            if best is None:
                return UNBOUNDED
            self.pivot(best, s, extra)
            T = self.T


def lp_solve(p: LinearProgram) -> LPResult:
    """Exact optimum of ``p`` over the non-negative rationals."""
    n = p.num_vars
    rows, kinds = [], []
    for coeffs, sense, b in zip(p.A, p.senses, p.rhs):
        row = _integer_row(list(coeffs) + [b])
        if row[-1] < 0:
            row = [-x for x in row]
            sense = {">=": "<=", "<=": ">=", "=": "="}[sense]
        rows.append(row)
        kinds.append(sense)
    R = len(rows)
    n_slack = sum(k != "=" for k in kinds)
    n_art = sum(k != "<=" for k in kinds)
    ncols = n + n_slack + n_art
    T, basis, art_cols = [], [], []
    si, ai = n, n + n_slack
    for row, kind in zip(rows, kinds):
        full = row[:-1] + [0] * (n_slack + n_art) + [row[-1]]
        if kind == "<=":
            full[si] = 1
            basis.append(si)
            si += 1
        else:
            if kind == ">=":
                full[si] = -1
                si += 1
            full[ai] = 1
            basis.append(ai)
            art_cols.append(ai)
            ai += 1
        T.append(full)

    cost = _integer_row(p.objective)
    if p.sense == "max":
        cost = [-x for x in cost]
    phase2 = cost + [0] * (n_slack + n_art + 1)
    extra = [phase2]
    tab = _Tableau(T, basis, ncols)

    art = set(art_cols)
    if art_cols:
        phase1 = [0] * (ncols + 1)
        for j in art_cols:
            phase1[j] = 1
        for row, bcol in zip(T, basis):
            if bcol in art:
                phase1 = [a - b for a, b in zip(phase1, row)]
        extra.append(phase1)
        tab.run(1, range(ncols), extra)
        if extra[1][ncols] != 0:
            return LPResult(INFEASIBLE)
        # degenerate pivots push zero-level artificials out of the basis
        for r in range(R):
            if tab.basis[r] in art:
                row = tab.T[r]
                s = next((j for j in range(n + n_slack) if row[j] != 0), None)
                if s is not None:
                    tab.pivot(r, s, extra)
        extra.pop()

    status = tab.run(0, range(n + n_slack), extra)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    d = tab.d
    nums = [0] * n
    for r, bcol in enumerate(tab.basis):
        if bcol < n:
            nums[bcol] = tab.T[r][ncols]
    x = tuple(Fraction(v, d) for v in nums)
    if all(type(c) is int for c in p.objective):
        value = Fraction(sum(c * v for c, v in zip(p.objective, nums)), d)
    else:
        value = sum((Fraction(c) * xi for c, xi in zip(p.objective, x)), Fraction(0))
    return LPResult(OPTIMAL, value, x)


def cover_lp(H: Hypergraph, c: Sequence[int]) -> LinearProgram:
    """min a.c subject to a(F) >= 1 for every edge F, a >= 0."""
    rows = tuple(tuple(int(i in e) for i in range(1, H.n + 1)) for e in H.edges)
    return LinearProgram("min", tuple(c), rows, (">=",) * H.m, (1,) * H.m)


def packing_lp(H: Hypergraph, c: Sequence[int]) -> LinearProgram:
    """max b.1 subject to M b <= c, b >= 0."""
    return LinearProgram("max", (1,) * H.m, incidence_matrix(H), ("<=",) * H.n, tuple(c))


def lp_dual_pair(H: Hypergraph, c: Sequence[int]) -> tuple[LPResult, LPResult]:
    """Solve the fractional covering and packing programs weighted by ``c``.

    Raises ``ArithmeticError`` if the two optima differ, which would mean
    the solver is broken.
    """
    if len(c) != H.n:
        raise ValueError(f"weight vector of length {len(c)} for n={H.n}")
    lo = lp_solve(cover_lp(H, c))
    hi = lp_solve(packing_lp(H, c))
    if lo.status != OPTIMAL or hi.status != OPTIMAL or lo.value != hi.value:
        raise ArithmeticError(f"LP duality violated for {H} at c={tuple(c)}: {lo} vs {hi}")
    return lo, hi


@lru_cache(maxsize=1024)
def _minimal_cover_vectors(H: Hypergraph) -> tuple[tuple[int, ...], ...]:
    masks = H.masks
    covers = [a for a in range(1 << H.n) if all(a & e for e in masks)]
    # any cover contains a minimal one that costs no more, so minimal ones suffice
    minimal = [a for a in covers if not any(b != a and b & a == b for b in covers)]
    vecs = [tuple((a >> i) & 1 for i in range(H.n)) for a in minimal]
    # order by vertex set, the same order the blocker's edges are listed in
    return tuple(sorted(vecs, key=lambda v: tuple(i for i, x in enumerate(v) if x)))


def ip_cover_min(c: Sequence[int], H: Hypergraph) -> IPResult:
    """min a.c over 0/1 vectors a meeting every edge.

    Integer vectors above 1 never help a covering problem with a 0/1 matrix
    and non-negative weights, so the 0/1 search is exact over all of N^n.
    The witness is a minimal vertex cover; ties go to the cover whose
    sorted vertex list comes first.
    """
    if len(c) != H.n:
        raise ValueError(f"weight vector of length {len(c)} for n={H.n}")
    best, arg = None, None
    for a in _minimal_cover_vectors(H):
        v = sum(ci for ci, ai in zip(c, a) if ai)
        if best is None or v < best:
            best, arg = v, a
    return IPResult(best, arg)


class _Packer:
    """Depth-first search over b_1, ..., b_m with memoized subproblems."""

    def __init__(self, H: Hypergraph):
        self.edges = [tuple(v - 1 for v in e) for e in H.edges]
        m = len(self.edges)
        # vertices still touched by edges j..m-1
        self.alive = []
        for j in range(m + 1):
            self.alive.append({v for e in self.edges[j:] for v in e})
        self.memo: dict = {}

    def _key(self, j, r):
        alive = self.alive[j]
        return j, tuple(x if i in alive else 0 for i, x in enumerate(r))

    def best(self, j, r):
        if j == len(self.edges):
            return 0
        key = self._key(j, r)
        got = self.memo.get(key)
        if got is not None:
            return got
        e = self.edges[j]
        ub = min(r[i] for i in e)
        val, cur = 0, list(key[1])
        for t in range(ub + 1):
            val = max(val, t + self.best(j + 1, cur))
            for i in e:
                cur[i] -= 1
        self.memo[key] = val
        return val

    def witness(self, r):
        r = list(r)
        b = []
        for j, e in enumerate(self.edges):
            target = self.best(j, r)
            t = 0
            while t + self.best(j + 1, [x - t if i in e else x for i, x in enumerate(r)]) != target:
                t += 1
            b.append(t)
            for i in e:
                r[i] -= t
        return tuple(b)


@lru_cache(maxsize=256)
def _packer(H: Hypergraph) -> _Packer:
    return _Packer(H)


def ip_pack_max(c: Sequence[int], H: Hypergraph) -> IPResult:
    """max b.1 over b in N^m with M b <= c.

    Each b_j ranges over 0..min_{i in F_j} c_i; subproblems are memoized on
    the residual weights restricted to the vertices of the remaining edges.
    The witness is the lexicographically smallest optimal b.
    """
    if len(c) != H.n:
        raise ValueError(f"weight vector of length {len(c)} for n={H.n}")
    if any(x < 0 for x in c):
        raise ValueError("weights must be non-negative")
    pk = _packer(H)
    value = pk.best(0, tuple(c))
    return IPResult(value, pk.witness(tuple(c)))
