"""Simple hypergraphs (clutters), their blockers and vertex covers of order k.

Vertices are ``1..n``.  Edges are stored as sorted tuples and the edge list
itself is sorted, so two hypergraphs are equal exactly when their canonical
forms agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    pass


class EmptyEdge(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class NotAntichain(HypergraphError):
    pass


class NoEdges(HypergraphError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        """Edges as bitmasks, bit ``i-1`` standing for vertex ``i``."""
        return _masks(self.edges)

    def __str__(self):
        body = " ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}: {body})"


@lru_cache(maxsize=None)
def _masks(edges):
    return tuple(sum(1 << (v - 1) for v in e) for e in edges)


def _mask_to_edge(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _canonical(edges: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted({tuple(sorted(set(e))) for e in edges}))


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    # sorting by popcount means a set can only be absorbed by an earlier one
    kept: list[int] = []
    for s in sorted(set(masks), key=lambda x: (bin(x).count("1"), x)):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def minimalize(edges: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Keep only the inclusion-minimal sets, in canonical order."""
    sets = [frozenset(e) for e in edges]
    if any(v < 1 for s in sets for v in s):
        raise VertexOutOfRange("vertex indices must be positive")
    masks = [sum(1 << (v - 1) for v in s) for s in sets]
    return _canonical(_mask_to_edge(m) for m in _minimal_masks(masks))


def make_simple(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate ``edges`` as a clutter on ``1..n`` and return it canonically.

    Repeated edges are merged.  Raises :class:`EmptyEdge`,
    :class:`VertexOutOfRange`, :class:`NotAntichain` or :class:`NoEdges`.
    """
    if n < 1:
        raise HypergraphError(f"need at least one vertex, got n={n}")
    canon = _canonical(edges)
    if not canon:
        raise NoEdges("a hypergraph needs at least one edge")
    for e in canon:
        if not e:
            raise EmptyEdge("edges must be nonempty")
        bad = [v for v in e if not 1 <= v <= n]
        if bad:
            raise VertexOutOfRange(f"vertex {bad[0]} outside 1..{n}")
    masks = _masks(canon)
    for a, ea in zip(masks, canon):
        for b, eb in zip(masks, canon):
            if a != b and a & b == a:
                raise NotAntichain(f"edge {set(ea)} is contained in edge {set(eb)}")
    return Hypergraph(n, canon)


def incidence_matrix(H: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """The n x m 0/1 matrix whose column j is the indicator of edge j."""
    return tuple(tuple(int(i in e) for e in H.edges) for i in range(1, H.n + 1))


def indicator(edge: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(edge)
    return tuple(int(i in s) for i in range(1, n + 1))


@lru_cache(maxsize=4096)
def blocker(H: Hypergraph) -> Hypergraph:
    """Hypergraph of the inclusion-minimal vertex covers of ``H``.

    Edges are absorbed one at a time: the minimal covers of the first j
    edges are extended by every vertex of edge j+1 (covers already meeting
    it are kept as they are), then minimalized.
    """
    covers = [0]
    for e in H.masks:
        nxt = []
        for c in covers:
            if c & e:
                nxt.append(c)
            else:
                w = e
                while w:
                    low = w & -w
                    nxt.append(c | low)
                    w ^= low
        covers = _minimal_masks(nxt)
    return Hypergraph(H.n, _canonical(_mask_to_edge(c) for c in covers))


def _check_length(c: Sequence[int], H: Hypergraph):
    if len(c) != H.n:
        raise ValueError(f"vector of length {len(c)} for a hypergraph on {H.n} vertices")


def edge_sums(c: Sequence[int], H: Hypergraph) -> list[int]:
    _check_length(c, H)
    return [sum(c[v - 1] for v in e) for e in H.edges]


def is_cover_of_order(c: Sequence[int], H: Hypergraph, k: int) -> bool:
    """True iff every edge of ``H`` carries total weight at least ``k`` under ``c``."""
    return all(s >= k for s in edge_sums(c, H))


def cover_order(c: Sequence[int], H: Hypergraph) -> int:
    """The largest ``k`` for which ``c`` is a vertex cover of order ``k``."""
    return min(edge_sums(c, H))


def koenig(H: Hypergraph) -> bool:
    """Minimum vertex cover size equals the maximum number of disjoint edges."""
    from clutterlab.optimize import ip_cover_min, ip_pack_max

    ones = (1,) * H.n
    return ip_cover_min(ones, H).value == ip_pack_max(ones, H).value
