import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from clutterlab.hypergraph import (
    EmptyEdge,
    HypergraphError,
    NoEdges,
    NotAntichain,
    VertexOutOfRange,
    blocker,
    cover_order,
    incidence_matrix,
    is_cover_of_order,
    koenig,
    make_simple,
    minimalize,
)
from conftest import hg


@st.composite
def clutters(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    raw = draw(st.lists(st.sets(st.integers(1, n), min_size=1), min_size=1, max_size=6))
    return make_simple(n, minimalize(raw))


def test_make_simple_canonical():
    H = make_simple(3, [[3, 2], [1, 3], [2, 1]])
    assert H.edges == ((1, 2), (1, 3), (2, 3))
    assert H == hg("C3")
    assert make_simple(2, [[1, 2]]).edges == ((1, 2),)


@pytest.mark.parametrize("n, edges, exc", [
    (3, [[1, 2], [1, 2, 3]], NotAntichain),
    (3, [[1, 2], []], EmptyEdge),
    (3, [[1, 4]], VertexOutOfRange),
    (3, [[0, 1]], VertexOutOfRange),
    (3, [], NoEdges),
    (0, [[1]], HypergraphError),
])
def test_make_simple_rejects(n, edges, exc):
    with pytest.raises(exc):
        make_simple(n, edges)


def test_duplicate_edges_merge():
    assert make_simple(2, [[1, 2], [2, 1]]).m == 1


@pytest.mark.parametrize("edges, expected", [
    ([[1], [1, 2]], ((1,),)),
    ([[1, 2], [2, 3]], ((1, 2), (2, 3))),
    ([[1, 2, 3], [2, 3], [3]], ((3,),)),
])
def test_minimalize(edges, expected):
    assert minimalize(edges) == expected


def test_incidence_matrix(E1, C3, C4):
    assert incidence_matrix(E1) == ((1,), (1,))
    M3 = incidence_matrix(C3)
    assert [sum(col) for col in zip(*M3)] == [2, 2, 2]
    M4 = incidence_matrix(C4)
    assert len(M4) == 4 and len(M4[0]) == 4
    assert [sum(row) for row in M4] == [2, 2, 2, 2]


def test_blocker_examples(E1, C4, Q6):
    assert blocker(E1).edges == ((1,), (2,))
    assert blocker(C4).edges == tuple(oracles.minimal_covers(4, C4.edges)) == ((1, 3), (2, 4))
    bq = blocker(Q6).edges
    assert bq == tuple(oracles.minimal_covers(6, Q6.edges))
    assert {(1, 6), (2, 5), (3, 4)} <= set(bq)


def test_isolated_vertex_never_in_covers():
    H = make_simple(4, [[1, 2], [2, 3]])
    assert all(4 not in C for C in blocker(H).edges)
    assert blocker(blocker(H)) == H


@given(clutters())
def test_blocker_matches_oracle(H):
    assert blocker(H).edges == tuple(oracles.minimal_covers(H.n, H.edges))


@given(clutters())
def test_blocker_involution(H):
    assert blocker(blocker(H)) == H


@given(clutters())
def test_blocker_edges_are_minimal_transversals(H):
    for C in blocker(H).edges:
        assert all(set(C) & set(F) for F in H.edges)
        for v in C:
            smaller = set(C) - {v}
            assert not all(smaller & set(F) for F in H.edges)


def test_cover_of_order_examples(C3):
    assert is_cover_of_order((1, 1, 1), C3, 2)
    assert not is_cover_of_order((1, 0, 0), C3, 1)
    assert is_cover_of_order((0, 0, 0), C3, 0)


def test_cover_order_examples(C3, C4, Q6):
    assert cover_order((1, 1, 1), C3) == 2
    assert cover_order((0,) * 6, Q6) == 0
    c = (2, 1, 0, 3)
    assert cover_order(c, C4) == min(sum(c[i - 1] for i in F) for F in C4.edges) == 1


def test_length_mismatch(C3):
    with pytest.raises(ValueError):
        cover_order((1, 1), C3)


weights = st.lists(st.integers(0, 3), min_size=5, max_size=5)


@settings(max_examples=60)
@given(clutters(max_n=5).filter(lambda H: H.n == 5), weights, weights, st.integers(0, 6))
def test_cover_order_properties(H, c, d, k):
    bigger = [max(a, b) for a, b in zip(c, d)]
    if is_cover_of_order(c, H, k):
        assert is_cover_of_order(bigger, H, k)
        assert all(is_cover_of_order(c, H, j) for j in range(k + 1))
    o = cover_order(c, H)
    assert is_cover_of_order(c, H, o) and not is_cover_of_order(c, H, o + 1)
    total = [a + b for a, b in zip(c, d)]
    assert cover_order(total, H) >= cover_order(c, H) + cover_order(d, H)


@pytest.mark.parametrize("name, expected", [("E1", True), ("C4", True), ("C3", False), ("P3", True), ("K4", False)])
def test_koenig(name, expected):
    H = hg(name)
    assert koenig(H) is expected
    assert (oracles.min_cover_size(H.n, H.edges) == oracles.max_disjoint_edges(H.edges)) is expected


def test_blocker_involution_random_5_6():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.choice([5, 6])
        edges = minimalize(rng.sample(range(1, n + 1), rng.randint(1, n)) for _ in range(rng.randint(1, 7)))
        H = make_simple(n, edges)
        assert blocker(blocker(H)) == H
