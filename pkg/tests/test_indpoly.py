import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from occulab import data
from occulab.exactalg import IntPolynomial
from occulab.graph_core import Graph, named_graph
from occulab.graph_core.named import cycle, generalized_petersen
from occulab.indpoly import (
    MultiplicityVector,
    convolve,
    enumerate_independent_sets,
    independence_number,
    partition_polynomial,
    total_count,
)
from oracles import naive_ivector


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@pytest.mark.parametrize(
    "graph, expected",
    [
        (named_graph("petersen"), data.PETERSEN_VECTOR),
        (named_graph("g14"), data.G14_VECTOR),
        (generalized_petersen(7, 2), data.GP72_VECTOR),
        (named_graph("dodecahedron"), data.DODECAHEDRON_VECTOR),
        (Graph(1), (1, 1)),
    ],
)
def test_published_vectors(graph, expected):
    assert tuple(enumerate_independent_sets(graph)) == expected


def test_totals():
    assert total_count(enumerate_independent_sets(named_graph("g22"))) == 6447
    assert total_count(enumerate_independent_sets(named_graph("robertson"))) == 1950
    assert total_count((1, 1)) == 2
    assert total_count(data.PETERSEN_VECTOR) == 76


def test_independence_number():
    assert independence_number(data.PETERSEN_VECTOR) == 4
    assert independence_number(data.DODECAHEDRON_VECTOR) == 8
    assert independence_number((1, 1)) == 1


def test_partition_polynomial():
    assert partition_polynomial(data.PETERSEN_VECTOR) == IntPolynomial([1, 10, 30, 30, 5])
    assert partition_polynomial((1, 1)) == IntPolynomial([1, 1])
    assert partition_polynomial(naive_ivector(cycle(5))) == IntPolynomial([1, 5, 5])


def test_loops_rejected():
    with pytest.raises(ValueError):
        enumerate_independent_sets(Graph(1, [(0, 0)], allows_loops=True))


def test_text_roundtrip():
    v = MultiplicityVector([1, 10, 30, 30, 5])
    assert v.to_text() == "1,10,30,30,5"
    assert MultiplicityVector.from_text("1, 10,30,30,5") == v


def test_against_naive_oracle_up_to_15():
    rng = random.Random(2)
    for n in list(range(1, 16)) + [15] * 10:
        p = rng.random()
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        assert list(enumerate_independent_sets(g)) == naive_ivector(g)
    for name in ("petersen", "g14", "heawood", "cyc13"):
        g = named_graph(name)
        assert list(enumerate_independent_sets(g)) == naive_ivector(g)


def test_pairs_count_exhaustive_small():
    for n in range(2, 8):
        pairs = list(combinations(range(n), 2))
        step = max(1, (1 << len(pairs)) // 400)
        for mask in range(0, 1 << len(pairs), step):
            g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            v = enumerate_independent_sets(g)
            assert v[0] == 1 and v[1] == n
            assert (v[2] if len(v) > 2 else 0) == comb(n, 2) - g.num_edges


@settings(max_examples=150, deadline=None)
@given(small_graphs(), small_graphs())
def test_disjoint_union_convolves(g, h):
    u = g.disjoint_union(h)
    vu = enumerate_independent_sets(u)
    assert vu == convolve(enumerate_independent_sets(g), enumerate_independent_sets(h))
    assert partition_polynomial(vu) == partition_polynomial(enumerate_independent_sets(g)) * partition_polynomial(
        enumerate_independent_sets(h)
    )


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=12))
def test_vector_shape(g):
    v = enumerate_independent_sets(g)
    assert v[0] == 1 and v[1] == g.n and v[-1] > 0
