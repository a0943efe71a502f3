"""Connected-graph corpus and canonical forms."""
import random

import networkx as nx
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from models.errors import ResourceGuardError
from models.graph import SimpleGraph
from services.corpus_service import canonical_form, canonical_graph, enumerate_connected_graphs, is_isomorphic
from utils.gadgets import bowtie, cycle_graph, path_graph

# OEIS A001349
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def test_counts_up_to_five(corpus5):
    assert corpus5.counts_by_n() == {n: CONNECTED_COUNTS[n] for n in range(1, 6)}
    assert len(enumerate_connected_graphs(4)) == 10


@pytest.mark.slow
def test_counts_up_to_six(corpus6):
    assert corpus6.counts_by_n() == CONNECTED_COUNTS
    assert len(corpus6) == 143


def test_corpus_graphs_are_connected_and_pairwise_non_isomorphic(corpus5):
    graphs = list(corpus5)
    assert all(g.is_connected() for g in graphs)
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            if a.n == b.n and a.num_edges == b.num_edges:
                assert not nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_corpus_order_is_by_vertices_then_edges(corpus5):
    keys = [(g.n, g.num_edges) for g in corpus5]
    assert keys == sorted(keys)


def test_enumeration_is_deterministic():
    first = [g.to_literal() for g in enumerate_connected_graphs(5)]
    second = [g.to_literal() for g in enumerate_connected_graphs(5)]
    assert first == second


@pytest.mark.parametrize("max_n", [0, 9])
def test_guard(max_n):
    with pytest.raises(ResourceGuardError) as info:
        enumerate_connected_graphs(max_n)
    assert info.value.limit == 8


def test_canonical_form_ignores_labels():
    g = cycle_graph(5)
    shuffled = g.relabel({1: 3, 2: 5, 3: 1, 4: 2, 5: 4})
    assert canonical_form(g)[0] == canonical_form(shuffled)[0]
    assert canonical_graph(g)[1].edges == canonical_graph(shuffled)[1].edges


def test_is_isomorphic():
    assert is_isomorphic(path_graph(4), SimpleGraph(4, ((2, 1), (1, 4), (4, 3))))
    assert not is_isomorphic(path_graph(4), SimpleGraph(4, ((1, 2), (1, 3), (1, 4))))
    assert not is_isomorphic(bowtie(), cycle_graph(5))


@st.composite
def graph_and_permutation(draw):
    n = draw(st.integers(min_value=2, max_value=6))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    perm = draw(st.permutations(list(range(1, n + 1))))
    return SimpleGraph(n, tuple(edges)), dict(zip(range(1, n + 1), perm))


@given(graph_and_permutation())
@settings(max_examples=60, deadline=None)
def test_canonical_form_is_invariant(case):
    g, mapping = case
    assert canonical_form(g)[0] == canonical_form(g.relabel(mapping))[0]


@given(st.integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_canonical_form_agrees_with_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 6)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    a = SimpleGraph(n, tuple(rng.sample(pairs, rng.randint(1, len(pairs)))))
    b = SimpleGraph(n, tuple(rng.sample(pairs, a.num_edges)))
    expected = nx.is_isomorphic(a.to_networkx(), b.to_networkx())
    assert is_isomorphic(a, b) == expected
