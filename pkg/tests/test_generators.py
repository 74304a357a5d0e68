from math import comb

import pytest

from diskcover.generators import (clique_pendant_graph, random_graph,
                                  random_graph_corpus, random_hypergraph)


def test_random_hypergraph_deterministic():
    a = random_hypergraph(12, 0.3, seed=7)
    b = random_hypergraph(12, 0.3, seed=7)
    assert a.edges == b.edges
    c = random_hypergraph(12, 0.3, seed=8)
    assert a.edges != c.edges


def test_random_hypergraph_nested_in_p():
    """At a fixed seed the edge sets grow monotonically with p."""
    low = set(random_hypergraph(14, 0.2, seed=3).edges)
    mid = set(random_hypergraph(14, 0.5, seed=3).edges)
    high = set(random_hypergraph(14, 0.8, seed=3).edges)
    assert low <= mid <= high
    assert len(low) < len(high)


def test_random_hypergraph_extremes():
    empty = random_hypergraph(10, 0.0, seed=1)
    assert len(empty.edges) == 0
    full = random_hypergraph(10, 1.0, seed=1)
    assert len(full.edges) == comb(10, 3)


def test_random_hypergraph_validation():
    with pytest.raises(ValueError):
        random_hypergraph(10, -0.1, seed=0)
    with pytest.raises(ValueError):
        random_hypergraph(10, 1.5, seed=0)


def test_random_graph_basic():
    G = random_graph(20, 0.4, seed=11)
    assert G.n == 20
    assert G.edges == random_graph(20, 0.4, seed=11).edges
    assert set(random_graph(20, 0.1, seed=11).edges) <= set(G.edges)
    assert len(random_graph(8, 1.0, seed=0).edges) == comb(8, 2)


def test_clique_pendant_structure():
    G = clique_pendant_graph(16)
    assert G.n == 16
    # K_4 on {0..3} plus 12 pendants on vertex 0
    assert len(G.edges) == comb(4, 2) + 12
    assert G.degree(0) == 3 + 12
    for v in (1, 2, 3):
        assert G.degree(v) == 3
    for v in range(4, 16):
        assert G.degree(v) == 1
        assert G.has_edge(0, v)


def test_clique_pendant_degenerate_and_invalid():
    G = clique_pendant_graph(4)  # s = 2: a single edge plus two pendants
    assert G.n == 4
    assert len(G.edges) == comb(2, 2) + 2
    with pytest.raises(ValueError):
        clique_pendant_graph(15)
    with pytest.raises(ValueError):
        clique_pendant_graph(1)


def test_corpus_shape_and_determinism():
    items = list(random_graph_corpus(12, seed=9))
    assert len(items) == 12
    ids = [gid for gid, _ in items]
    assert ids[0].startswith("gnp-0000-n")
    assert len(set(ids)) == 12
    for gid, G in items:
        n = int(gid.rsplit("n", 1)[1])
        assert G.n == n
        assert 10 <= n <= 200
    again = list(random_graph_corpus(12, seed=9))
    assert [g.edges for _, g in items] == [g.edges for _, g in again]
