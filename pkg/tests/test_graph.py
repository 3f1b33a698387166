import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from bowtie_spectra.graph import (
    Graph,
    Graph6CharacterError,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6OrderError,
    GraphError,
    degree_stats,
    from_graph6,
    is_connected,
    to_graph6,
)
from bowtie_spectra import families as fam

from oracles import random_graph, to_nx


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def test_k5_decodes():
    g = from_graph6("D~{")
    assert (g.n, g.m) == (5, 10)
    assert nx.is_isomorphic(to_nx(g), nx.complete_graph(5))


def test_single_edge_and_single_vertex():
    k2 = from_graph6("A_")
    assert (k2.n, k2.m) == (2, 1)
    assert to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
    one = from_graph6("@")
    assert (one.n, one.m) == (1, 0)
    assert to_graph6(Graph.empty(1)) == "@"


def test_decoder_agrees_with_networkx(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randrange(1, 30), rng.random())
        s = to_graph6(g)
        h = nx.from_graph6_bytes(s.encode())
        assert sorted(map(sorted, h.edges())) == sorted(map(list, g.edges()))
        assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == s


def test_roundtrip_thousand_random(rng):
    for _ in range(1000):
        g = random_graph(rng, rng.randrange(0, 21), rng.random())
        assert from_graph6(to_graph6(g)) == g


@given(graphs())
def test_roundtrip_property(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs())
def test_invariants_hold(g):
    for i, row in enumerate(g.adj):
        assert not row >> i & 1
        for j in range(g.n):
            assert (row >> j & 1) == (g.adj[j] >> i & 1)
    assert 2 * g.m == sum(r.bit_count() for r in g.adj)


def test_long_order_header():
    g = Graph.from_edges(70, [(0, 69), (3, 4)])
    s = to_graph6(g)
    assert s[0] == "~"
    assert from_graph6(s, cap=100) == g


@pytest.mark.parametrize(
    "text, err",
    [
        ("", Graph6HeaderError),
        (">>graph6<<A_", Graph6HeaderError),
        ("~?", Graph6HeaderError),
        ("A_ ", Graph6CharacterError),
        ("D~", Graph6LengthError),
        ("D~{?", Graph6LengthError),
        ("A`", Graph6LengthError),
    ],
)
def test_parse_errors(text, err):
    with pytest.raises(err):
        from_graph6(text)


def test_order_cap():
    s = to_graph6(Graph.empty(65))
    with pytest.raises(Graph6OrderError):
        from_graph6(s)
    assert from_graph6(s, cap=65).n == 65


def test_invalid_rows_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_connectivity():
    assert is_connected(fam.make_cycle(5))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(fam.make_star(3))
    with pytest.raises(GraphError):
        is_connected(Graph.empty(0))


def test_degree_stats():
    k4 = degree_stats(fam.make_complete(4))
    assert k4["degrees"] == [3, 3, 3, 3] and k4["isolated_count"] == 0
    star = degree_stats(fam.make_star(5))
    assert (star["max"], star["min"], star["isolated_count"]) == (5, 1, 0)
    k3_plus = degree_stats(Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)]))
    assert k3_plus["isolated_count"] == 1


def test_edit_helpers_preserve_invariants():
    g = fam.make_cycle(5)
    assert g.remove_edge(0, 1).m == 4
    assert g.add_edge(0, 2).m == 6
    assert g.add_vertex().n == 6
    d = g.delete_vertex(2)
    assert (d.n, d.m) == (4, 3)
    assert nx.is_isomorphic(to_nx(d), nx.path_graph(4))
    assert g.induced([0, 1, 2]).m == 2
    rng = random.Random(1)
    perm = list(range(5))
    rng.shuffle(perm)
    assert g.relabel(perm).m == 5
