"""Construction, validation, and the 1-intersection graph."""

import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercolor.core import (
    Hypergraph,
    VertexColoring,
    build_hypergraph,
    is_proper,
    one_intersection_graph,
    subhypergraph,
)
from hypercolor.errors import EdgeTooSmall, VertexOutOfRange

from helpers import naive_intersection_pairs

edge_sets = st.lists(
    st.frozensets(st.integers(0, 9), min_size=2, max_size=5),
    min_size=0,
    max_size=8,
    unique=True,
)


def test_build_sorts_vertices_within_edges():
    h = build_hypergraph(5, [(3, 1), (4, 0, 2)])
    assert h.edges == ((1, 3), (0, 2, 4))
    assert h.n == 5
    assert h.m == 2


def test_build_preserves_edge_order():
    h = build_hypergraph(4, [(2, 3), (0, 1), (1, 2)])
    assert h.edges == ((2, 3), (0, 1), (1, 2))


def test_build_rejects_small_edges():
    with pytest.raises(EdgeTooSmall):
        build_hypergraph(3, [(0,)])
    with pytest.raises(EdgeTooSmall):
        build_hypergraph(3, [(1, 1)])  # duplicates collapse below size 2


def test_build_rejects_out_of_range_vertices():
    with pytest.raises(VertexOutOfRange):
        build_hypergraph(3, [(0, 3)])
    with pytest.raises(VertexOutOfRange):
        build_hypergraph(2, [(-1, 0)])


def test_build_dedups_repeated_edges_with_warning():
    with pytest.warns(UserWarning, match="duplicate"):
        h = build_hypergraph(4, [(0, 1), (2, 3), (1, 0)])
    assert h.edges == ((0, 1), (2, 3))


def test_build_allows_isolated_vertices():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        h = build_hypergraph(6, [(0, 1)])
    assert h.n == 6


def test_incidence():
    h = build_hypergraph(4, [(0, 1), (1, 2), (1, 3)])
    assert h.incidence() == [[0], [0, 1, 2], [1], [2]]


def test_intersection_graph_triangle():
    # pairwise |e & f| = 1, so H^[1] is the complete graph K_3
    h = build_hypergraph(3, [(0, 1), (0, 2), (1, 2)])
    g = one_intersection_graph(h)
    assert g.m == 3
    assert g.edge_count == 3
    assert g.adjacent(0, 1) and g.adjacent(0, 2) and g.adjacent(1, 2)
    assert not g.adjacent(0, 0)


def test_intersection_graph_two_vertex_overlap_is_not_adjacent():
    h = build_hypergraph(4, [(0, 1, 2), (0, 1, 3)])
    g = one_intersection_graph(h)
    assert g.edge_count == 0


@settings(max_examples=200, deadline=None)
@given(edge_sets)
def test_intersection_graph_matches_naive(edges):
    edges = [tuple(sorted(e)) for e in edges]
    if len({frozenset(e) for e in edges}) != len(edges):
        edges = list({frozenset(e): tuple(sorted(e)) for e in edges}.values())
    h = build_hypergraph(10, edges)
    g = one_intersection_graph(h)
    got = {
        frozenset((i, j)) for i in range(g.m) for j in g.neighbors[i] if i < j
    }
    assert got == naive_intersection_pairs(h)
    # symmetry and irreflexivity
    for i in range(g.m):
        assert i not in g.neighbors[i]
        for j in g.neighbors[i]:
            assert i in g.neighbors[j]


def test_is_proper_reports_monochromatic_edges():
    h = build_hypergraph(4, [(0, 1), (2, 3)])
    ok, bad = is_proper(h, VertexColoring(colors=(0, 0, 0, 1)))
    assert not ok and bad == [0]
    ok, bad = is_proper(h, VertexColoring(colors=(0, 1, 0, 1)))
    assert ok and bad == []


def test_is_proper_rejects_wrong_length():
    h = build_hypergraph(3, [(0, 1)])
    with pytest.raises(ValueError):
        is_proper(h, VertexColoring(colors=(0, 1)))


def test_subhypergraph_keeps_vertex_ids_and_reindexes_edges():
    h = build_hypergraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    sub = subhypergraph(h, [1, 3])
    assert sub.n == 5
    assert sub.edges == ((1, 2), (3, 4))


def test_coloring_k_is_one_plus_max():
    assert VertexColoring(colors=(0, 2, 1)).k == 3
    assert VertexColoring(colors=()).k == 0


def test_hypergraph_is_hashable_and_frozen():
    h = build_hypergraph(3, [(0, 1)])
    assert hash(h) == hash(Hypergraph(n=3, edges=((0, 1),)))
    with pytest.raises(AttributeError):
        h.n = 4
