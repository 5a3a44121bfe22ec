import pytest
from hypothesis import given

from conftest import colored_graphs
from rainbowtri.generators import example2, proper_complete_bipartite, rainbow_complete, rainbow_turan
from rainbowtri.graph import (
    EdgeColoredGraph,
    GraphError,
    build_graph,
    is_proper_balanced_complete_bipartite,
    min_color_degree,
    mono_order,
    sigma2c,
    vertex_profile,
)


def test_build_rainbow_triangle():
    g = build_graph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
    assert g.edges == ((0, 1, 0), (0, 2, 2), (1, 2, 1))
    assert g.colors == {0, 1, 2}


def test_build_normalizes_orientation():
    g = build_graph(3, [(2, 0, 4)])
    assert g.edges == ((0, 2, 4),)
    assert g.color(2, 0) == g.color(0, 2) == 4


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, [(0, 1, 0), (1, 0, 1)]),
        (3, [(0, 1, 0), (0, 1, 0)]),
        (2, [(0, 0, 1)]),
        (2, [(0, 2, 1)]),
        (2, [(-1, 1, 0)]),
        (2, [(0, 1, -3)]),
    ],
)
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_shared_color_matching():
    g = build_graph(4, [(0, 1, 5), (2, 3, 5)])
    assert g.colors == {5}
    assert all(g.degree(v) == 1 for v in range(4))


def test_profile_rainbow_k4(rainbow_k4):
    for v in range(4):
        p = vertex_profile(rainbow_k4, v)
        assert (p.degree, p.color_degree, p.mono_degree) == (3, 3, 1)


def test_profile_mono_star(mono_star3):
    p = vertex_profile(mono_star3, 0)
    assert (p.degree, p.color_degree, p.mono_degree) == (3, 1, 3)
    assert p.class_sizes == {7: 3}
    assert p.color_neighborhood == {7}


def test_profile_example2():
    g = example2(8)
    for v in range(8):
        p = vertex_profile(g, v)
        assert (p.degree, p.color_degree, p.mono_degree) == (5, 5, 1)


def test_profile_out_of_range(rainbow_k4):
    with pytest.raises(GraphError):
        vertex_profile(rainbow_k4, 4)


def test_isolated_vertex_profile():
    g = build_graph(3, [(0, 1, 0)])
    p = vertex_profile(g, 2)
    assert (p.degree, p.color_degree, p.mono_degree) == (0, 0, 0)
    assert min_color_degree(g) == 0


def test_min_color_degree_examples():
    assert min_color_degree(rainbow_complete(5)) == 4
    assert min_color_degree(proper_complete_bipartite(4)) == 4
    assert min_color_degree(rainbow_turan(9, 3)) == 6


def test_sigma2c(rainbow_k4):
    assert sigma2c(rainbow_k4) == 6
    assert sigma2c(build_graph(5, [])) is None
    assert sigma2c(example2(8)) == 10


def test_mono_order(rainbow_k4, mono_star3):
    assert mono_order(rainbow_k4) == [0, 1, 2, 3]
    assert mono_order(mono_star3)[0] == 0
    # mono degrees v0:2, v1:3, v2:2 (v3, v4 are leaves)
    g = build_graph(6, [(1, 0, 0), (1, 2, 0), (1, 3, 0), (0, 4, 1), (0, 5, 1), (2, 4, 2), (2, 5, 2)])
    assert [g.mono_degree(v) for v in range(3)] == [2, 3, 2]
    assert mono_order(g)[:3] == [1, 0, 2]


def test_exceptional_bipartite_recognized():
    assert is_proper_balanced_complete_bipartite(proper_complete_bipartite(4))
    assert not is_proper_balanced_complete_bipartite(rainbow_complete(4))
    # K_{2,2} with a repeated color at a vertex is not proper
    g = build_graph(4, [(0, 2, 0), (0, 3, 0), (1, 2, 1), (1, 3, 2)])
    assert not is_proper_balanced_complete_bipartite(g)
    # rainbow K_{2,2} is proper
    assert is_proper_balanced_complete_bipartite(build_graph(4, [(0, 2, 0), (0, 3, 1), (1, 2, 2), (1, 3, 3)]))


@given(colored_graphs())
def test_profile_invariants(g):
    for v in range(g.n):
        p = vertex_profile(g, v)
        assert p.color_degree == len(p.color_neighborhood) == len(p.class_sizes)
        assert sum(p.class_sizes.values()) == p.degree
        assert p.mono_degree == max(p.class_sizes.values(), default=0)
        assert p.color_degree <= p.degree
        if p.degree:
            assert 1 <= p.mono_degree <= p.degree - p.color_degree + 1
            assert p.mono_degree * p.color_degree >= p.degree


@given(colored_graphs())
def test_degree_sum_and_adjacency_consistency(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges
    index_entries = sorted((min(v, a), max(v, a), c) for v in range(g.n) for a, c in g.adj[v].items())
    assert index_entries == sorted(list(g.edges) * 2)


@given(colored_graphs(max_colors=100))
def test_rainbow_graphs_have_unit_mono_degree(g):
    rainbow = EdgeColoredGraph(g.n, [(u, v, i) for i, (u, v, _) in enumerate(g.edges)])
    for v in range(g.n):
        assert rainbow.color_degree(v) == rainbow.degree(v)
        assert rainbow.mono_degree(v) in (0, 1)


@given(colored_graphs())
def test_mono_order_is_sorted_permutation(g):
    order = mono_order(g)
    assert sorted(order) == list(range(g.n))
    monos = [g.mono_degree(v) for v in order]
    assert monos == sorted(monos, reverse=True)
