import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equiforest import generators as gen
from equiforest.graph import Graph, GraphError, Orientation, degeneracy, induced_subgraph

from conftest import brute_degeneracy, graphs, to_nx


def test_induced_subgraph_of_cycle_is_path():
    sub, index = induced_subgraph(gen.cycle(5), {1, 2, 3})
    assert index == {1: 0, 2: 1, 3: 2}
    assert sub.edges() == [(0, 1), (1, 2)]


def test_induced_subgraph_keep_all_is_identity():
    g = gen.stacked_triangulation(9, seed=3)
    sub, index = induced_subgraph(g, range(g.n))
    assert sub == g
    assert index == {v: v for v in range(g.n)}


def test_induced_subgraph_of_k4():
    sub, _ = induced_subgraph(gen.complete(4), [0, 1])
    assert sub.n == 2 and sub.edges() == [(0, 1)]


def test_induced_subgraph_rejects_out_of_range():
    with pytest.raises(GraphError):
        induced_subgraph(gen.path(3), [0, 3])


def test_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError):
        Graph(2, ((1,), ()))


def test_orientation_must_cover_edges_once():
    g = gen.path(3)
    with pytest.raises(GraphError):
        Orientation(g, frozenset({(0, 1)}))
    with pytest.raises(GraphError):
        Orientation(g, frozenset({(0, 1), (2, 1), (1, 0)}))


@pytest.mark.parametrize(
    "g, d",
    [(gen.path(6), 1), (gen.cycle(5), 2), (gen.complete(4), 3), (Graph.empty(0), 0), (gen.star(9), 1)],
)
def test_degeneracy_examples(g, d):
    assert degeneracy(g)[0] == d


def test_degeneracy_of_c5_matches_subset_enumeration():
    assert degeneracy(gen.cycle(5))[0] == brute_degeneracy(gen.cycle(5)) == 2


def test_degeneracy_ties_break_by_lowest_index():
    assert degeneracy(gen.cycle(5))[1] == [0, 1, 2, 3, 4]
    assert degeneracy(gen.path(4))[1] == [0, 1, 2, 3]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_degeneracy_matches_brute_force(g):
    assert degeneracy(g)[0] == brute_degeneracy(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=25))
def test_degeneracy_matches_networkx_core_number(g):
    cores = nx.core_number(to_nx(g)) if g.n else {}
    assert degeneracy(g)[0] == max(cores.values(), default=0)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=14))
def test_degeneracy_order_has_few_later_neighbors(g):
    d, order = degeneracy(g)
    assert sorted(order) == list(range(g.n))
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        assert sum(1 for u in g.neighbors(v) if position[u] > position[v]) <= d


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12), st.data())
def test_degeneracy_is_hereditary(g, data):
    keep = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    sub, _ = induced_subgraph(g, keep)
    assert degeneracy(sub)[0] <= degeneracy(g)[0]


def test_fan_and_star_shapes():
    f = gen.fan(4)
    assert (f.n, f.m, f.degree(4)) == (5, 7, 4)
    s = gen.star(9)
    assert (s.n, s.m, s.degree(0)) == (10, 9, 9)


@pytest.mark.parametrize("seed", range(20))
def test_random_d_degenerate_respects_d(seed):
    for d in (1, 2, 3):
        g = gen.random_d_degenerate(50, d, seed)
        assert degeneracy(g)[0] <= d
        assert g.m == sum(min(d, i) for i in range(50))


def test_generators_are_deterministic():
    assert gen.random_d_degenerate(60, 2, 7) == gen.random_d_degenerate(60, 2, 7)
    assert gen.stacked_triangulation(40, 7) == gen.stacked_triangulation(40, 7)
    assert gen.random_d_degenerate(60, 2, 7) != gen.random_d_degenerate(60, 2, 8)


@pytest.mark.parametrize("seed", range(10))
def test_stacked_triangulation_is_planar_triangulation(seed):
    g = gen.stacked_triangulation(30, seed)
    assert g.m == 3 * g.n - 6
    assert degeneracy(g)[0] == 3
    assert nx.check_planarity(to_nx(g))[0]


def test_random_orientation_covers_every_edge():
    g = gen.random_d_degenerate(30, 3, 1)
    o = gen.random_orientation(g, 5)
    assert len(o.arcs) == g.m
    assert all(g.has_edge(u, v) for u, v in o.arcs)


def test_generate_rejects_bad_parameters():
    with pytest.raises(GraphError):
        gen.generate("cycle", 2)
    with pytest.raises(GraphError):
        gen.generate("random_d_degenerate", 10)
    with pytest.raises(GraphError):
        gen.generate("petersen", 10)
    assert gen.generate("path", 0) == Graph.empty(0)
