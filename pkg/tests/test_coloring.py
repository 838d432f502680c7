import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equiforest import generators as gen
from equiforest.coloring import (
    Coloring,
    exact_chromatic,
    exact_coloring,
    exact_oriented_star_coloring,
    greedy_acyclic,
    greedy_star,
    verify_acyclic,
    verify_oriented_consistent,
    verify_proper,
    verify_star,
)
from equiforest.errors import BudgetExceeded, CapExceeded, InvalidColoring
from equiforest.graph import Graph, Orientation, induced_subgraph

from conftest import graphs, nx_is_forest, orientations


def pair_forests(g, c):
    return all(nx_is_forest(g, a + b) for a, b in itertools.combinations(c.classes, 2))


def no_bicolored_p4(g, colors):
    for a, b, c, d in itertools.permutations(range(g.n), 4):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d):
            if colors[a] == colors[c] and colors[b] == colors[d]:
                return False
    return True


def enumerate_min_colors(g, accept):
    """Smallest k for which some assignment in range(k)**n passes ``accept``."""
    for k in range(0 if g.n == 0 else 1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if accept(colors):
                return k
    return 0


def proper(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges())


def test_verify_proper_examples():
    c5 = gen.cycle(5)
    assert verify_proper(c5, Coloring(((0, 2), (1, 3), (4,))))
    verdict = verify_proper(gen.path(2), Coloring(((0, 1),)))
    assert not verdict and verdict.violations[0].witness == (0, 1)
    assert verify_proper(Graph.empty(0), Coloring(()))


def test_coloring_must_partition():
    with pytest.raises(InvalidColoring):
        verify_proper(gen.path(3), Coloring(((0, 1),)))
    with pytest.raises(InvalidColoring):
        verify_proper(gen.path(3), Coloring(((0, 1), (1, 2))))
    with pytest.raises(InvalidColoring):
        verify_proper(gen.path(3), Coloring(((0, 1, 2, 3),)))


def test_verify_acyclic_examples():
    c4 = gen.cycle(4)
    verdict = verify_acyclic(c4, Coloring(((0, 2), (1, 3))))
    assert not verdict
    assert sorted(verdict.violations[0].witness) == [0, 1, 2, 3]
    c5 = Coloring(((0, 2), (1, 3), (4,)))
    assert verify_acyclic(gen.cycle(5), c5)
    assert pair_forests(gen.cycle(5), c5)
    tree = gen.random_d_degenerate(15, 1, 3)
    for k in (2, 3, 4):
        assert verify_acyclic(tree, exact_coloring(tree, "proper", k))


def test_verify_star_examples():
    verdict = verify_star(gen.path(4), Coloring(((0, 2), (1, 3))))
    assert not verdict and verdict.violations[0].witness == (0, 1, 2, 3)
    assert verify_star(gen.star(5), Coloring(((0,), (1, 2, 3, 4, 5))))
    # C5 with {0,2},{1,4},{3}: pair {0,2}+{1,4} induces the path 4-0-1-2, a P4
    c5 = Coloring(((0, 2), (1, 4), (3,)))
    assert no_bicolored_p4(gen.cycle(5), c5.assignment(5)) is False
    assert not verify_star(gen.cycle(5), c5)


def test_verify_oriented_consistent_examples():
    path = Orientation.from_arcs(3, [(0, 1), (1, 2)])
    verdict = verify_oriented_consistent(path, Coloring(((0, 2), (1,))))
    assert not verdict
    assert set(verdict.violations[0].witness) == {(0, 1), (1, 2)}
    assert verify_oriented_consistent(path, Coloring(((0,), (1,), (2,))))
    assert verify_oriented_consistent(Orientation.from_arcs(2, [(1, 0)]), Coloring(((0,), (1,))))


def test_exact_coloring_examples():
    c5 = gen.cycle(5)
    c = exact_coloring(c5, "acyclic", 3)
    assert c is not None and c.k == 3 and verify_acyclic(c5, c)
    assert exact_coloring(c5, "acyclic", 2) is None
    k4 = exact_coloring(gen.complete(4), "acyclic", 4)
    assert sorted(k4.classes) == [(0,), (1,), (2,), (3,)]
    assert exact_coloring(gen.complete(4), "acyclic", 3) is None
    forest = gen.random_d_degenerate(12, 1, 5)
    assert exact_coloring(forest, "acyclic", 2) is not None


def test_exact_coloring_cap_and_budget():
    with pytest.raises(CapExceeded):
        exact_coloring(gen.path(21), "acyclic", 2)
    assert exact_coloring(gen.path(21), "acyclic", 2, cap=30) is not None
    with pytest.raises(BudgetExceeded):
        exact_coloring(gen.random_gnp(20, 0.5, 3), "acyclic", 7, node_budget=50)
    with pytest.raises(ValueError):
        exact_coloring(gen.path(3), "oriented-consistent", 3)


def test_exact_coloring_env_cap(monkeypatch):
    monkeypatch.setenv("EQUIFOREST_EXACT_CAP", "5")
    with pytest.raises(CapExceeded):
        exact_coloring(gen.path(6), "proper", 2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_chromatic_numbers_match_enumeration(g):
    chi, _ = exact_chromatic(g, "proper")
    assert chi == enumerate_min_colors(g, lambda c: proper(g, c))
    chi_a, c = exact_chromatic(g, "acyclic")
    assert chi_a == enumerate_min_colors(
        g, lambda col: proper(g, col) and pair_forests(g, Coloring.from_assignment(col))
    )
    assert pair_forests(g, c)
    chi_s, c = exact_chromatic(g, "star")
    assert chi_s == enumerate_min_colors(g, lambda col: proper(g, col) and no_bicolored_p4(g, col))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), st.data())
def test_acyclic_verifier_equals_pairwise_forests(g, data):
    colors = [data.draw(st.integers(0, 3)) for _ in range(g.n)]
    c = Coloring.from_assignment(colors, 4)
    if verify_proper(g, c):
        assert bool(verify_acyclic(g, c)) == pair_forests(g, c)
        assert bool(verify_star(g, c)) == no_bicolored_p4(g, colors)
        if verify_star(g, c):
            assert verify_acyclic(g, c)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9), st.sampled_from(["proper", "acyclic", "star"]))
def test_exact_coloring_is_monotone(g, kind):
    chi, _ = exact_chromatic(g, kind)
    if chi > 1:
        assert exact_coloring(g, kind, chi - 1) is None
    for k in (chi, chi + 1, chi + 2):
        c = exact_coloring(g, kind, k)
        assert c is not None and c.k == k


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10), st.data())
def test_restriction_keeps_kind(g, data):
    keep = data.draw(st.sets(st.integers(0, g.n - 1))) if g.n else set()
    sub, index = induced_subgraph(g, keep)
    for kind, verifier in (("acyclic", verify_acyclic), ("star", verify_star)):
        _, c = exact_chromatic(g, kind)
        restricted = c.restrict(index)
        assert restricted.k == c.k
        assert verifier(sub, restricted)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=25))
def test_greedy_colorings_verify(g):
    assert verify_acyclic(g, greedy_acyclic(g))
    assert verify_star(g, greedy_star(g))


def test_greedy_examples():
    assert greedy_acyclic(Graph.empty(0)).k == 0
    assert greedy_acyclic(gen.cycle(5)).k <= 3
    tree = gen.random_d_degenerate(40, 1, 2)
    assert greedy_acyclic(tree).k <= 2
    assert greedy_acyclic(Graph.empty(4)).k == 1


@settings(max_examples=60, deadline=None)
@given(orientations(max_n=7))
def test_oriented_star_search(o):
    k, c = exact_chromatic(o, "oriented-star")
    assert verify_star(o.base, c) and verify_oriented_consistent(o, c)
    if k > 1:
        assert exact_oriented_star_coloring(o, k - 1) is None


def test_oriented_star_search_matches_enumeration():
    for seed in range(15):
        o = gen.random_orientation(gen.random_d_degenerate(6, 2, seed), seed)

        def ok(col):
            c = Coloring.from_assignment(col)
            return proper(o.base, col) and no_bicolored_p4(o.base, col) and bool(
                verify_oriented_consistent(o, c)
            )

        assert exact_chromatic(o, "oriented-star")[0] == enumerate_min_colors(o.base, ok)


def test_coloring_json_round_trip():
    c = Coloring(((0, 2), (), (1,)), "acyclic")
    assert Coloring.from_json(c.to_json()) == c
