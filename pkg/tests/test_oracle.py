import random

import pytest

from equiforest import generators as gen
from equiforest.certify import Partition, verify_partition
from equiforest.coloring import Coloring
from equiforest.errors import BudgetExceeded, CapExceeded
from equiforest.graph import Graph
from equiforest.merge import merge_partition
from equiforest.oracle import brute_force_equitable, cross_validate


def _relabel(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_star_into_stable_sets_is_unsat():
    # the centre's part has at most one vertex, the leaves fill the rest
    assert brute_force_equitable(gen.star(9), 3, "stable_set") is None


def test_fan_into_linear_forests_is_unsat():
    assert brute_force_equitable(gen.fan(12), 3, "linear_forest") is None


def test_c5_into_two_forests():
    p = brute_force_equitable(gen.cycle(5), 2, "forest")
    assert sorted(p.sizes) == [2, 3]
    assert verify_partition(gen.cycle(5), p)
    assert brute_force_equitable(gen.cycle(5), 1, "forest") is None


@pytest.mark.parametrize("seed", range(6))
def test_sat_results_are_certified(seed):
    g = gen.random_gnp(10, 0.4, seed)
    for kind in ("forest", "star_forest", "linear_forest", "stable_set"):
        p = brute_force_equitable(g, 4, kind)
        if p is not None:
            assert p.k == 4 and p.part_kind == kind
            assert verify_partition(g, p)


@pytest.mark.parametrize("seed", range(4))
def test_unsat_survives_relabelling(seed):
    assert brute_force_equitable(_relabel(gen.star(9), seed), 3, "stable_set") is None
    assert brute_force_equitable(_relabel(gen.complete(5), seed), 2, "forest") is None


def test_in_out_star_kind():
    o = gen.random_orientation(gen.random_d_degenerate(8, 2, 2), 2)
    p = brute_force_equitable(o, 4, "in_out_star_forest")
    assert p is not None and verify_partition(o, p)


def test_cap_and_budget():
    with pytest.raises(CapExceeded):
        brute_force_equitable(gen.path(15), 2, "forest")
    assert brute_force_equitable(gen.path(15), 2, "forest", cap=20) is not None
    with pytest.raises(BudgetExceeded):
        brute_force_equitable(gen.fan(12), 3, "linear_forest", node_budget=100)
    with pytest.raises(ValueError):
        brute_force_equitable(gen.path(3), 0, "forest")


def test_cross_validate_confirms_merge_output():
    c5 = gen.cycle(5)
    p = merge_partition(c5, Coloring(((4,), (0, 2), (1, 3)), "acyclic"))
    result = cross_validate(c5, p)
    assert result.ok and result.existence == "confirmed"
    assert result.to_dict()["discrepancies"] == []


def test_cross_validate_rejects_corruption():
    result = cross_validate(gen.cycle(5), Partition(((0, 1, 2, 3, 4), ()), "forest"))
    assert not result.ok
    predicates = {v.predicate for v in result.certified.violations}
    assert {"forest", "equitable"} <= predicates


def test_cross_validate_skips_large_graphs():
    g = gen.path(30)
    p = Partition((tuple(range(15)), tuple(range(15, 30))), "forest")
    result = cross_validate(g, p)
    assert result.ok and result.existence == "skipped"


def test_cross_validate_reports_contradiction():
    # a hand-made "forest" partition of K5 into two parts cannot exist
    result = cross_validate(gen.complete(5), Partition(((0, 1, 2), (3, 4)), "forest"))
    assert result.existence == "contradicted" and not result.ok
