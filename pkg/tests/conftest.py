import itertools
import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from equiforest.graph import Graph, Orientation


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_is_forest(g: Graph, s) -> bool:
    """Independent forest check through networkx."""
    s = list(s)
    if not s:
        return True
    return nx.is_forest(to_nx(g).subgraph(s))


def brute_degeneracy(g: Graph) -> int:
    """max over all nonempty vertex subsets of the minimum induced degree."""
    best = 0
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            inside = set(sub)
            best = max(best, min(sum(1 for u in g.neighbors(v) if u in inside) for v in sub))
    return best


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


@st.composite
def graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def orientations(draw, max_n=8):
    g = draw(graphs(max_n=max_n))
    flips = draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    arcs = [(u, v) if f else (v, u) for (u, v), f in zip(g.edges(), flips)]
    return Orientation(g, frozenset(arcs))


@pytest.fixture
def rng():
    return random.Random(20131017)
