"""Deterministic graph families used by tests, the CLI and benchmarks."""

from __future__ import annotations

import random

from .graph import Graph, GraphError, Orientation


def _check_n(n: int, minimum: int = 0) -> None:
    if not isinstance(n, int) or n < minimum:
        raise GraphError(f"n must be an integer >= {minimum}, got {n!r}")


def path(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check_n(n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 joined to leaves 1..n."""
    _check_n(n)
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def fan(n: int) -> Graph:
    """Path on 0..n-1 plus a universal vertex n."""
    _check_n(n)
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges)


def random_d_degenerate(n: int, d: int, seed: int = 0) -> Graph:
    """Vertex i joins min(d, i) distinct earlier vertices chosen uniformly."""
    _check_n(n)
    if not isinstance(d, int) or d < 1:
        raise GraphError(f"d must be an integer >= 1, got {d!r}")
    rng = random.Random(seed)
    edges = []
    for i in range(1, n):
        for j in rng.sample(range(i), min(d, i)):
            edges.append((j, i))
    return Graph.from_edges(n, edges)


def stacked_triangulation(n: int, seed: int = 0) -> Graph:
    """Planar 3-tree: start from a triangle, insert each new vertex into a random face."""
    _check_n(n, 3)
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    # the starting triangle bounds two faces, inner and outer
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        edges += [(a, v), (b, v), (c, v)]
        faces[i] = (a, b, v)
        faces += [(a, v, c), (v, b, c)]
    return Graph.from_edges(n, edges)


def random_gnp(n: int, p: float, seed: int = 0) -> Graph:
    _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p must lie in [0, 1], got {p!r}")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_orientation(g: Graph, seed: int = 0) -> Orientation:
    rng = random.Random(seed)
    arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges()]
    return Orientation(g, frozenset(arcs))


FAMILIES = (
    "path",
    "cycle",
    "star",
    "complete",
    "fan",
    "random_d_degenerate",
    "stacked_triangulation",
    "random_gnp",
)


def generate(
    family: str,
    n: int,
    d: int | None = None,
    seed: int = 0,
    p: float | None = None,
    oriented: bool = False,
) -> Graph | Orientation:
    """Build a member of ``family``; with ``oriented`` the result is randomly oriented."""
    if family == "path":
        g = path(n)
    elif family == "cycle":
        g = cycle(n)
    elif family == "star":
        g = star(n)
    elif family == "complete":
        g = complete(n)
    elif family == "fan":
        g = fan(n)
    elif family == "random_d_degenerate":
        if d is None:
            raise GraphError("random_d_degenerate needs d")
        g = random_d_degenerate(n, d, seed)
    elif family == "stacked_triangulation":
        g = stacked_triangulation(n, seed)
    elif family == "random_gnp":
        g = random_gnp(n, 0.3 if p is None else p, seed)
    else:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return random_orientation(g, seed) if oriented else g
