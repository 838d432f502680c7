"""Immutable simple graphs, orientations, induced subgraphs and degeneracy."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a graph, orientation or vertex set is malformed."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Use
    :meth:`from_edges` to build one; the constructor validates symmetry.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _nbr_sets: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match n")
        sets = []
        for v, nbrs in enumerate(self.adjacency):
            s = frozenset(nbrs)
            if len(s) != len(nbrs) or list(nbrs) != sorted(s):
                raise GraphError(f"adjacency of {v} is not a sorted set")
            if v in s:
                raise GraphError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {u} out of range 0..{self.n - 1}")
            sets.append(s)
        for v, s in enumerate(sets):
            for u in s:
                if v not in sets[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_nbr_sets", tuple(sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting self-loops, parallel edges and bad indices."""
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class Orientation:
    """A graph together with one direction per edge."""

    base: Graph
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if len(self.arcs) != self.base.m:
            raise GraphError("arc count does not match edge count of the base graph")
        for u, v in self.arcs:
            if not self.base.has_edge(u, v):
                raise GraphError(f"arc ({u}, {v}) is not an edge of the base graph")
            if (v, u) in self.arcs:
                raise GraphError(f"both directions present for edge {{{u}, {v}}}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        arcs = list(arcs)
        base = Graph.from_edges(n, arcs)
        return cls(base, frozenset(arcs))

    @property
    def n(self) -> int:
        return self.base.n

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


def check_vertex_set(n: int, vertices: Iterable[int]) -> tuple[int, ...]:
    """Return ``vertices`` as a sorted tuple, or raise if any is out of range or repeated."""
    members = sorted(vertices)
    for i, v in enumerate(members):
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range 0..{n - 1}")
        if i and members[i - 1] == v:
            raise GraphError(f"duplicate vertex {v}")
    return tuple(members)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep`` with the order-preserving relabelling map old -> new."""
    members = check_vertex_set(g.n, keep)
    index = {v: i for i, v in enumerate(members)}
    adjacency = tuple(
        tuple(index[u] for u in g.adjacency[v] if u in index) for v in members
    )
    return Graph(len(members), adjacency), index


def induced_orientation(
    o: Orientation, keep: Iterable[int]
) -> tuple[Orientation, dict[int, int]]:
    sub, index = induced_subgraph(o.base, keep)
    arcs = frozenset(
        (index[u], index[v]) for u, v in o.arcs if u in index and v in index
    )
    return Orientation(sub, arcs), index


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy and the min-degree deletion order (ties go to the lowest index).

    Every vertex has at most ``d`` neighbours that come after it in the
    returned order.
    """
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order: list[int] = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if removed[v] or dv != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        d = max(d, dv)
        for u in g.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return d, order


def subset_degeneracy(g: Graph, vertices: Sequence[int]) -> int:
    """Degeneracy of the subgraph induced by ``vertices`` without relabelling."""
    inside = set(vertices)
    deg = {v: sum(1 for u in g.adjacency[v] if u in inside) for v in inside}
    heap = [(dv, v) for v, dv in deg.items()]
    heapq.heapify(heap)
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if v not in inside or dv != deg[v]:
            continue
        inside.discard(v)
        d = max(d, dv)
        for u in g.adjacency[v]:
            if u in inside:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return d
