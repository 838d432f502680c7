"""Proper, acyclic, star and orientation-consistent colorings.

Verifiers return a :class:`~equiforest.certify.Verdict` with a witness on
rejection. ``exact_coloring`` is a backtracking solver for small graphs;
``greedy_acyclic`` and ``greedy_star`` always succeed but do not bound the
number of classes.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Sequence

from .certify import Verdict, find_cycle
from .config import COLORING_CAP, exact_cap
from .errors import BudgetExceeded, CapExceeded, InvalidColoring
from .graph import Graph, Orientation, degeneracy
from .unionfind import UnionFind

KINDS = ("proper", "acyclic", "star", "oriented-consistent")


@dataclass(frozen=True)
class Coloring:
    """Class index -> sorted members. Empty classes are allowed and count toward k."""

    classes: tuple[tuple[int, ...], ...]
    kind: str = "proper"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown coloring kind {self.kind!r}")
        object.__setattr__(self, "classes", tuple(tuple(sorted(c)) for c in self.classes))

    @classmethod
    def from_assignment(cls, colors: Sequence[int], k: int | None = None, kind: str = "proper") -> "Coloring":
        k = max(colors, default=-1) + 1 if k is None else k
        classes: list[list[int]] = [[] for _ in range(k)]
        for v, c in enumerate(colors):
            classes[c].append(v)
        return cls(tuple(tuple(c) for c in classes), kind)

    @property
    def k(self) -> int:
        return len(self.classes)

    def assignment(self, n: int) -> list[int]:
        """Vertex -> class list; raises if the classes do not partition 0..n-1."""
        colors = [-1] * n
        for i, members in enumerate(self.classes):
            for v in members:
                if not 0 <= v < n:
                    raise InvalidColoring(f"vertex {v} outside 0..{n - 1}")
                if colors[v] != -1:
                    raise InvalidColoring(f"vertex {v} in classes {colors[v]} and {i}")
                colors[v] = i
        missing = [v for v in range(n) if colors[v] == -1]
        if missing:
            raise InvalidColoring(f"vertices {missing[:10]} have no class")
        return colors

    def restrict(self, index: dict[int, int]) -> "Coloring":
        """Coloring of an induced subgraph given its old -> new map; keeps every class."""
        return Coloring(
            tuple(tuple(index[v] for v in c if v in index) for c in self.classes), self.kind
        )

    def with_kind(self, kind: str) -> "Coloring":
        return Coloring(self.classes, kind)

    def padded(self, k: int) -> "Coloring":
        if k < self.k:
            raise ValueError("cannot pad to fewer classes")
        return Coloring(self.classes + ((),) * (k - self.k), self.kind)

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "classes": [list(c) for c in self.classes]})

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        data = json.loads(text)
        return cls(tuple(tuple(int(v) for v in c) for c in data["classes"]), data["kind"])


def verify_proper(g: Graph, c: Coloring) -> Verdict:
    colors = c.assignment(g.n)
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return Verdict.reject("proper", f"edge inside class {colors[u]}", (u, v))
    return Verdict.accept()


def verify_acyclic(g: Graph, c: Coloring) -> Verdict:
    """Proper, and every pair of classes induces a forest."""
    verdict = verify_proper(g, c)
    if not verdict:
        return verdict
    colors = c.assignment(g.n)
    finders: dict[tuple[int, int], UnionFind] = defaultdict(UnionFind)
    for u, v in g.edges():
        pair = tuple(sorted((colors[u], colors[v])))
        uf = finders[pair]
        uf.add(u)
        uf.add(v)
        if not uf.union(u, v):
            cycle = find_cycle(g, c.classes[pair[0]] + c.classes[pair[1]])
            return Verdict.reject("acyclic", f"cycle using only classes {pair}", cycle)
    return Verdict.accept()


def _class_degrees(g: Graph, colors: list[int]) -> list[Counter]:
    return [Counter(colors[u] for u in g.neighbors(v)) for v in range(g.n)]


def verify_star(g: Graph, c: Coloring) -> Verdict:
    """Proper, and no path on four vertices uses only two classes."""
    verdict = verify_proper(g, c)
    if not verdict:
        return verdict
    colors = c.assignment(g.n)
    cdeg = _class_degrees(g, colors)
    for u, v in g.edges():
        # the edge is the middle of a bicolored P4 iff both ends have a second neighbour
        if cdeg[u][colors[v]] >= 2 and cdeg[v][colors[u]] >= 2:
            a = next(x for x in g.neighbors(u) if x != v and colors[x] == colors[v])
            b = next(x for x in g.neighbors(v) if x != u and colors[x] == colors[u])
            return Verdict.reject(
                "star", f"bicolored path on classes {colors[u]}, {colors[v]}", (a, u, v, b)
            )
    return Verdict.accept()


def verify_oriented_consistent(o: Orientation, c: Coloring) -> Verdict:
    """Proper on the base graph, and arcs between two classes all point the same way."""
    verdict = verify_proper(o.base, c)
    if not verdict:
        return verdict
    colors = c.assignment(o.n)
    first_arc: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v in o.sorted_arcs():
        key = (colors[u], colors[v])
        reverse = first_arc.get((key[1], key[0]))
        if reverse is not None:
            return Verdict.reject(
                "oriented-consistent",
                f"arcs run both ways between classes {key[0]} and {key[1]}",
                (reverse, (u, v)),
            )
        first_arc.setdefault(key, (u, v))
    return Verdict.accept()


VERIFIERS = {"proper": verify_proper, "acyclic": verify_acyclic, "star": verify_star}


def verify(g: Graph | Orientation, c: Coloring, kind: str | None = None) -> Verdict:
    """Dispatch on ``kind`` (defaults to the coloring's declared kind)."""
    kind = kind or c.kind
    if kind == "oriented-consistent":
        if not isinstance(g, Orientation):
            raise TypeError("oriented-consistent colorings need an orientation")
        return verify_oriented_consistent(g, c)
    base = g.base if isinstance(g, Orientation) else g
    return VERIFIERS[kind](base, c)


class _ColoringSearch:
    """Backtracking over vertices in descending-degree order.

    A vertex may only open class ``used`` (the next unused index), so class
    permutations are explored once. Classes are tried in increasing order,
    which makes the first solution the least one in search order.
    """

    def __init__(self, g: Graph, k: int, kind: str, orientation=None, node_budget=None):
        self.g = g
        self.k = k
        self.kind = kind
        self.orientation = orientation
        self.node_budget = node_budget
        self.nodes = 0
        self.colors = [-1] * g.n
        self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.arc_count: Counter = Counter()

    def run(self) -> list[int] | None:
        if self.g.n == 0:
            return []
        if self.k <= 0:
            return None
        return list(self.colors) if self._extend(0, 0) else None

    def _extend(self, depth: int, used: int) -> bool:
        if depth == len(self.order):
            return True
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise BudgetExceeded(f"coloring search exceeded {self.node_budget} nodes", self.nodes)
        v = self.order[depth]
        for c in range(min(used + 1, self.k)):
            if not self._fits(v, c):
                continue
            self.colors[v] = c
            if self._add_arcs(v):
                if self._extend(depth + 1, max(used, c + 1)):
                    return True
                self._remove_arcs(v)
            self.colors[v] = -1
        return False

    def _fits(self, v: int, c: int) -> bool:
        colors = self.colors
        g = self.g
        for u in g.neighbors(v):
            if colors[u] == c:
                return False
        if self.kind == "acyclic":
            return self._no_bicolored_cycle(v, c)
        if self.kind in ("star", "oriented-star"):
            return self._no_bicolored_p4(v, c)
        return True

    def _no_bicolored_cycle(self, v: int, c: int) -> bool:
        # v closes a bicolored cycle iff two of its neighbours of one color
        # already share a component of the (c, other) subgraph
        colors = self.colors
        g = self.g
        by_color: dict[int, list[int]] = defaultdict(list)
        for u in g.neighbors(v):
            if colors[u] >= 0:
                by_color[colors[u]].append(u)
        for other, targets in by_color.items():
            if len(targets) < 2:
                continue
            allowed = (c, other)
            targets_left = set(targets)
            while targets_left:
                start = targets_left.pop()
                seen = {start}
                stack = [start]
                while stack:
                    x = stack.pop()
                    for y in g.neighbors(x):
                        if y in seen or y == v or colors[y] not in allowed:
                            continue
                        if y in targets_left:
                            return False
                        seen.add(y)
                        stack.append(y)
        return True

    def _count(self, x: int, c: int, assume: tuple[int, int]) -> int:
        # neighbours of x with color c, treating vertex assume[0] as colored assume[1]
        colors = self.colors
        total = 0
        for y in self.g.neighbors(x):
            cy = assume[1] if y == assume[0] else colors[y]
            if cy == c:
                total += 1
        return total

    def _no_bicolored_p4(self, v: int, c: int) -> bool:
        colors = self.colors
        g = self.g
        assume = (v, c)
        for u in g.neighbors(v):
            cu = colors[u]
            if cu < 0:
                continue
            u_deg = self._count(u, c, assume)
            if u_deg >= 2 and self._count(v, cu, assume) >= 2:
                return False
            if u_deg >= 2:
                for w in g.neighbors(u):
                    if w != v and colors[w] == c and self._count(w, cu, assume) >= 2:
                        return False
        return True

    def _arc_key(self, v: int, u: int) -> tuple[int, int]:
        if self.orientation.has_arc(v, u):
            return (self.colors[v], self.colors[u])
        return (self.colors[u], self.colors[v])

    def _add_arcs(self, v: int) -> bool:
        if self.orientation is None:
            return True
        added = []
        for u in self.g.neighbors(v):
            if self.colors[u] < 0:
                continue
            key = self._arc_key(v, u)
            if self.arc_count[(key[1], key[0])]:
                for k in added:
                    self.arc_count[k] -= 1
                return False
            self.arc_count[key] += 1
            added.append(key)
        return True

    def _remove_arcs(self, v: int) -> None:
        if self.orientation is None:
            return
        for u in self.g.neighbors(v):
            if self.colors[u] >= 0:
                self.arc_count[self._arc_key(v, u)] -= 1


def _check_cap(n: int, cap: int | None) -> None:
    limit = exact_cap(COLORING_CAP) if cap is None else cap
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the exact coloring cap {limit}")


def exact_coloring(
    g: Graph, kind: str, k: int, cap: int | None = None, node_budget: int | None = None
) -> Coloring | None:
    """A ``kind`` coloring with exactly ``k`` declared classes, or None if none exists."""
    if kind not in VERIFIERS:
        raise ValueError(f"exact_coloring supports {sorted(VERIFIERS)}, not {kind!r}")
    _check_cap(g.n, cap)
    colors = _ColoringSearch(g, k, kind, node_budget=node_budget).run()
    if colors is None:
        return None
    coloring = Coloring.from_assignment(colors, k, kind)
    assert VERIFIERS[kind](g, coloring), "exact search produced an invalid coloring"
    return coloring


def exact_oriented_star_coloring(
    o: Orientation, k: int, cap: int | None = None, node_budget: int | None = None
) -> Coloring | None:
    """A star coloring of the base graph that is also orientation-consistent."""
    _check_cap(o.n, cap)
    colors = _ColoringSearch(o.base, k, "oriented-star", o, node_budget).run()
    if colors is None:
        return None
    coloring = Coloring.from_assignment(colors, k, "oriented-consistent")
    assert verify_star(o.base, coloring) and verify_oriented_consistent(o, coloring)
    return coloring


def exact_chromatic(g: Graph | Orientation, kind: str, cap: int | None = None) -> tuple[int, Coloring]:
    """Least k admitting a ``kind`` coloring, with a witness.

    ``kind="oriented-star"`` takes an orientation and searches consistent
    star colorings.
    """
    n = g.n
    for k in range(1 if n else 0, n + 1):
        if kind == "oriented-star":
            found = exact_oriented_star_coloring(g, k, cap)
        else:
            found = exact_coloring(g, kind, k, cap)
        if found is not None:
            return k, found
    raise AssertionError("n singleton classes always form a valid coloring")


def _greedy(g: Graph, kind: str) -> Coloring:
    search = _ColoringSearch(g, g.n, kind)
    _, deletion = degeneracy(g)
    used = 0
    for v in reversed(deletion):
        c = 0
        while c < used and not search._fits(v, c):
            c += 1
        search.colors[v] = c
        used = max(used, c + 1)
    return Coloring.from_assignment(search.colors, used, kind)


def greedy_acyclic(g: Graph) -> Coloring:
    """Acyclic coloring built in reverse degeneracy order, smallest feasible class first."""
    coloring = _greedy(g, "acyclic")
    assert verify_acyclic(g, coloring)
    return coloring


def greedy_star(g: Graph) -> Coloring:
    coloring = _greedy(g, "star")
    assert verify_star(g, coloring)
    return coloring


def require(verdict: Verdict, what: str) -> None:
    if not verdict:
        raise InvalidColoring(f"{what}: " + "; ".join(verdict.reasons), verdict)

