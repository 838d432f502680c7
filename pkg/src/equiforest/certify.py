"""Verification predicates for induced structures, partitions and certificates.

Every predicate returns a :class:`Verdict`; rejections carry a witness
(a cycle, a bad path, an offending edge...) so a caller can see *why*.
"""

from __future__ import annotations

import hashlib
import json
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from .formats import write_graph6
from .graph import Graph, GraphError, Orientation, check_vertex_set, subset_degeneracy
from .unionfind import UnionFind

PART_KINDS = ("forest", "star_forest", "in_out_star_forest", "linear_forest", "stable_set")
_DEGENERATE_KIND = re.compile(r"^(\d+)-degenerate$")

GraphLike = Union[Graph, Orientation]


@dataclass(frozen=True)
class Violation:
    predicate: str
    message: str
    witness: tuple = ()


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def accept(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def reject(cls, predicate: str, message: str, witness: Iterable = ()) -> "Verdict":
        return cls(False, (Violation(predicate, message, tuple(witness)),))

    @classmethod
    def combine(cls, verdicts: Iterable["Verdict"]) -> "Verdict":
        violations = tuple(v for verdict in verdicts for v in verdict.violations)
        return cls(not violations, violations)

    @property
    def reasons(self) -> list[str]:
        return [f"{v.predicate}: {v.message}" for v in self.violations]

    def to_dict(self) -> dict:
        return {
            "valid": self.ok,
            "violations": [
                {"predicate": v.predicate, "message": v.message, "witness": list(v.witness)}
                for v in self.violations
            ],
        }


def is_valid_kind(kind: str) -> bool:
    return kind in PART_KINDS or _DEGENERATE_KIND.match(kind) is not None


@dataclass(frozen=True)
class Partition:
    """Ordered vertex partition; each part is stored as a sorted tuple."""

    parts: tuple[tuple[int, ...], ...]
    part_kind: str

    def __post_init__(self) -> None:
        if not is_valid_kind(self.part_kind):
            raise ValueError(f"unknown part kind {self.part_kind!r}")
        object.__setattr__(self, "parts", tuple(tuple(sorted(p)) for p in self.parts))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def relabel(self, new_to_old: list[int] | dict[int, int]) -> "Partition":
        return Partition(
            tuple(tuple(new_to_old[v] for v in p) for p in self.parts), self.part_kind
        )


def _induced_adjacency(g: Graph, members: tuple[int, ...]) -> dict[int, list[int]]:
    inside = set(members)
    return {v: [u for u in g.neighbors(v) if u in inside] for v in members}


def _tree_path(adj: dict[int, list[int]], src: int, dst: int) -> list[int]:
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            break
        for y in adj.get(x, ()):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = []
    x = dst
    while x is not None:
        path.append(x)
        x = prev[x]
    return path[::-1]


def find_cycle(g: Graph, vertices: Iterable[int]) -> list[int] | None:
    """A cycle of the induced subgraph as a vertex list, or None if it is a forest."""
    members = check_vertex_set(g.n, vertices)
    inside = set(members)
    uf = UnionFind(members)
    forest: dict[int, list[int]] = {}
    for u in members:
        for v in g.neighbors(u):
            if v <= u or v not in inside:
                continue
            if not uf.union(u, v):
                return _tree_path(forest, u, v)
            forest.setdefault(u, []).append(v)
            forest.setdefault(v, []).append(u)
    return None


def is_forest(g: Graph, s: Iterable[int]) -> Verdict:
    cycle = find_cycle(g, s)
    if cycle is None:
        return Verdict.accept()
    return Verdict.reject("forest", f"induced cycle of length {len(cycle)}", cycle)


def is_star_forest(g: Graph, s: Iterable[int]) -> Verdict:
    members = check_vertex_set(g.n, s)
    verdict = is_forest(g, members)
    if not verdict:
        return Verdict.reject("star_forest", *_first(verdict))
    adj = _induced_adjacency(g, members)
    for u in members:
        if len(adj[u]) < 2:
            continue
        for v in adj[u]:
            if v > u and len(adj[v]) >= 2:
                a = next(x for x in adj[u] if x != v)
                b = next(x for x in adj[v] if x != u)
                return Verdict.reject(
                    "star_forest", "component with two vertices of degree >= 2", (a, u, v, b)
                )
    return Verdict.accept()


def is_linear_forest(g: Graph, s: Iterable[int]) -> Verdict:
    members = check_vertex_set(g.n, s)
    verdict = is_forest(g, members)
    if not verdict:
        return Verdict.reject("linear_forest", *_first(verdict))
    adj = _induced_adjacency(g, members)
    for v in members:
        if len(adj[v]) > 2:
            return Verdict.reject(
                "linear_forest", f"vertex {v} has induced degree {len(adj[v])}", [v] + adj[v][:3]
            )
    return Verdict.accept()


def is_stable_set(g: Graph, s: Iterable[int]) -> Verdict:
    members = check_vertex_set(g.n, s)
    inside = set(members)
    for u in members:
        for v in g.neighbors(u):
            if v in inside:
                return Verdict.reject("stable_set", "induced edge", (u, v))
    return Verdict.accept()


def is_degenerate(g: Graph, s: Iterable[int], d: int) -> Verdict:
    members = check_vertex_set(g.n, s)
    if subset_degeneracy(g, members) <= d:
        return Verdict.accept()
    core = set(members)
    changed = True
    while changed:
        changed = False
        for v in sorted(core):
            if sum(1 for u in g.neighbors(v) if u in core) <= d:
                core.discard(v)
                changed = True
    return Verdict.reject(
        f"{d}-degenerate", f"induced subgraph with minimum degree > {d}", sorted(core)
    )


def is_in_out_star_forest(o: Orientation, s: Iterable[int]) -> Verdict:
    members = check_vertex_set(o.n, s)
    verdict = is_star_forest(o.base, members)
    if not verdict:
        return Verdict.reject("in_out_star_forest", *_first(verdict))
    adj = _induced_adjacency(o.base, members)
    for c in members:
        if len(adj[c]) < 2:
            continue
        arcs = [(c, x) if o.has_arc(c, x) else (x, c) for x in adj[c]]
        outward = [a for a in arcs if a[0] == c]
        inward = [a for a in arcs if a[1] == c]
        if outward and inward:
            return Verdict.reject(
                "in_out_star_forest",
                f"star centred at {c} mixes in- and out-arcs",
                (c, outward[0], inward[0]),
            )
    return Verdict.accept()


def _first(verdict: Verdict) -> tuple[str, tuple]:
    v = verdict.violations[0]
    return f"{v.predicate}: {v.message}", v.witness


def check_part(g: GraphLike, part: Iterable[int], kind: str) -> Verdict:
    """Run the predicate named by ``kind`` on one vertex set."""
    base = g.base if isinstance(g, Orientation) else g
    if kind == "forest":
        return is_forest(base, part)
    if kind == "star_forest":
        return is_star_forest(base, part)
    if kind == "linear_forest":
        return is_linear_forest(base, part)
    if kind == "stable_set":
        return is_stable_set(base, part)
    if kind == "in_out_star_forest":
        if not isinstance(g, Orientation):
            return Verdict.reject(kind, "in/out-star check needs an orientation")
        return is_in_out_star_forest(g, part)
    m = _DEGENERATE_KIND.match(kind)
    if m:
        return is_degenerate(base, part, int(m.group(1)))
    raise ValueError(f"unknown part kind {kind!r}")


def verify_partition(g: GraphLike, p: Partition) -> Verdict:
    """Check disjointness, cover, equitability and the part predicate of every part."""
    n = g.n
    verdicts = []
    owner: dict[int, int] = {}
    for i, part in enumerate(p.parts):
        for v in part:
            if not 0 <= v < n:
                verdicts.append(Verdict.reject("range", f"vertex {v} outside 0..{n - 1}", (v,)))
            elif v in owner:
                verdicts.append(
                    Verdict.reject("disjoint", f"vertex {v} in parts {owner[v]} and {i}", (v,))
                )
            else:
                owner[v] = i
    missing = [v for v in range(n) if v not in owner]
    if missing:
        verdicts.append(Verdict.reject("cover", f"{len(missing)} vertices uncovered", missing))
    sizes = p.sizes
    if sizes and max(sizes) - min(sizes) > 1:
        verdicts.append(
            Verdict.reject(
                "equitable", f"part sizes differ by {max(sizes) - min(sizes)}", (min(sizes), max(sizes))
            )
        )
    for i, part in enumerate(p.parts):
        valid = [v for v in part if 0 <= v < n]
        try:
            verdict = check_part(g, set(valid), p.part_kind)
        except GraphError as exc:
            verdict = Verdict.reject(p.part_kind, str(exc))
        if not verdict:
            verdicts.append(
                Verdict(
                    False,
                    tuple(
                        Violation(v.predicate, f"part {i}: {v.message}", v.witness)
                        for v in verdict.violations
                    ),
                )
            )
    return Verdict.combine(verdicts)


def graph_hash(g: GraphLike) -> str:
    if isinstance(g, Orientation):
        text = write_graph6(g.base) + "|" + ";".join(f"{u},{v}" for u, v in g.sorted_arcs())
    else:
        text = write_graph6(g)
    return hashlib.sha256(text.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class Certificate:
    """Serializable claim that ``parts`` is a valid partition of the hashed graph.

    The verdict is never stored; call :meth:`check` against the graph.
    """

    graph_hash: str
    k: int
    part_kind: str
    parts: tuple[tuple[int, ...], ...]
    producer: str = ""

    @classmethod
    def issue(cls, g: GraphLike, p: Partition, producer: str = "") -> "Certificate":
        return cls(graph_hash(g), p.k, p.part_kind, p.parts, producer)

    @property
    def partition(self) -> Partition:
        return Partition(self.parts, self.part_kind)

    def check(self, g: GraphLike) -> Verdict:
        verdicts = []
        if graph_hash(g) != self.graph_hash:
            verdicts.append(Verdict.reject("graph_hash", "certificate is bound to a different graph"))
        if self.k != len(self.parts):
            verdicts.append(
                Verdict.reject("k", f"declares k={self.k} but lists {len(self.parts)} parts")
            )
        try:
            partition = self.partition
        except ValueError as exc:
            verdicts.append(Verdict.reject("part_kind", str(exc)))
        else:
            verdicts.append(verify_partition(g, partition))
        return Verdict.combine(verdicts)

    def to_dict(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "k": self.k,
            "part_kind": self.part_kind,
            "parts": [list(p) for p in self.parts],
            "producer": self.producer,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        try:
            return cls(
                graph_hash=str(data["graph_hash"]),
                k=int(data["k"]),
                part_kind=str(data["part_kind"]),
                parts=tuple(tuple(int(v) for v in part) for part in data["parts"]),
                producer=str(data.get("producer", "")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"certificate is not JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ValueError("certificate JSON must be an object")
        return cls.from_dict(data)
