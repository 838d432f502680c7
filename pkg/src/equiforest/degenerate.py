"""Forest partitions of d-degenerate graphs, and the top-level route chooser.

``kdeg_split`` splits a d-degenerate graph into k equitable parts of
degeneracy at most d-1 (exhaustively on small graphs, by a verified repair
heuristic otherwise). ``forests_from_degenerate`` applies it recursively
to reach 3**(d-1) forests, and ``equitable_forests`` chooses between this
route and the acyclic-coloring route and extends to any k.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .certify import Partition, verify_partition
from .coloring import Coloring, exact_chromatic, greedy_acyclic, greedy_star
from .config import COLORING_CAP, SPLIT_CAP, exact_cap
from .errors import CapExceeded, EquitabilityDrift, HeuristicFailure, NoRoute
from .extend import PartitionOracle, extend_partition, size_schedule
from .graph import Graph, Orientation, degeneracy, induced_subgraph, subset_degeneracy
from .merge import merge_partition, merge_partition_oriented

STRATEGIES = ("auto", "via_acyclic", "via_degeneracy")


@dataclass(frozen=True)
class SplitterConfig:
    exact_cap: int = field(default_factory=lambda: exact_cap(SPLIT_CAP))
    heuristic_budget: int = 5000
    seed: int = 0
    coloring_cap: int = field(default_factory=lambda: exact_cap(COLORING_CAP))

    def __post_init__(self) -> None:
        if self.exact_cap < 0 or self.heuristic_budget < 0 or self.coloring_cap < 0:
            raise ValueError("caps and budget must be >= 0")


def _exact_split(g: Graph, d: int, k: int) -> list[int] | None:
    """Least valid assignment in vertex order, canonical up to swapping equal-size parts."""
    targets = size_schedule(g.n, k)
    parts: list[list[int]] = [[] for _ in range(k)]
    assign = [-1] * g.n
    limit = d - 1

    def fits(v: int, p: int) -> bool:
        part = parts[p]
        if len(part) >= targets[p]:
            return False
        if p > 0 and not part and targets[p - 1] == targets[p] and not parts[p - 1]:
            return False
        inside = sum(1 for u in g.neighbors(v) if assign[u] == p)
        # a vertex with <= limit neighbours in the part cannot raise its degeneracy
        if inside <= limit:
            return True
        return subset_degeneracy(g, part + [v]) <= limit

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for p in range(k):
            if fits(v, p):
                parts[p].append(v)
                assign[v] = p
                if place(v + 1):
                    return True
                parts[p].pop()
                assign[v] = -1
        return False

    return assign if place(0) else None


def _violations(g: Graph, members: set[int], limit: int) -> int:
    """Vertices left after peeling everything of induced degree <= limit."""
    alive = set(members)
    deg = {v: sum(1 for u in g.neighbors(v) if u in alive) for v in alive}
    stack = [v for v in alive if deg[v] <= limit]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
                if deg[u] == limit:
                    stack.append(u)
    return len(alive)


def _heuristic_split(g: Graph, d: int, k: int, cfg: SplitterConfig) -> list[int]:
    limit = d - 1
    targets = size_schedule(g.n, k)
    assign = [-1] * g.n
    members: list[set[int]] = [set() for _ in range(k)]
    _, deletion = degeneracy(g)
    pointer = 0
    for v in reversed(deletion):
        open_parts = [(pointer + j) % k for j in range(k)]
        open_parts = [p for p in open_parts if len(members[p]) < targets[p]]
        chosen = open_parts[0]
        for p in open_parts:
            if sum(1 for u in g.neighbors(v) if assign[u] == p) <= limit:
                chosen = p
                break
        assign[v] = chosen
        members[chosen].add(v)
        pointer = (pointer + 1) % k

    cost = [_violations(g, m, limit) for m in members]
    rng = random.Random(cfg.seed)
    for _ in range(cfg.heuristic_budget):
        if sum(cost) == 0:
            return assign
        if not _improve(g, assign, members, cost, limit):
            # stuck in a local minimum: swap a violating vertex at random
            bad = sorted(v for p in range(k) if cost[p] for v in members[p])
            v = rng.choice(bad)
            a = assign[v]
            b = rng.choice([p for p in range(k) if p != a])
            if not members[b]:
                continue
            u = rng.choice(sorted(members[b]))
            _swap(assign, members, v, u)
            cost[a] = _violations(g, members[a], limit)
            cost[b] = _violations(g, members[b], limit)
    if sum(cost) == 0:
        return assign
    raise HeuristicFailure(
        f"no valid {k}-split into {limit}-degenerate parts after {cfg.heuristic_budget} repair steps"
    )


def _swap(assign, members, v, u) -> None:
    a, b = assign[v], assign[u]
    members[a].discard(v)
    members[b].discard(u)
    members[a].add(u)
    members[b].add(v)
    assign[v], assign[u] = b, a


def _improve(g, assign, members, cost, limit) -> bool:
    """Apply the first strictly improving move or swap, scanning by vertex index."""
    k = len(members)
    violators = sorted(v for p in range(k) if cost[p] for v in members[p])
    for v in violators:
        a = assign[v]
        for b in range(k):
            if b == a:
                continue
            before = cost[a] + cost[b]
            if len(members[a]) > len(members[b]):
                members[a].discard(v)
                members[b].add(v)
                ca = _violations(g, members[a], limit)
                cb = _violations(g, members[b], limit)
                if ca + cb < before:
                    assign[v] = b
                    cost[a], cost[b] = ca, cb
                    return True
                members[b].discard(v)
                members[a].add(v)
            for u in sorted(members[b]):
                _swap(assign, members, v, u)
                ca = _violations(g, members[a], limit)
                cb = _violations(g, members[b], limit)
                if ca + cb < before:
                    cost[a], cost[b] = ca, cb
                    return True
                _swap(assign, members, u, v)
    return False


def kdeg_split(g: Graph, d: int, k: int = 3, cfg: SplitterConfig | None = None) -> Partition:
    """Equitable ``k``-partition of a d-degenerate graph into (d-1)-degenerate parts."""
    cfg = cfg or SplitterConfig()
    if d < 2 or k < 3:
        raise ValueError(f"kdeg_split needs d >= 2 and k >= 3, got d={d}, k={k}")
    actual, _ = degeneracy(g)
    if actual > d:
        raise ValueError(f"graph has degeneracy {actual} > d={d}")
    if g.n <= cfg.exact_cap:
        assign = _exact_split(g, d, k)
        if assign is None:
            raise AssertionError(f"exhaustive split found no {k}-partition of a {d}-degenerate graph")
    else:
        assign = _heuristic_split(g, d, k, cfg)
    parts = [[] for _ in range(k)]
    for v, p in enumerate(assign):
        parts[p].append(v)
    partition = Partition(tuple(tuple(p) for p in parts), f"{d - 1}-degenerate")
    verdict = verify_partition(g, partition)
    if not verdict:
        raise HeuristicFailure("split failed verification: " + "; ".join(verdict.reasons))
    return partition


def forests_from_degenerate(g: Graph, d: int, cfg: SplitterConfig | None = None) -> Partition:
    """Equitable partition of a d-degenerate graph into exactly 3**(d-1) induced forests."""
    cfg = cfg or SplitterConfig()
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    actual, _ = degeneracy(g)
    if actual > d:
        raise ValueError(f"graph has degeneracy {actual} > d={d}")
    if d == 1:
        return Partition((tuple(range(g.n)),), "forest")
    parts: list[tuple[int, ...]] = []
    for piece in kdeg_split(g, d, 3, cfg).parts:
        sub, _ = induced_subgraph(g, piece)
        inner = forests_from_degenerate(sub, d - 1, cfg)
        parts.extend(tuple(piece[v] for v in part) for part in inner.parts)
    partition = Partition(tuple(parts), "forest")
    sizes = partition.sizes
    if sizes and max(sizes) - min(sizes) > 1:
        raise EquitabilityDrift(f"composed part sizes {sorted(sizes)} are not equitable")
    verdict = verify_partition(g, partition)
    if not verdict:
        raise AssertionError("; ".join(verdict.reasons))
    return partition


def _base_coloring(g: Graph, kind: str, cfg: SplitterConfig) -> Coloring:
    coloring_kind = "acyclic" if kind == "forest" else "star"
    if g.n <= cfg.coloring_cap:
        _, coloring = exact_chromatic(g, coloring_kind, cfg.coloring_cap)
    else:
        coloring = greedy_acyclic(g) if kind == "forest" else greedy_star(g)
    return coloring.padded(max(coloring.k, 2))


def acyclic_oracle(g: Graph, coloring: Coloring, kind: str = "forest") -> PartitionOracle:
    """Merge-engine partitioner for induced subgraphs of ``g``, reusing ``coloring``."""
    mode = "acyclic" if kind == "forest" else "star"

    def partition(sub: Graph, labels: tuple[int, ...]) -> Partition:
        index = {old: new for new, old in enumerate(labels)}
        return merge_partition(sub, coloring.restrict(index), mode)

    return PartitionOracle(coloring.k - 1, partition, kind)


def oriented_oracle(coloring: Coloring) -> PartitionOracle:
    """Merge-engine partitioner into in/out-star forests for sub-orientations."""

    def partition(sub: Orientation, labels: tuple[int, ...]) -> Partition:
        index = {old: new for new, old in enumerate(labels)}
        return merge_partition_oriented(sub, coloring.restrict(index))

    return PartitionOracle(coloring.k - 1, partition, "in_out_star_forest")


def degeneracy_oracle(d: int, cfg: SplitterConfig) -> PartitionOracle:
    return PartitionOracle(
        3 ** (d - 1), lambda sub, labels: forests_from_degenerate(sub, d, cfg), "forest"
    )


@dataclass(frozen=True)
class Route:
    strategy: str
    base: int
    oracle: PartitionOracle


def plan_route(
    g: Graph, k: int, strategy: str = "auto", cfg: SplitterConfig | None = None, kind: str = "forest"
) -> Route:
    """Pick the construction for ``k`` parts; raises NoRoute if none reaches ``k``."""
    cfg = cfg or SplitterConfig()
    if isinstance(g, Orientation) or kind == "in_out_star_forest":
        return _plan_oriented(g, k, strategy, cfg)
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, not {strategy!r}")
    if kind not in ("forest", "star_forest"):
        raise ValueError(f"kind must be forest or star_forest, not {kind!r}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    candidates: list[Route] = []
    if strategy in ("auto", "via_acyclic"):
        coloring = _base_coloring(g, kind, cfg)
        candidates.append(Route("via_acyclic", coloring.k - 1, acyclic_oracle(g, coloring, kind)))
    if strategy in ("auto", "via_degeneracy") and kind == "forest":
        d = max(degeneracy(g)[0], 1)
        candidates.append(Route("via_degeneracy", 3 ** (d - 1), degeneracy_oracle(d, cfg)))
    feasible = [r for r in candidates if r.base <= k]
    if not feasible:
        detail = ", ".join(f"{r.strategy} needs k >= {r.base}" for r in candidates)
        raise NoRoute(f"no route yields {k} {kind} parts ({detail or 'no applicable strategy'})")
    return min(feasible, key=lambda r: r.base)


def _plan_oriented(o, k: int, strategy: str, cfg: SplitterConfig) -> Route:
    if not isinstance(o, Orientation):
        raise ValueError("in_out_star_forest partitions need an orientation")
    if strategy not in ("auto", "via_acyclic"):
        raise NoRoute(f"strategy {strategy!r} does not produce in/out-star forests")
    if o.n > cfg.coloring_cap:
        raise CapExceeded(
            f"n={o.n} exceeds the exact coloring cap {cfg.coloring_cap}; no heuristic "
            "orientation-consistent star coloring is available"
        )
    _, coloring = exact_chromatic(o, "oriented-star", cfg.coloring_cap)
    coloring = coloring.padded(max(coloring.k, 2))
    if coloring.k - 1 > k:
        raise NoRoute(f"no route yields {k} in/out-star forests (needs k >= {coloring.k - 1})")
    return Route("via_acyclic", coloring.k - 1, oriented_oracle(coloring))


def equitable_forests(
    g: Graph,
    k: int,
    strategy: str = "auto",
    cfg: SplitterConfig | None = None,
    kind: str = "forest",
) -> Partition:
    """Equitable partition of ``g`` into ``k`` induced forests.

    ``kind="star_forest"`` asks for star forests (acyclic route only, via
    star colorings). An :class:`Orientation` input yields forests of in-
    and out-stars.
    """
    route = plan_route(g, k, strategy, cfg, kind)
    return extend_partition(g, route.oracle, k)
