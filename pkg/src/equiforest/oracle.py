"""Exhaustive equitable-partition search, used as ground truth on small graphs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .certify import GraphLike, Partition, Verdict, check_part, verify_partition
from .config import BRUTE_FORCE_CAP, exact_cap
from .errors import BudgetExceeded, CapExceeded
from .extend import size_schedule
from .graph import Orientation
from .unionfind import UnionFind

DEFAULT_NODE_BUDGET = 5_000_000


def _forest_fits(g, part: list[int], v: int) -> bool:
    inside = set(part)
    nbrs = [u for u in g.neighbors(v) if u in inside]
    if len(nbrs) < 2:
        return True
    uf = UnionFind(part)
    for x in part:
        for y in g.neighbors(x):
            if y > x and y in inside:
                uf.union(x, y)
    roots = [uf.find(u) for u in nbrs]
    return len(set(roots)) == len(roots)


def _fits(g: GraphLike, part: list[int], v: int, kind: str) -> bool:
    base = g.base if isinstance(g, Orientation) else g
    if kind == "stable_set":
        return not any(base.has_edge(u, v) for u in part)
    if kind == "forest":
        return _forest_fits(base, part, v)
    return bool(check_part(g, part + [v], kind))


def brute_force_equitable(
    g: GraphLike,
    k: int,
    part_kind: str,
    node_budget: int = DEFAULT_NODE_BUDGET,
    cap: int | None = None,
) -> Partition | None:
    """Find an equitable ``k``-partition whose parts all satisfy ``part_kind``.

    Returns None when the exhaustive search proves that none exists, and
    raises :class:`BudgetExceeded` if it gives up first. Parts of equal size
    are interchangeable, so only assignments in which their minimum
    vertices increase are explored.
    """
    limit = exact_cap(BRUTE_FORCE_CAP) if cap is None else cap
    if g.n > limit:
        raise CapExceeded(f"n={g.n} exceeds the brute-force cap {limit}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    targets = size_schedule(n, k)
    parts: list[list[int]] = [[] for _ in range(k)]
    nodes = 0

    def place(v: int) -> bool:
        nonlocal nodes
        if v == n:
            return True
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"brute force exceeded {node_budget} nodes", nodes)
        for p in range(k):
            part = parts[p]
            if len(part) >= targets[p]:
                continue
            if not part and p > 0 and targets[p - 1] == targets[p] and not parts[p - 1]:
                continue
            if not _fits(g, part, v, part_kind):
                continue
            part.append(v)
            if place(v + 1):
                return True
            part.pop()
        return False

    if not place(0):
        return None
    partition = Partition(tuple(tuple(p) for p in parts), part_kind)
    verdict = verify_partition(g, partition)
    assert verdict, verdict.reasons
    return partition


@dataclass
class CrossValidation:
    certified: Verdict
    existence: str  # "confirmed", "contradicted", "skipped" or "budget_exceeded"
    discrepancies: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.certified) and self.existence in ("confirmed", "skipped")

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "certified": self.certified.to_dict(),
            "existence": self.existence,
            "discrepancies": self.discrepancies,
        }


def cross_validate(
    g: GraphLike,
    constructed: Partition,
    cap: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> CrossValidation:
    """Certify ``constructed`` and, on small graphs, confirm the brute force also finds one."""
    certified = verify_partition(g, constructed)
    discrepancies = list(certified.reasons)
    limit = exact_cap(BRUTE_FORCE_CAP) if cap is None else cap
    if g.n > limit:
        return CrossValidation(certified, "skipped", discrepancies)
    try:
        found = brute_force_equitable(g, constructed.k, constructed.part_kind, node_budget, limit)
    except BudgetExceeded:
        return CrossValidation(certified, "budget_exceeded", discrepancies)
    if found is None:
        discrepancies.append(
            f"brute force reports no equitable {constructed.k}-partition into {constructed.part_kind}"
        )
        return CrossValidation(certified, "contradicted", discrepancies)
    return CrossValidation(certified, "confirmed", discrepancies)
