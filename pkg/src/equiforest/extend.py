"""Lift an l-part equitable forest partitioner to any k >= l parts.

The graph is peeled one part at a time: ask the partitioner for an
l-partition of what is left, keep (a trimmed copy of) its largest part,
and hand the remainder back. The last l parts come straight from the
partitioner.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .certify import GraphLike, Partition, verify_partition
from .errors import InvalidPartition
from .graph import Graph, Orientation, induced_orientation, induced_subgraph

HEREDITARY_KINDS = ("forest", "star_forest", "in_out_star_forest", "linear_forest")


@dataclass(frozen=True)
class PartitionOracle:
    """A partitioner that splits any graph of a hereditary class into ``ell`` equitable parts.

    ``partition(sub, labels)`` receives an induced subgraph together with
    the original label of each of its vertices (``labels[i]`` is vertex
    ``i`` of ``sub``), so a partitioner can reuse data computed on the
    parent graph. It returns a partition in the subgraph's own labels.
    """

    ell: int
    partition: Callable[[GraphLike, tuple[int, ...]], Partition]
    part_kind: str = "forest"

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError("ell must be >= 1")
        if self.part_kind not in HEREDITARY_KINDS:
            raise ValueError(
                f"cannot extend {self.part_kind!r} partitions; supported: {HEREDITARY_KINDS}"
            )

    def __call__(self, g: GraphLike, labels: tuple[int, ...] | None = None) -> Partition:
        return self.partition(g, tuple(range(g.n)) if labels is None else labels)


def identity_oracle(part_kind: str = "forest") -> PartitionOracle:
    """l = 1: the whole vertex set as the single part (valid exactly on forests)."""
    return PartitionOracle(
        1, lambda g, labels: Partition((tuple(range(g.n)),), part_kind), part_kind
    )


def trim_forest(part: Iterable[int], target_size: int) -> tuple[int, ...]:
    members = sorted(part)
    if not 0 <= target_size <= len(members):
        raise ValueError(f"cannot trim a part of {len(members)} vertices to {target_size}")
    return tuple(members[:target_size])


def size_schedule(n: int, k: int) -> list[int]:
    """Part sizes of an equitable k-partition, larger ones first."""
    q, s = divmod(n, k)
    return [q + 1] * s + [q] * (k - s)


def _sub(g: GraphLike, keep: list[int]):
    if isinstance(g, Orientation):
        return induced_orientation(g, keep)
    return induced_subgraph(g, keep)


def _ask(oracle: PartitionOracle, g: GraphLike, keep: list[int]) -> Partition:
    sub, _ = _sub(g, keep)
    p = oracle(sub, tuple(keep))
    if p.k != oracle.ell or p.part_kind != oracle.part_kind:
        raise InvalidPartition(
            f"oracle returned {p.k} {p.part_kind!r} parts, expected {oracle.ell} {oracle.part_kind!r}"
        )
    verdict = verify_partition(sub, p)
    if not verdict:
        raise InvalidPartition("oracle partition failed verification: " + "; ".join(verdict.reasons), verdict)
    return p.relabel(keep)


def extend_partition(g: Graph | Orientation, oracle: PartitionOracle, k: int) -> Partition:
    """Equitable partition into ``k`` parts of the oracle's kind.

    Exactly ``n mod k`` parts have size ceil(n/k); they are emitted first.
    """
    ell = oracle.ell
    if k < ell:
        raise ValueError(f"k={k} is below the oracle's part count {ell}")
    schedule = size_schedule(g.n, k)
    remaining = list(range(g.n))
    parts: list[tuple[int, ...]] = []
    for i in range(k - ell):
        p = _ask(oracle, g, remaining)
        largest = max(range(p.k), key=lambda j: (len(p.parts[j]), -j))
        forest = p.parts[largest]
        if len(forest) < schedule[i]:
            raise AssertionError(
                f"largest part has {len(forest)} vertices, schedule needs {schedule[i]}"
            )
        chosen = trim_forest(forest, schedule[i])
        parts.append(chosen)
        taken = set(chosen)
        remaining = [v for v in remaining if v not in taken]
    parts.extend(_ask(oracle, g, remaining).parts)
    result = Partition(tuple(parts), oracle.part_kind)
    verdict = verify_partition(g, result)
    if not verdict:
        raise AssertionError("extended partition failed verification: " + "; ".join(verdict.reasons))
    return result
