"""Turn a k-coloring whose class pairs induce forests into k-1 equitable parts.

At each step the smallest class is merged with part of a partner class
into one part of size floor(n/(k-1)), the remainder of the partner keeps
its place as a class, and the loop continues with one class fewer.
"""

from __future__ import annotations

from .certify import Partition, verify_partition
from .coloring import Coloring, require, verify_acyclic, verify_oriented_consistent, verify_star
from .graph import Graph, Orientation

MODES = {"acyclic": "forest", "star": "star_forest"}


def select_merge_pair(class_sizes: list[int], n: int, k: int) -> tuple[int, int]:
    """Indices (smallest class, first partner with joint size >= n/(k-1))."""
    if k < 3 or len(class_sizes) != k:
        raise ValueError(f"need k >= 3 sizes, got k={k} with {len(class_sizes)} sizes")
    if sum(class_sizes) != n:
        raise ValueError(f"class sizes sum to {sum(class_sizes)}, not n={n}")
    i1 = min(range(k), key=lambda i: (class_sizes[i], i))
    for i2 in range(k):
        if i2 != i1 and (class_sizes[i1] + class_sizes[i2]) * (k - 1) >= n:
            return i1, i2
    # the k-1 unions with the smallest class total n + (k-2)*min >= n
    raise AssertionError(f"no merge partner for sizes {class_sizes} (n={n}, k={k})")


def _merge_classes(classes: list[list[int]], part_kind: str) -> Partition:
    if len(classes) < 2:
        raise ValueError(f"merging needs at least 2 classes, got {len(classes)}")
    n = sum(len(c) for c in classes)
    parts: list[list[int]] = []
    while len(classes) > 2:
        k = len(classes)
        i1, i2 = select_merge_pair([len(c) for c in classes], n, k)
        target = n // (k - 1)
        take = target - len(classes[i1])
        if not 0 <= take <= len(classes[i2]):
            raise AssertionError(f"cannot take {take} vertices from a class of {len(classes[i2])}")
        parts.append(classes[i1] + classes[i2][:take])
        classes[i2] = classes[i2][take:]
        del classes[i1]
        n -= target
    parts.append(classes[0] + classes[1])
    return Partition(tuple(tuple(p) for p in parts), part_kind)


def merge_partition(g: Graph, c: Coloring, mode: str = "acyclic") -> Partition:
    """Equitable partition into ``c.k - 1`` induced forests (or star forests).

    ``mode`` is ``"acyclic"`` or ``"star"`` and selects which verifier the
    coloring must pass first.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {sorted(MODES)}, not {mode!r}")
    if c.k < 2:
        raise ValueError(f"need at least 2 classes, got {c.k}")
    verifier = verify_acyclic if mode == "acyclic" else verify_star
    require(verifier(g, c), f"coloring is not {mode}")
    partition = _merge_classes([sorted(cl) for cl in c.classes], MODES[mode])
    if __debug__:
        verdict = verify_partition(g, partition)
        assert verdict, verdict.reasons
    return partition


def merge_partition_oriented(o: Orientation, c: Coloring) -> Partition:
    """Equitable partition into ``c.k - 1`` induced forests of in- and out-stars."""
    if c.k < 2:
        raise ValueError(f"need at least 2 classes, got {c.k}")
    require(verify_star(o.base, c), "coloring is not a star coloring")
    require(verify_oriented_consistent(o, c), "coloring is not orientation-consistent")
    partition = _merge_classes([sorted(cl) for cl in c.classes], "in_out_star_forest")
    if __debug__:
        verdict = verify_partition(o, partition)
        assert verdict, verdict.reasons
    return partition
