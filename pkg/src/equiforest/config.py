"""Size caps for the exhaustive solvers."""

import os

ENV_EXACT_CAP = "EQUIFOREST_EXACT_CAP"

COLORING_CAP = 20
SPLIT_CAP = 24
BRUTE_FORCE_CAP = 14


def exact_cap(default: int) -> int:
    """``default`` unless EQUIFOREST_EXACT_CAP holds an integer override."""
    raw = os.environ.get(ENV_EXACT_CAP)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_EXACT_CAP} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ENV_EXACT_CAP} must be >= 0")
    return value
