"""Exception hierarchy shared across the package."""


class EquiforestError(Exception):
    pass


class InvalidColoring(EquiforestError, ValueError):
    """A coloring does not partition the vertex set or fails its verifier."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class InvalidPartition(EquiforestError, ValueError):
    """A partition handed across a plug-in boundary failed verification."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class CapExceeded(EquiforestError, ValueError):
    """Instance too large for an exhaustive solver."""


class BudgetExceeded(EquiforestError):
    """Exhaustive search stopped at its node budget before reaching a verdict."""

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


class HeuristicFailure(EquiforestError):
    """The repair heuristic ran out of budget without a valid split."""


class EquitabilityDrift(EquiforestError):
    """Equitable sub-splits composed into an inequitable partition."""


class NoRoute(EquiforestError, ValueError):
    """No construction applies for the requested part count."""
