"""Exception hierarchy shared by all solvers and the CLI.

The CLI maps these onto its exit codes: invalid input (2), solver
refusal or cap (3), anything unexpected (1).
"""


class ApproxLabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInstanceError(ApproxLabError):
    """An instance document is malformed or violates a type invariant."""


class UnknownAlgorithmError(ApproxLabError):
    """Algorithm name not in the registry."""

    def __init__(self, name: str, known: list[str]):
        self.name = name
        self.known = known
        super().__init__(f"unknown algorithm '{name}'; valid names: {', '.join(known)}")


class CapExceededError(ApproxLabError):
    """Instance exceeds an exact solver's configured work cap."""

    def __init__(self, message: str, cap: int | float | None = None):
        self.cap = cap
        super().__init__(message)


class DisconnectedGraphError(ApproxLabError):
    """A spanning-tree operation was asked for a disconnected graph."""


class MetricViolationError(ApproxLabError):
    """Triangle inequality does not hold, so the tour guarantee is void."""

    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        u, w, v = triple
        super().__init__(
            f"triangle inequality violated: cost[{u}][{v}] > cost[{u}][{w}] + cost[{w}][{v}]"
        )


class BoundViolationError(ApproxLabError):
    """An empirical ratio exceeded the proven bound (a defect signal)."""


class TraceReplayError(ApproxLabError):
    """A trace event stream is inconsistent and cannot be replayed."""
