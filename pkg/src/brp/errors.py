"""Exception hierarchy shared by every module."""


class BRPError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(BRPError, ValueError):
    """Malformed graph input: bad weight, duplicate id, dangling endpoint."""


class DisconnectedGraphError(BRPError):
    """No rooted acyclic orientation exists because the graph is disconnected."""


class UndefinedValueError(BRPError):
    """The requested value is undefined (e.g. a graph with no non-root vertex)."""


class NotTwoConnectedError(BRPError):
    pass


class NotOuterplanarError(BRPError):
    """Raised by recognition; ``witness`` names the obstruction found."""

    def __init__(self, message, witness=None, block=None):
        super().__init__(message)
        self.witness = witness
        self.block = block


class ForcedContradiction(BRPError):
    """Both directions of some edge are infeasible in a partial orientation."""


class InvariantViolation(BRPError, AssertionError):
    """An internal invariant failed; indicates a bug, not bad input."""


class BoundExceeded(BRPError):
    """Brute-force enumeration refused because the instance is too large."""
