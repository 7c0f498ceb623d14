"""
Custom exception hierarchy for uniqdim.

All exceptions inherit from UniqDimError for consistent error handling.
"""


class UniqDimError(Exception):
    """Base exception for all uniqdim errors."""

    def __init__(self, message: str, context: dict | None = None):
        self.message = message
        self.context = context or {}
        super().__init__(self.message)


class ConfigurationError(UniqDimError):
    """Configuration-related errors (invalid settings, bad run configuration)."""
    pass


class GraphError(UniqDimError):
    """Invalid graph input (self-loop, index out of range, order above cap)."""
    pass


class DisconnectedGraphError(GraphError):
    """Graph is not connected; context names two vertices with no path."""

    def __init__(self, u: int, v: int):
        super().__init__(
            f"Graph is disconnected: no path between {u} and {v}",
            context={'u': u, 'v': v}
        )
        self.u = u
        self.v = v


class GraphFormatError(GraphError):
    """Malformed graph6 or edge-list text; offset is a byte offset or a line number."""

    def __init__(self, message: str, offset: int, context: dict | None = None):
        super().__init__(f"{message} (at offset {offset})", context={'offset': offset, **(context or {})})
        self.offset = offset


class SolverError(UniqDimError):
    """Solver self-check failures."""
    pass


class ConstructionError(UniqDimError):
    """Construction parameters out of range or preconditions not met."""
    pass


class SearchError(UniqDimError):
    """Enumeration or search parameters out of the supported range."""
    pass


class ClaimFalsifiedError(UniqDimError):
    """A uniqueness claim or search consistency property did not hold."""
    pass
