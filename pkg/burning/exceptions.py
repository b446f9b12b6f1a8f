"""Submodule providing the exceptions raised by the burning package."""

from typing import List, Optional


class BurningError(Exception):
    """Base class of every error raised by the burning package."""


class VertexOutOfRangeError(BurningError, IndexError):
    """Raised when a vertex identifier is not in 0..n-1."""

    def __init__(self, vertex: int, vertex_count: int):
        """Initialize the error."""
        super().__init__(
            f"Vertex {vertex} is out of range for a graph with {vertex_count} vertices."
        )
        self.vertex = vertex
        self.vertex_count = vertex_count

    def __reduce__(self):
        """Return the arguments rebuilding the error across processes."""
        return (type(self), (self.vertex, self.vertex_count))


class EmptyGraphError(BurningError, ValueError):
    """Raised when an operation needs at least one vertex."""


class DisconnectedGraphError(BurningError, ValueError):
    """Raised when a connected graph is required."""


class DuplicateActivatorError(BurningError, ValueError):
    """Raised when an activator appears twice in a sequence."""


class AlreadyBurnedError(BurningError, ValueError):
    """Raised when an activator is placed on a vertex that is already burned."""


class AllBurnedError(BurningError, ValueError):
    """Raised when a next activator is requested but every vertex is burned."""


class NotAPathError(BurningError, ValueError):
    """Raised when a vertex list is not a simple path."""


class NotClusterGraphError(BurningError, ValueError):
    """Raised when removing a modulator does not leave a disjoint union of cliques."""


class GraphFormatError(BurningError, ValueError):
    """Raised when a graph file cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        """Initialize the error."""
        self._message = message
        if line_number is not None:
            message = f"Line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number

    def __reduce__(self):
        """Return the arguments rebuilding the error across processes."""
        return (type(self), (self._message, self.line_number))


class BudgetExceededError(BurningError, RuntimeError):
    """Raised when the exact solver expands more states than allowed."""

    def __init__(self, expanded: int, budget: int):
        """Initialize the error."""
        super().__init__(
            f"Exact search abandoned after expanding {expanded} states (budget {budget})."
        )
        self.expanded = expanded
        self.budget = budget

    def __reduce__(self):
        """Return the arguments rebuilding the error across processes."""
        return (type(self), (self.expanded, self.budget))


class InvalidSequenceError(BurningError, RuntimeError):
    """Raised when a heuristic emits a sequence that fails validation."""

    def __init__(self, message: str, violations: List[str]):
        """Initialize the error."""
        super().__init__(f"{message}: {'; '.join(violations)}")
        self._message = message
        self.violations = violations

    def __reduce__(self):
        """Return the arguments rebuilding the error across processes."""
        return (type(self), (self._message, self.violations))
