"""Exception types shared across the package."""
from __future__ import annotations


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class VertexRangeError(GraphError):
    """A vertex id falls outside 0..n-1."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same undirected edge appears twice."""


class EmptyGraphError(GraphError):
    """The operation needs at least one edge."""


class NotASeparatorError(GraphError):
    """The removed set does not disconnect the graph."""


class DisconnectedError(GraphError):
    """The operation requires a connected graph."""


class CutSmallerThanK(GraphError):
    """Fewer than k openly-disjoint paths exist between the endpoints."""


class MalformedTupleError(GraphError):
    """A probe tuple or path system violates its invariants."""


class QueriedFailedVertexError(GraphError):
    """A connectivity query named a vertex in the current failure set."""


class PreconditionError(GraphError):
    """A documented precondition of the operation does not hold."""


class TooLargeError(GraphError):
    """The instance is too large for exhaustive enumeration."""


class BadParamsError(GraphError):
    """Generator parameters are invalid."""
