"""Exception types shared across the library."""


class TreecountError(Exception):
    """Base class for every error this library raises deliberately."""


class LoopEdgeError(TreecountError):
    """An edge joins a vertex to itself; only loopless multigraphs are supported."""


class VertexOutOfRangeError(TreecountError):
    """A vertex label falls outside 0..n-1."""


class EdgeOutOfRangeError(TreecountError):
    """An edge index falls outside 0..m-1."""


class GraphTooLargeError(TreecountError):
    """More vertices than the supported maximum (64)."""


class EmptySetError(TreecountError):
    """An operation needs a nonempty vertex set."""


class EmptyGraphError(TreecountError):
    """An operation needs at least one vertex."""


class DisconnectedError(TreecountError):
    """An operation needs a connected graph."""


class LengthMismatchError(TreecountError):
    """A weight sequence does not line up with the edge indexing."""


class ExponentOverflowError(TreecountError):
    """A variable would exceed exponent 2; the input is not a graph incidence product."""


class BudgetExceededError(TreecountError):
    """A computation would exceed its configured size budget."""


class InvalidSpecError(TreecountError):
    """A family or random-graph specification is malformed."""


class IsolatedVertexError(TreecountError):
    """The graph has a vertex of degree zero where that is not allowed."""


class EmptyExpansionError(TreecountError):
    """A statistic was requested from an empty expansion."""


class ParseError(TreecountError):
    """A graph or weight file could not be parsed."""
