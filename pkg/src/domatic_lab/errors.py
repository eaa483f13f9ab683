"""Exception hierarchy shared by every module."""


class DomaticLabError(Exception):
    """Base class for all library errors."""


class GraphError(DomaticLabError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EndpointOutOfRange(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class ParseError(DomaticLabError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderMismatch(ParseError):
    pass


class PartitionMismatch(DomaticLabError, ValueError):
    pass


class TooLarge(DomaticLabError, ValueError):
    """An exhaustive oracle was asked to enumerate beyond its guard."""


class TimedOut(DomaticLabError):
    """Raised by derived quantities when the underlying search exceeds its budget."""


class NotMonotone(DomaticLabError, ValueError):
    pass


class ContiguousSet(DomaticLabError, ValueError):
    pass


class IsolatedVertex(DomaticLabError, ValueError):
    pass


class TwoColorable(DomaticLabError, ValueError):
    pass


class EmptyDecoration(DomaticLabError, ValueError):
    pass


class OddLength(DomaticLabError, ValueError):
    pass


class SharedVariables(DomaticLabError, ValueError):
    pass


class PadFailure(DomaticLabError):
    pass


class NegativeLiteral(DomaticLabError, ValueError):
    pass


class NotAnImage(DomaticLabError, ValueError):
    """The graph was not produced by the construction the operation requires."""


class OddZ(DomaticLabError, ValueError):
    pass
