"""Exception hierarchy.

Every error raised on bad input derives from :class:`WalksymError`, which is
itself a ``ValueError``.  Internal consistency failures (a theorem the code
relies on did not hold) derive from :class:`InternalCheckError` instead, so
callers that tally per-graph data errors never swallow them.
"""


class WalksymError(ValueError):
    """Base class for input and data errors."""


# graph6 parsing
class Graph6Error(WalksymError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedBody(Graph6Error):
    pass


class InvalidByte(Graph6Error):
    pass


class OversizeGraph(Graph6Error):
    pass


# graph construction and preconditions
class BadParams(WalksymError):
    pass


class Oversize(WalksymError):
    pass


class Disconnected(WalksymError):
    pass


class IsolatedVertex(WalksymError):
    pass


class SameVertex(WalksymError):
    pass


class NotAWalk(WalksymError):
    pass


class TooSmall(WalksymError):
    pass


class NotReversible(WalksymError):
    pass


class NotRegular(WalksymError):
    pass


class SingularMatrix(WalksymError):
    pass


class BadFilter(WalksymError):
    pass


class InternalCheckError(AssertionError):
    """A mathematical identity the implementation depends on failed."""


class CharacterizationMismatch(InternalCheckError):
    pass


class LatticeViolation(InternalCheckError):
    def __init__(self, message, graph6=None):
        super().__init__(message if graph6 is None else f"{message} [graph6: {graph6}]")
        self.graph6 = graph6
