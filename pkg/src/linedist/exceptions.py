"""Error hierarchy.

Every error raised by the library derives from :class:`LineDistError`; the
CLI maps the four families below onto its exit codes.
"""


class LineDistError(Exception):
    """Base class for all library errors."""


class GraphError(LineDistError, ValueError):
    """Malformed graph input."""


class OutOfRange(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class SizeMismatch(GraphError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


class ParseError(LineDistError, ValueError):
    pass


class IneligibleError(LineDistError, ValueError):
    """The input is outside the class of graphs an operation accepts."""


class Disconnected(IneligibleError):
    pass


class IneligibleGraph(IneligibleError):
    pass


class NotATree(IneligibleError):
    pass


class NotAutomorphism(IneligibleError):
    pass


class CapExceeded(LineDistError, RuntimeError):
    """A configured resource cap would be exceeded."""


class SizeCapExceeded(CapExceeded):
    def __init__(self, iteration, estimate, cap):
        self.iteration = iteration
        self.estimate = estimate
        self.cap = cap
        super().__init__(
            f"iteration {iteration} would have {estimate} vertices (cap {cap})"
        )


class GroupTooLarge(CapExceeded):
    pass


class SearchCapExceeded(CapExceeded):
    pass


class WorkCapExceeded(CapExceeded):
    pass


class RemarkInfeasible(CapExceeded):
    pass


class VerificationFailed(LineDistError):
    pass
