"""Exception types shared across the package."""


class CtdomError(Exception):
    """Base class for every error raised by ctdom."""


class ParseError(CtdomError, ValueError):
    pass


class GraphError(CtdomError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"edge {u}-{v} given twice")
        self.edge = (u, v)


class IndexOutOfRange(GraphError):
    pass


class NotAnEdge(GraphError):
    pass


class CapacityExceeded(GraphError):
    pass


class InvalidSpec(GraphError):
    pass


class GiveUp(GraphError):
    """Random generation ran out of resamples."""


class PreconditionError(CtdomError):
    """An input violates an operation's precondition (CLI exit code 3)."""


class IsolatedVertex(PreconditionError):
    def __init__(self, v):
        super().__init__(f"vertex {v} is isolated")
        self.vertex = v


class NotInSet(PreconditionError, ValueError):
    pass


class Undefined(PreconditionError):
    """ct is undefined: gamma equals 2 or the graph is not admissible."""


class NotInClass(PreconditionError):
    pass


class FlavorMismatch(PreconditionError):
    pass


class InvalidFormula(CtdomError, ValueError):
    pass


class TooManyVariables(CtdomError, ValueError):
    pass


class NotSatisfying(PreconditionError):
    pass


class InvalidInput(PreconditionError, ValueError):
    pass


class Timeout(CtdomError):
    """The solver budget ran out before an exact answer was found."""


class TheoryViolation(CtdomError):
    """No contraction sequence of length at most 3 reached gamma - 1."""


class VerificationError(CtdomError):
    """Two independent computations disagreed (CLI exit code 4)."""
