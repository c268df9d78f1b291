"""Exception types shared across the package."""


class PathfreeError(Exception):
    """Base class for all package errors."""


class MalformedInput(PathfreeError, ValueError):
    """Input does not describe a tournament (or a well-formed file)."""


class PreconditionError(PathfreeError, ValueError):
    """An operation was called outside its domain."""


class UnsupportedSize(PreconditionError):
    pass


class DegenerateSize(PathfreeError):
    """A rounded-down size reached zero or a set became too small to continue."""


class BudgetExceeded(PathfreeError):
    pass


class InvariantViolation(PathfreeError, AssertionError):
    """A guarantee the algorithms rely on failed at runtime."""


class PatternWitness(PathfreeError):
    """The input contains the forbidden path; ``vertices`` lists it in path order."""

    def __init__(self, vertices, message="tournament contains the forbidden path"):
        super().__init__(f"{message}: {list(vertices)}")
        self.vertices = tuple(int(v) for v in vertices)
