"""Exception types raised across the package."""


class StarClusterError(ValueError):
    """Base class for invalid input to any construction or predicate."""


class GraphError(StarClusterError):
    pass


class ComplexError(StarClusterError):
    pass


class HypothesisViolation(StarClusterError):
    """An operation's mathematical precondition does not hold.

    ``witness`` carries the offending object (a claw, a pair of vertices at
    distance < 3, ...) so callers can report it.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InstanceTooLarge(StarClusterError):
    pass


class ParseError(StarClusterError):
    """Malformed input text; ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line=None, column=None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column
