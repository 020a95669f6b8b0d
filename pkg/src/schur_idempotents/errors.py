"""Exception hierarchy shared by all modules."""


class SchurError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgument(SchurError, ValueError):
    """An argument violates a documented precondition."""


class Unsupported(SchurError):
    """The operation is not defined for the given characteristic."""


class OutOfDegree(InvalidArgument):
    """The requested idempotent needs ``m + 2g > r``."""


class ZeroElement(InvalidArgument):
    """The requested idempotent would be zero (``B(m, g)`` is even)."""


class CostBoundExceeded(SchurError):
    """A brute-force computation was refused because it is too large."""
