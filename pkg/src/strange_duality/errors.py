"""Exception hierarchy shared by all modules."""


class StrangeDualityError(Exception):
    """Base class for computational errors raised by this package."""


class DomainError(StrangeDualityError, ValueError):
    """Input outside the domain where an operation is defined."""


class UnsupportedCase(StrangeDualityError):
    """No formula is available for the requested case."""


class InvariantViolation(StrangeDualityError, AssertionError):
    """An internal invariant failed; indicates a bug, not bad input."""


class InsufficientData(StrangeDualityError):
    """A linear reconstruction has free parameters left."""

    def __init__(self, message, free_unknowns=()):
        super().__init__(message)
        self.free_unknowns = tuple(free_unknowns)


class InconsistentConstraints(StrangeDualityError):
    """Constraints admit no (integral) solution."""


class AuditError(StrangeDualityError):
    """A bookkeeping identity of an audit did not hold."""

    def __init__(self, message, side=None):
        super().__init__(message)
        self.side = side
