"""Error types shared across the package."""


class WeylbsError(Exception):
    """Base class for all errors raised by this package."""


class SignatureMismatchError(WeylbsError):
    """Operands live over different algebra signatures."""


class InvalidInputError(WeylbsError):
    """Input violates a documented precondition (constant f, zero poly, ...)."""


class DivisionRemainderError(WeylbsError):
    """Exact division was requested but the remainder is nonzero."""


class ExponentOverflowError(WeylbsError):
    """An exponent exceeded the configured hard cap."""


class ResourceLimitError(WeylbsError):
    """A configured computation budget (pairs, steps, iterations) was exhausted.

    Distinct from mathematical errors: the answer is unknown, not wrong.
    """


class HomogeneityError(WeylbsError):
    """A weight-homogeneity runtime assertion failed; the run must abort."""


class ParseError(WeylbsError):
    """Syntax error in an input expression, annotated with a position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
