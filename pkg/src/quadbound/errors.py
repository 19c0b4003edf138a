"""Exception types shared across the package."""


class QuadboundError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(QuadboundError, ValueError):
    """An argument violates an operation's stated preconditions."""


class DomainError(QuadboundError, ValueError):
    """A point lies outside the mathematical domain of the target function."""


class BracketError(QuadboundError, ValueError):
    """A root bracket does not actually straddle a sign change."""


class ComputationError(QuadboundError, ArithmeticError):
    """A computed result failed one of its own consistency guarantees."""


class EvaluationError(QuadboundError, ArithmeticError):
    """An integrand returned a non-finite value.

    Carries the offending abscissa so callers can report where the
    integrand blew up.
    """

    def __init__(self, message, abscissa):
        super().__init__(message)
        self.abscissa = abscissa
