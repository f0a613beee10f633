"""Exception types shared across the package."""


class EntboundError(Exception):
    """Base class for all package errors."""


class InvalidInput(EntboundError, ValueError):
    """Malformed input: wrong shape, non-Hermitian, unnormalized, bad arguments."""


class DomainError(EntboundError, ValueError):
    """A real argument lies outside the domain of a bound or curve."""


class NotEntangled(EntboundError, ValueError):
    """A witness state was requested from a product state."""


class NumericalFailure(EntboundError, ArithmeticError):
    """A LAPACK routine failed to converge."""
