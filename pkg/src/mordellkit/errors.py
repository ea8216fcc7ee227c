"""Exception types shared across the package."""


class MordellKitError(Exception):
    """Base class for all package errors."""


class NonConvergence(MordellKitError):
    """A quadrature or series did not reach the requested tolerance."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class InvalidDecay(MordellKitError, ValueError):
    """Declared decay data is unusable (non-positive rate or unknown kind)."""


class DomainError(MordellKitError, ValueError):
    """Parameters or arguments lie outside the domain of a function."""


class ConstraintViolation(MordellKitError, ValueError):
    """Identity parameters do not satisfy the identity's constraint."""
