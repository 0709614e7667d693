"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's domain (bad q, degree, file, ...)."""


class UnsupportedRangeError(DomainError):
    """Input is syntactically fine but beyond the supported size range."""


class IntegrityError(RuntimeError):
    """An internal self-check failed; indicates a computation bug, never
    bad user input."""


class PrecisionError(RuntimeError):
    """Floating-point oracle could not reach an acceptable residual."""
