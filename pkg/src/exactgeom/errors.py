"""Exceptions shared across the toolkit."""


class DomainMismatchError(TypeError):
    """Raised when operands live in different coefficient domains or rings."""


class InterpolationError(RuntimeError):
    """Raised when a determinant interpolation cannot be carried out exactly.

    This is an internal error: it means a degree bound exceeded the number of
    available sample points, never that a result was silently truncated.
    """


class VerificationError(AssertionError):
    """Raised when an internally re-checked identity fails to hold."""
