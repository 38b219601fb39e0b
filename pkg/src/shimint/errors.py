class ShimintError(Exception):
    """Base class for errors raised by this package."""


class InvalidInput(ShimintError, ValueError):
    """Input violates a precondition (bad discriminant, level, class...)."""


class UnsupportedConfiguration(ShimintError):
    """Valid input that a requested method cannot handle (e.g. oracle table)."""


class ConsistencyError(AssertionError):
    """An identity that should hold unconditionally failed; indicates a bug."""
