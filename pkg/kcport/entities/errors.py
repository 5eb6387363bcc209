"""Exception hierarchy shared by every layer."""


class KcportError(Exception):
    """Root of all kcport errors."""


class InputValidationError(KcportError, ValueError):
    """Raised when an input violates a documented precondition."""


class ComputationError(KcportError, RuntimeError):
    """Raised when a numerical computation cannot produce a finite result."""
