"""Exception hierarchy shared by every module."""


class EvidenceError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(EvidenceError, ValueError):
    """Malformed frame, subset, mass function or input document."""


class DegenerateEvidenceError(EvidenceError, ArithmeticError):
    """The requested quantity is mathematically undefined.

    Raised when all mass sits on the empty set (so ``1 - m(empty)`` is zero)
    and when Dempster's rule meets total conflict.
    """
