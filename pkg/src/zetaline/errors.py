"""Exception types shared across the toolkit."""


class ZetalineError(Exception):
    """Base class for all toolkit errors."""


class PoleError(ZetalineError, ValueError):
    """Evaluation requested at a pole of the function."""


class DomainError(ZetalineError, ValueError):
    """Argument outside the supported domain of an operation."""


class AccuracyError(ZetalineError, ArithmeticError):
    """Requested accuracy cannot be reached within the term budget."""


class RangeOverflowError(ZetalineError, OverflowError):
    """Result modulus exceeds the representable floating-point range."""


class ConvergenceError(ZetalineError, RuntimeError):
    """An iterative solver failed to converge; indicates a bug on valid input."""


class CacheError(ZetalineError, ValueError):
    """A persisted cache file is corrupt or inconsistent."""
