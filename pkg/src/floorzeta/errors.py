"""Exception types shared across the package."""


class FloorZetaError(Exception):
    """Base class for all package errors."""


class InvalidArgument(FloorZetaError, ValueError):
    """An argument violates an operation's precondition."""


class DomainError(FloorZetaError, ValueError):
    """Evaluation requested outside a series' convergence domain."""


class InternalInconsistency(FloorZetaError, ArithmeticError):
    """An exact computation produced a value that cannot be right.

    Raised, for example, when a Bernoulli-based power sum is not an integer.
    """


class BudgetExceeded(FloorZetaError, RuntimeError):
    """A brute-force or series evaluation would exceed its term cap."""
