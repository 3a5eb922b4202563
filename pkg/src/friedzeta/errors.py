"""Exception hierarchy.

Validation errors map to CLI exit code 1, convergence and continuation
failures to exit code 2.
"""

__all__ = [
    "FriedzetaError",
    "ValidationError",
    "CapacityError",
    "ConvergenceError",
    "NotLoxodromicError",
    "ResonanceAtZeroError",
    "NotAcyclicError",
]


class FriedzetaError(Exception):
    """Base class for package errors."""


class ValidationError(FriedzetaError):
    """Invalid input data (exit code 1)."""


class NotLoxodromicError(ValidationError):
    """Elliptic or parabolic Mobius element where loxodromic is required."""


class NotAcyclicError(ValidationError):
    """Chain complex or character fails the acyclicity precondition."""


class CapacityError(FriedzetaError):
    """Exact integer data exceeds the configured safe width (exit code 2)."""


class ConvergenceError(FriedzetaError):
    """Evaluation requested outside the convergence region (exit code 2)."""


class ResonanceAtZeroError(ConvergenceError):
    """A graded determinant vanishes at 0: the zeta value is undefined there."""
