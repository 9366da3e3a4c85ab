"""Domain exceptions."""

from __future__ import annotations


class ChaosKernelError(Exception):
    """Base exception for every failure raised by the library."""


class InvalidParameterError(ChaosKernelError):
    """Raised when an input violates an operation precondition (e.g. s <= 0)."""


class NumericFailureError(ChaosKernelError):
    """Raised when a NaN or infinity would otherwise propagate silently."""


class BranchCutError(ChaosKernelError):
    """Raised when the principal square root is asked for on the open negative real axis."""


class NoSignChangeError(ChaosKernelError):
    """Raised when a bracketing root finder gets f(lo) and f(hi) of the same sign."""


class ConvergenceError(ChaosKernelError):
    """Raised when an iterative method exhausts its iteration cap."""


class EnvelopeViolationError(ChaosKernelError):
    """Raised when a sampled integrand exceeds its declared decay envelope."""


class ToleranceUnreachableError(ChaosKernelError):
    """Raised when adaptive quadrature cannot meet tolerance within its panel budget."""


class OscillationBudgetError(ChaosKernelError):
    """Raised when an integrand oscillates more than the quadrature is allowed to resolve."""


class SeriesUnreliableError(ChaosKernelError):
    """Raised when a series is requested below its reliability threshold."""


class DomainError(ChaosKernelError):
    """Raised when an argument lies outside the analyticity domain of a transform."""


class AsymptoticUndefinedError(ChaosKernelError):
    """Raised when the small-time equivalent is undefined (mu_s <= 0)."""


class PathBlowUpError(ChaosKernelError):
    """Raised when a simulated path leaves the numerically safe region."""


class InsufficientPathsError(ChaosKernelError):
    """Raised when a Monte Carlo request has too few paths for the requested statistic."""
