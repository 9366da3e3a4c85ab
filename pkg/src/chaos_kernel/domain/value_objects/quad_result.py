"""Quadrature result value object."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from chaos_kernel.domain.exceptions import InvalidParameterError, NumericFailureError

CONSISTENT_WITH_ZERO = "consistent_with_zero"
NEGATIVE_WITHIN_ERROR = "negative_within_error"


@dataclass(frozen=True)
class QuadResult:
    """Value of a semi-infinite integral with its error budget.

    ``quad_error`` estimates the error of the panel rule on [0, truncation],
    ``tail_bound`` bounds the discarded integral over [truncation, inf).
    """

    value: complex
    quad_error: float
    tail_bound: float
    panels_used: int
    truncation: float = 0.0
    flags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        """Validate result after initialization."""
        if not cmath.isfinite(self.value):
            raise NumericFailureError(f"Quadrature produced a non-finite value {self.value}")
        if self.quad_error < 0 or self.tail_bound < 0:
            raise InvalidParameterError("Quadrature error terms must be nonnegative")
        if not (math.isfinite(self.quad_error) and math.isfinite(self.tail_bound)):
            raise NumericFailureError("Quadrature error terms must be finite")

    @property
    def error(self) -> float:
        """Total reported error."""
        return self.quad_error + self.tail_bound

    @property
    def real(self) -> float:
        """Real part of the value."""
        return self.value.real

    def scaled(self, factor: float, extra_flags: frozenset[str] = frozenset()) -> QuadResult:
        """Result of multiplying the integral by a positive constant."""
        if factor < 0:
            raise InvalidParameterError(f"Scale factor must be nonnegative, got {factor}")
        return QuadResult(
            value=self.value * factor,
            quad_error=self.quad_error * factor,
            tail_bound=self.tail_bound * factor,
            panels_used=self.panels_used,
            truncation=self.truncation,
            flags=self.flags | extra_flags,
        )
