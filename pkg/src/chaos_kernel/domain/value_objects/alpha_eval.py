"""Second-chaos density evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from chaos_kernel.domain.exceptions import InvalidParameterError, NumericFailureError


class AlphaMethod(str, Enum):
    """How alpha_1 was evaluated."""

    SERIES = "series"
    INTEGRAL = "integral"
    REFLECTION = "reflection"


@dataclass(frozen=True)
class AlphaEval:
    """Value of the density alpha_1 at x with its error estimate."""

    x: float
    value: float
    method: AlphaMethod
    est_error: float

    def __post_init__(self) -> None:
        """Validate evaluation after initialization."""
        if not self.x > 0:
            raise InvalidParameterError(f"alpha_1 is evaluated at x > 0, got {self.x}")
        if not (math.isfinite(self.value) and math.isfinite(self.est_error)):
            raise NumericFailureError(f"alpha_1({self.x}) is not finite")
        if self.est_error < 0:
            raise InvalidParameterError("Error estimate must be nonnegative")
        if self.value < -self.est_error:
            raise NumericFailureError(
                f"alpha_1({self.x}) = {self.value} is negative beyond its error {self.est_error}"
            )
