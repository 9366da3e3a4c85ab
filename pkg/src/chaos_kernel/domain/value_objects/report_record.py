"""Report record value object."""

from __future__ import annotations

import math
import sys
from collections.abc import Mapping
from dataclasses import dataclass, field

from chaos_kernel.domain.exceptions import InvalidParameterError, NumericFailureError
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome, Verdict
from chaos_kernel.domain.value_objects.quad_result import QuadResult

type Scalar = float | int | str

ORDER_ESTIMATE = "order_estimate"
MC_STANDARD_ERROR = "mc_standard_error"


@dataclass(frozen=True)
class ReportRecord:
    """One emitted number with its inputs, error estimate and provenance.

    ``error_estimate`` is a quadrature or truncation bound, a Monte Carlo
    standard error (flag ``mc_standard_error``) or, for small-time
    equivalents, the order of the neglected term (flag ``order_estimate``).
    Checks additionally carry their ``threshold`` and ``verdict``.
    """

    operation: str
    inputs: Mapping[str, Scalar]
    value: float
    error_estimate: float
    method: str
    flags: tuple[str, ...] = ()
    seed: int | None = None
    value_imag: float | None = None
    threshold: float | None = None
    verdict: Verdict | None = None
    detail: str = ""
    extra: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate record after initialization."""
        if not self.operation:
            raise InvalidParameterError("Report record needs an operation name")
        if not math.isfinite(self.value):
            raise NumericFailureError(f"{self.operation}: value {self.value} is not finite")
        if not (math.isfinite(self.error_estimate) and self.error_estimate >= 0):
            raise InvalidParameterError(
                f"{self.operation}: error estimate must be finite and nonnegative, "
                f"got {self.error_estimate}"
            )

    @classmethod
    def from_quad(
        cls,
        operation: str,
        inputs: Mapping[str, Scalar],
        result: QuadResult,
        method: str = "quadrature",
    ) -> ReportRecord:
        """Record of a quadrature result, keeping its flags and imaginary part."""
        return cls(
            operation=operation,
            inputs=inputs,
            value=result.value.real,
            error_estimate=result.error,
            method=method,
            flags=tuple(sorted(result.flags)),
            value_imag=result.value.imag if result.value.imag != 0 else None,
            extra={"truncation": result.truncation, "panels": float(result.panels_used)},
        )

    @classmethod
    def from_check(cls, outcome: CheckOutcome, seed: int | None = None) -> ReportRecord:
        """Record of a check: the measured figure against its threshold."""
        return cls(
            operation=outcome.name,
            inputs={},
            value=min(outcome.measured, sys.float_info.max),
            error_estimate=0.0,
            method="check",
            seed=seed,
            threshold=outcome.threshold,
            verdict=outcome.verdict,
            detail=outcome.detail,
        )
