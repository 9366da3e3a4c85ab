"""Evaluate density use case."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from chaos_kernel.application.services import density
from chaos_kernel.application.services.numerics import DEFAULT_MAX_PANELS
from chaos_kernel.domain.entities.chaos_point import ChaosPoint
from chaos_kernel.domain.exceptions import AsymptoticUndefinedError, InvalidParameterError
from chaos_kernel.domain.value_objects.regime import Regime
from chaos_kernel.domain.value_objects.report_record import ORDER_ESTIMATE, ReportRecord

logger = logging.getLogger(__name__)


@dataclass
class EvaluateDensityRequest:
    """Request to evaluate the density at a point or along an x-sweep."""

    point: ChaosPoint
    s: float = 1.0
    xs: Sequence[float] = field(default_factory=tuple)
    exact: bool = True
    asymptotic: bool = False
    tol: float = density.DENSITY_TOL
    epsilon: float = density.EPSILON
    mu_threshold: float = density.MU_THRESHOLD
    max_panels: int = DEFAULT_MAX_PANELS
    attempts: int = 3
    oscillation_budget: float = density.OSCILLATION_BUDGET


@dataclass
class EvaluateDensityResponse:
    """Response with density records, produced lazily in sweep order."""

    records: Iterator[ReportRecord]


def _inputs(p: ChaosPoint, s: float) -> dict[str, float | int | str]:
    return {"w": p.w, "beta": p.beta, "x": p.x, "zeta": p.zeta, "z": p.z, "s": s}


class EvaluateDensity:
    """Use case for q_exact and q_asymptotic."""

    def execute(self, request: EvaluateDensityRequest) -> EvaluateDensityResponse:
        """Execute the density use case.

        Raises:
            InvalidParameterError: If neither method is requested or s <= 0
        """
        if not (request.exact or request.asymptotic):
            raise InvalidParameterError("Request at least one of exact and asymptotic")
        if not request.s > 0:
            raise InvalidParameterError(f"Proper time must be positive, got {request.s}")
        points = [request.point.with_x(x) for x in request.xs] or [request.point]
        return EvaluateDensityResponse(records=self._records(request, points))

    def _records(
        self, request: EvaluateDensityRequest, points: list[ChaosPoint]
    ) -> Iterator[ReportRecord]:
        for point in points:
            if request.exact:
                yield self._exact(request, point)
            if request.asymptotic:
                yield self._asymptotic(request, point)

    def _exact(self, request: EvaluateDensityRequest, point: ChaosPoint) -> ReportRecord:
        result = density.q_exact(
            point,
            request.s,
            request.tol,
            max_panels=request.max_panels,
            attempts=request.attempts,
            oscillation_budget=request.oscillation_budget,
        )
        return ReportRecord.from_quad("q_exact", _inputs(point, request.s), result)

    def _asymptotic(self, request: EvaluateDensityRequest, point: ChaosPoint) -> ReportRecord:
        value, report = density.q_asymptotic(
            point, request.s, request.epsilon, request.mu_threshold
        )
        if value is None:
            raise AsymptoticUndefinedError(
                f"Small-time equivalent undefined at {point.as_tuple()}: μ_s = {report.mu:.6g} <= 0"
            )
        flags = [ORDER_ESTIMATE, f"regime_{report.satisfied.value}"]
        if report.satisfied is Regime.NONE:
            logger.warning("No validity condition holds at %s, s=%s", point, request.s)
        # Relative error O(μ^{ε−1}) with an unknown constant.
        order = value * report.mu ** (request.epsilon - 1.0)
        return ReportRecord(
            operation="q_asymptotic",
            inputs=_inputs(point, request.s),
            value=value,
            error_estimate=order,
            method="small-time equivalent",
            flags=tuple(flags),
            extra={"mu": report.mu, "epsilon": report.epsilon},
        )
