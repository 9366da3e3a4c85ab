"""Export curves use case."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np
import numpy.typing as npt

from chaos_kernel.application.services import alpha, density, special
from chaos_kernel.application.services.numerics import ROUNDOFF
from chaos_kernel.domain.entities.chaos_point import ChaosPoint
from chaos_kernel.domain.exceptions import InvalidParameterError
from chaos_kernel.domain.value_objects.report_record import ReportRecord

logger = logging.getLogger(__name__)


class CurveKind(str, Enum):
    """Curves available for export."""

    ALPHA = "alpha"
    AUX = "aux"
    DENSITY = "density"


@dataclass
class ExportCurvesRequest:
    """Request to sample a curve on [start, stop] at evenly spaced abscissae.

    ``density`` sweeps the chaos coordinate of ``point`` at proper time ``s``.
    """

    curve: CurveKind
    start: float
    stop: float
    points: int = 100
    point: ChaosPoint | None = None
    s: float = 1.0
    tol: float = density.DENSITY_TOL


@dataclass
class ExportCurvesResponse:
    """Response with curve rows, streamed in abscissa order."""

    records: Iterator[ReportRecord]


class ExportCurves:
    """Use case for sampling curves for external plotting."""

    def execute(self, request: ExportCurvesRequest) -> ExportCurvesResponse:
        """Execute the export use case.

        Raises:
            InvalidParameterError: If the range or the point count is invalid
        """
        if request.points < 2 or not request.start < request.stop:
            raise InvalidParameterError(
                f"Need at least 2 points on a nonempty range, got {request.points} on "
                f"[{request.start}, {request.stop}]"
            )
        if request.curve is CurveKind.ALPHA and request.start <= 0:
            raise InvalidParameterError("The alpha curve needs positive abscissae")
        if request.curve is CurveKind.DENSITY and not (request.s > 0 and request.start > 0):
            raise InvalidParameterError(
                f"Density sweeps need s > 0 and x > 0, got s={request.s}, start={request.start}"
            )
        if request.curve is CurveKind.AUX and request.start < 0:
            raise InvalidParameterError("Auxiliary functions are sampled on ξ >= 0")
        grid = np.linspace(request.start, request.stop, request.points)
        match request.curve:
            case CurveKind.ALPHA:
                records = self._alpha(grid)
            case CurveKind.AUX:
                records = self._aux(grid)
            case CurveKind.DENSITY:
                records = self._density(request, grid)
        return ExportCurvesResponse(records=records)

    def _alpha(self, grid: npt.NDArray[np.float64]) -> Iterator[ReportRecord]:
        for x in map(float, grid):
            best = alpha.alpha1(x)
            extra = {"cdf": alpha.alpha1_cdf(x), "tail_asymptote": alpha.tail_asymptote(x)}
            # Below the threshold only the integral and the reflection series apply.
            if x >= alpha.SERIES_THRESHOLD:
                extra["series"] = alpha.alpha1_series(x).value
                extra["integral"] = alpha.alpha1_integral(x).value
            yield ReportRecord(
                operation="alpha_curve",
                inputs={"x": x},
                value=best.value,
                error_estimate=best.est_error,
                method=best.method.value,
                extra=extra,
            )

    def _aux(self, grid: npt.NDArray[np.float64]) -> Iterator[ReportRecord]:
        table = special.aux_table(grid)
        for i, xi in enumerate(grid):
            yield ReportRecord(
                operation="aux_curve",
                inputs={"xi": float(xi)},
                value=float(table.f_r_reg[i]),
                error_estimate=ROUNDOFF * max(abs(float(table.f_r_reg[i])), 1.0),
                method="closed_form",
                extra={
                    "f_i_reg": float(table.f_i_reg[i]),
                    "tilde_u_r": float(table.tilde_u_r[i]),
                    "tilde_u_i": float(table.tilde_u_i[i]),
                    "tilde_v_r": float(table.tilde_v_r[i]),
                    "tilde_v_i": float(table.tilde_v_i[i]),
                },
            )

    def _density(
        self, request: ExportCurvesRequest, grid: npt.NDArray[np.float64]
    ) -> Iterator[ReportRecord]:
        base = request.point or ChaosPoint(w=0.0, beta=0.0, x=1.0, zeta=0.0, z=0.0)
        for x in grid:
            point = base.with_x(float(x))
            inputs: dict[str, float | int | str] = {"x": float(x), "s": request.s}
            exact = density.q_exact(point, request.s, request.tol)
            value, report = density.q_asymptotic(point, request.s)
            extra = {"mu": report.mu}
            if value is not None:
                extra["asymptotic"] = value
                extra["ratio"] = exact.real / value if value > 0 else 0.0
            record = ReportRecord.from_quad("density_curve", inputs, exact)
            yield replace(
                record,
                flags=(*record.flags, f"regime_{report.satisfied.value}"),
                extra={**record.extra, **extra},
            )
