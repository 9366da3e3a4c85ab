"""Evaluate alpha use case."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace
from typing import Final

from chaos_kernel.application.services import alpha
from chaos_kernel.application.services.numerics import ROUNDOFF
from chaos_kernel.domain.exceptions import InvalidParameterError
from chaos_kernel.domain.value_objects.alpha_eval import AlphaMethod
from chaos_kernel.domain.value_objects.report_record import ReportRecord

BOTH: Final = "both"
AUTO: Final = "auto"


@dataclass
class EvaluateAlphaRequest:
    """Request to evaluate the law of the chaos coordinate A_s."""

    xs: Sequence[float] = field(default_factory=tuple)
    s: float = 1.0
    method: str = AUTO
    cdf: bool = False
    laplace: Sequence[float] = field(default_factory=tuple)
    threshold: float = alpha.SERIES_THRESHOLD
    tol: float = alpha.DEFAULT_TOL
    laplace_tol: float = alpha.LAPLACE_TOL


@dataclass
class EvaluateAlphaResponse:
    """Response with density, distribution and transform records."""

    records: Iterator[ReportRecord]


def _methods(name: str) -> list[AlphaMethod | None]:
    if name == AUTO:
        return [None]
    if name == BOTH:
        return [AlphaMethod.SERIES, AlphaMethod.INTEGRAL]
    try:
        return [AlphaMethod(name)]
    except ValueError as e:
        raise InvalidParameterError(f"Unknown alpha method {name!r}") from e


class EvaluateAlpha:
    """Use case for α_s values, its distribution function and its Laplace transform."""

    def execute(self, request: EvaluateAlphaRequest) -> EvaluateAlphaResponse:
        """Execute the alpha use case.

        Raises:
            InvalidParameterError: If s is not positive, nothing is requested or
                the method is unknown
        """
        if not request.s > 0:
            raise InvalidParameterError(f"Proper time must be positive, got {request.s}")
        if not (request.xs or request.laplace):
            raise InvalidParameterError("Give chaos values or Laplace exponents")
        methods = _methods(request.method)
        return EvaluateAlphaResponse(records=self._records(request, methods))

    def _records(
        self, request: EvaluateAlphaRequest, methods: list[AlphaMethod | None]
    ) -> Iterator[ReportRecord]:
        s_sq = request.s * request.s
        for x in request.xs:
            inputs: dict[str, float | int | str] = {"x": x, "s": request.s}
            for method in methods:
                unit = alpha.alpha1(x / s_sq, method, request.threshold, request.tol)
                yield ReportRecord(
                    operation="alpha",
                    inputs=inputs,
                    value=unit.value / s_sq,
                    error_estimate=unit.est_error / s_sq,
                    method=unit.method.value,
                )
            if request.cdf:
                yield ReportRecord(
                    operation="alpha_cdf",
                    inputs=inputs,
                    value=alpha.alpha1_cdf(x / s_sq),
                    error_estimate=ROUNDOFF,
                    method="theta series",
                )
        for lam in request.laplace:
            result = alpha.alpha_laplace(lam, request.laplace_tol)
            record = ReportRecord.from_quad("alpha_laplace", {"lambda": lam}, result)
            closed = alpha.laplace_closed_form(lam)
            yield replace(record, extra={**record.extra, "closed_form": closed})
