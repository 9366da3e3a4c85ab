"""Find roots use case."""

from __future__ import annotations

import math
from dataclasses import dataclass

from chaos_kernel.application.services import special
from chaos_kernel.application.services.numerics import ROUNDOFF
from chaos_kernel.domain.exceptions import InvalidParameterError
from chaos_kernel.domain.value_objects.report_record import ReportRecord


@dataclass
class FindRootsRequest:
    """Request for the root sequences of tg y = y and sh²z + cos²z = 0."""

    tan_fixed_points: int = 0
    sh2cos2_zeros: int = 0


@dataclass
class FindRootsResponse:
    """Response with one record per root, in increasing order."""

    records: list[ReportRecord]


class FindRoots:
    """Use case for the root sequences behind the chaos density series."""

    def execute(self, request: FindRootsRequest) -> FindRootsResponse:
        """Execute the roots use case.

        Raises:
            InvalidParameterError: If no roots are requested
        """
        if request.tan_fixed_points < 1 and request.sh2cos2_zeros < 1:
            raise InvalidParameterError("Request at least one root")
        records = []
        if request.tan_fixed_points > 0:
            for n, y in enumerate(special.tan_fixed_points(request.tan_fixed_points)):
                residual = special.tan_residual(y)
                records.append(
                    ReportRecord(
                        operation="tan_fixed_point",
                        inputs={"n": n},
                        value=y,
                        # Residual over the slope y sin y of sin y − y cos y.
                        error_estimate=residual / abs(y * math.sin(y)),
                        method="bisection+newton",
                        extra={"residual": residual, "gap": (n + 1.5) * math.pi - y},
                    )
                )
        if request.sh2cos2_zeros > 0:
            for n, z in enumerate(special.sh2cos2_zeros(request.sh2cos2_zeros)):
                residual = special.sh2cos2_residual(z, relative=True)
                records.append(
                    ReportRecord(
                        operation="sh2cos2_zero",
                        inputs={"n": n},
                        value=z.real,
                        value_imag=z.imag,
                        error_estimate=ROUNDOFF * abs(z),
                        method="closed_form",
                        extra={"relative_residual": residual},
                    )
                )
        return FindRootsResponse(records=records)
