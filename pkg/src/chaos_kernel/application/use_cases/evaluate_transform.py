"""Evaluate transform use case."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from chaos_kernel.application.services import transforms
from chaos_kernel.application.services.numerics import ROUNDOFF
from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.value_objects.fl_query import FLQueryY, FLQueryZ
from chaos_kernel.domain.value_objects.report_record import ReportRecord

CLOSED_FORM = "closed_form"


class TransformKind(str, Enum):
    """Closed-form transforms the CLI exposes."""

    FLT_Z = "flt_z"
    FLT_Y = "flt_y"
    PSI = "psi"
    PHI = "phi"
    LAPLACE_Z1 = "laplace_z1"
    LANGEVIN = "langevin"


@dataclass
class EvaluateTransformRequest:
    """Request to evaluate one transform.

    Unused fields are ignored: ``flt_z`` reads (s, r, c, b), ``flt_y`` also
    (rho, gamma), ``psi`` reads (point, b), ``phi`` reads (point, lam),
    ``laplace_z1`` reads (w, z, b) and ``langevin`` reads (s, w, z).
    """

    kind: TransformKind
    s: float = 1.0
    r: float = 0.0
    c: float = 0.0
    rho: float = 0.0
    gamma: float = 0.0
    b: float = 0.0
    lam: complex = 0j
    w: float = 0.0
    z: float = 0.0
    point: MarginalPoint | None = None


@dataclass
class EvaluateTransformResponse:
    """Response with the transform record."""

    record: ReportRecord


class EvaluateTransform:
    """Use case for the Fourier-Laplace transforms and Gaussian densities."""

    def execute(self, request: EvaluateTransformRequest) -> EvaluateTransformResponse:
        """Execute the transform use case."""
        point = request.point or MarginalPoint.origin()
        inputs: dict[str, float | int | str]
        value: complex
        match request.kind:
            case TransformKind.FLT_Z:
                inputs = {"s": request.s, "r": request.r, "c": request.c, "b": request.b}
                value = transforms.flt_Z(FLQueryZ(request.s, request.r, request.c, request.b))
            case TransformKind.FLT_Y:
                inputs = {
                    "s": request.s,
                    "r": request.r,
                    "rho": request.rho,
                    "gamma": request.gamma,
                    "c": request.c,
                    "b": request.b,
                }
                query = FLQueryY(
                    request.s, request.r, request.rho, request.gamma, request.c, request.b
                )
                value = transforms.flt_Y(query)
            case TransformKind.PSI:
                inputs = {**_point_inputs(point), "b": request.b}
                value = transforms.psi(point, request.b)
            case TransformKind.PHI:
                inputs = {**_point_inputs(point), "lam": str(request.lam)}
                value = transforms.phi(point, request.lam)
            case TransformKind.LAPLACE_Z1:
                inputs = {"w": request.w, "z": request.z, "b": request.b}
                value = transforms.laplace_Z1(request.w, request.z, request.b)
            case TransformKind.LANGEVIN:
                inputs = {"s": request.s, "w": request.w, "z": request.z}
                value = transforms.langevin_density(request.s, request.w, request.z)
        value = complex(value)
        return EvaluateTransformResponse(
            record=ReportRecord(
                operation=request.kind.value,
                inputs=inputs,
                value=value.real,
                value_imag=value.imag if value.imag != 0 else None,
                # Closed forms carry only rounding error.
                error_estimate=ROUNDOFF * max(abs(value), math.ulp(1.0)),
                method=CLOSED_FORM,
            )
        )


def _point_inputs(p: MarginalPoint) -> dict[str, float | int | str]:
    return {"w": p.w, "beta": p.beta, "zeta": p.zeta, "z": p.z}
