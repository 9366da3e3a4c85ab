"""Domain layer - points, parameters and results shared by the numerical services."""

from __future__ import annotations

from chaos_kernel.domain.entities import ChaosPoint, MarginalPoint, PathConfig, PhasePoint
from chaos_kernel.domain.exceptions import ChaosKernelError
from chaos_kernel.domain.value_objects import (
    AlphaEval,
    AuxValues,
    DecayEnvelope,
    QuadResult,
    RegimeReport,
    RegularizedAux,
    ScaleParams,
)

__all__ = [
    "AlphaEval",
    "AuxValues",
    "ChaosKernelError",
    "ChaosPoint",
    "DecayEnvelope",
    "MarginalPoint",
    "PathConfig",
    "PhasePoint",
    "QuadResult",
    "RegimeReport",
    "RegularizedAux",
    "ScaleParams",
]
