"""Use cases."""

from __future__ import annotations

from chaos_kernel.application.use_cases.evaluate_alpha import (
    EvaluateAlpha,
    EvaluateAlphaRequest,
    EvaluateAlphaResponse,
)
from chaos_kernel.application.use_cases.evaluate_density import (
    EvaluateDensity,
    EvaluateDensityRequest,
    EvaluateDensityResponse,
)
from chaos_kernel.application.use_cases.evaluate_transform import (
    EvaluateTransform,
    EvaluateTransformRequest,
    EvaluateTransformResponse,
    TransformKind,
)
from chaos_kernel.application.use_cases.export_curves import (
    CurveKind,
    ExportCurves,
    ExportCurvesRequest,
    ExportCurvesResponse,
)
from chaos_kernel.application.use_cases.find_roots import (
    FindRoots,
    FindRootsRequest,
    FindRootsResponse,
)
from chaos_kernel.application.use_cases.run_simulation import (
    RunSimulation,
    RunSimulationRequest,
    RunSimulationResponse,
    SimulationKind,
)
from chaos_kernel.application.use_cases.run_validation import (
    RunValidation,
    RunValidationRequest,
    RunValidationResponse,
)

__all__ = [
    "CurveKind",
    "EvaluateAlpha",
    "EvaluateAlphaRequest",
    "EvaluateAlphaResponse",
    "EvaluateDensity",
    "EvaluateDensityRequest",
    "EvaluateDensityResponse",
    "EvaluateTransform",
    "EvaluateTransformRequest",
    "EvaluateTransformResponse",
    "ExportCurves",
    "ExportCurvesRequest",
    "ExportCurvesResponse",
    "FindRoots",
    "FindRootsRequest",
    "FindRootsResponse",
    "RunSimulation",
    "RunSimulationRequest",
    "RunSimulationResponse",
    "RunValidation",
    "RunValidationRequest",
    "RunValidationResponse",
    "SimulationKind",
    "TransformKind",
]
