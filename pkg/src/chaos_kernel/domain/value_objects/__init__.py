"""Value objects for the domain."""

from __future__ import annotations

from chaos_kernel.domain.value_objects.alpha_eval import AlphaEval, AlphaMethod
from chaos_kernel.domain.value_objects.aux_values import AuxValues, RegularizedAux
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome
from chaos_kernel.domain.value_objects.ensembles import (
    DudleyEnsemble,
    Estimate,
    RemainderSurvey,
    RemainderRow,
    TangentSample,
)
from chaos_kernel.domain.value_objects.envelope import DecayEnvelope, EnvelopeKind
from chaos_kernel.domain.value_objects.field_vector import FieldVector
from chaos_kernel.domain.value_objects.fl_query import FLQueryY, FLQueryZ
from chaos_kernel.domain.value_objects.output_format import OutputFormat
from chaos_kernel.domain.value_objects.quad_result import QuadResult
from chaos_kernel.domain.value_objects.regime import Regime, RegimeReport
from chaos_kernel.domain.value_objects.report_record import ReportRecord
from chaos_kernel.domain.value_objects.scale_params import ScaleParams
from chaos_kernel.domain.value_objects.scheme import Scheme

__all__ = [
    "AlphaEval",
    "AlphaMethod",
    "AuxValues",
    "CheckOutcome",
    "DecayEnvelope",
    "DudleyEnsemble",
    "EnvelopeKind",
    "Estimate",
    "FLQueryY",
    "FLQueryZ",
    "FieldVector",
    "OutputFormat",
    "QuadResult",
    "Regime",
    "RegimeReport",
    "RegularizedAux",
    "RemainderSurvey",
    "RemainderRow",
    "ReportRecord",
    "ScaleParams",
    "Scheme",
    "TangentSample",
]
