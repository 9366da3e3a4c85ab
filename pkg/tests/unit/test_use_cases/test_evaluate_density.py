"""Test evaluate density use case."""

from __future__ import annotations

import pytest

from chaos_kernel.application.use_cases.evaluate_density import (
    EvaluateDensity,
    EvaluateDensityRequest,
)
from chaos_kernel.domain.entities.chaos_point import ChaosPoint
from chaos_kernel.domain.exceptions import AsymptoticUndefinedError, InvalidParameterError
from chaos_kernel.domain.value_objects.report_record import ORDER_ESTIMATE


@pytest.fixture
def use_case() -> EvaluateDensity:
    """Create evaluate density use case."""
    return EvaluateDensity()


class TestEvaluateDensity:
    """Test EvaluateDensity use case."""

    def test_exact_record(self, use_case: EvaluateDensity, chaos_point: ChaosPoint) -> None:
        """Test one quadrature record with its inputs."""
        records = list(use_case.execute(EvaluateDensityRequest(point=chaos_point)).records)
        assert len(records) == 1
        assert records[0].operation == "q_exact"
        assert records[0].inputs["x"] == chaos_point.x
        assert records[0].value > 0
        assert records[0].error_estimate > 0

    def test_sweep_order(self, use_case: EvaluateDensity, chaos_point: ChaosPoint) -> None:
        """Test that a sweep yields records in x order."""
        request = EvaluateDensityRequest(point=chaos_point, xs=[0.2, 0.4])
        records = list(use_case.execute(request).records)
        assert [r.inputs["x"] for r in records] == [0.2, 0.4]

    def test_asymptotic_record(self, use_case: EvaluateDensity) -> None:
        """Test the small-time equivalent with its regime flag."""
        point = ChaosPoint(w=0.0, beta=0.0, x=0.001, zeta=0.0, z=0.2)
        request = EvaluateDensityRequest(point=point, s=0.1, exact=False, asymptotic=True)
        (record,) = list(use_case.execute(request).records)
        assert record.operation == "q_asymptotic"
        assert ORDER_ESTIMATE in record.flags
        assert "regime_large_mu" in record.flags
        assert record.extra["mu"] == pytest.approx(23.9)

    def test_asymptotic_undefined(self, use_case: EvaluateDensity) -> None:
        """Test that μ_s <= 0 raises when the generator runs."""
        point = ChaosPoint(w=0.0, beta=0.0, x=1.0, zeta=0.0, z=0.0)
        request = EvaluateDensityRequest(point=point, exact=False, asymptotic=True)
        records = use_case.execute(request).records
        with pytest.raises(AsymptoticUndefinedError):
            list(records)

    def test_nothing_requested(self, use_case: EvaluateDensity, chaos_point: ChaosPoint) -> None:
        """Test that neither method is refused eagerly."""
        with pytest.raises(InvalidParameterError):
            use_case.execute(EvaluateDensityRequest(point=chaos_point, exact=False))

    def test_invalid_time(self, use_case: EvaluateDensity, chaos_point: ChaosPoint) -> None:
        """Test that s <= 0 is refused eagerly."""
        with pytest.raises(InvalidParameterError):
            use_case.execute(EvaluateDensityRequest(point=chaos_point, s=-1.0))
