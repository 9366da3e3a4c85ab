"""Test evaluate transform use case."""

from __future__ import annotations

import math

import pytest

from chaos_kernel.application.use_cases.evaluate_transform import (
    EvaluateTransform,
    EvaluateTransformRequest,
    TransformKind,
)
from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.exceptions import DomainError


@pytest.fixture
def use_case() -> EvaluateTransform:
    """Create evaluate transform use case."""
    return EvaluateTransform()


class TestEvaluateTransform:
    """Test EvaluateTransform use case."""

    def test_flt_z(self, use_case: EvaluateTransform) -> None:
        """Test the zero-frequency transform."""
        request = EvaluateTransformRequest(kind=TransformKind.FLT_Z, s=1.0, b=1.0)
        record = use_case.execute(request).record
        assert record.operation == "flt_z"
        assert record.value == pytest.approx(math.cosh(1.0) ** -0.5)
        assert record.value_imag is None
        assert record.method == "closed_form"
        assert 0 < record.error_estimate < 1e-12

    def test_flt_y(self, use_case: EvaluateTransform) -> None:
        """Test the product of the two Langevin factors."""
        request = EvaluateTransformRequest(kind=TransformKind.FLT_Y, s=1.0, b=1.0)
        assert use_case.execute(request).record.value == pytest.approx(1.0 / math.cosh(1.0))

    def test_phi_complex(self, use_case: EvaluateTransform, marginal_point: MarginalPoint) -> None:
        """Test a complex value of Φ split into real and imaginary parts."""
        request = EvaluateTransformRequest(
            kind=TransformKind.PHI, point=marginal_point, lam=1.0 + 2.0j
        )
        record = use_case.execute(request).record
        assert record.value_imag is not None
        assert record.inputs["lam"] == "(1+2j)"

    def test_psi_matches_phi(
        self, use_case: EvaluateTransform, marginal_point: MarginalPoint
    ) -> None:
        """Test Ψ(b) against Φ(−b²) through the use case."""
        psi = use_case.execute(
            EvaluateTransformRequest(kind=TransformKind.PSI, point=marginal_point, b=0.7)
        ).record
        phi = use_case.execute(
            EvaluateTransformRequest(kind=TransformKind.PHI, point=marginal_point, lam=-0.49)
        ).record
        assert psi.value == pytest.approx(phi.value, rel=1e-12)

    def test_langevin_default_point(self, use_case: EvaluateTransform) -> None:
        """Test the Langevin density peak."""
        request = EvaluateTransformRequest(kind=TransformKind.LANGEVIN, s=1.0)
        assert use_case.execute(request).record.value == pytest.approx(math.sqrt(3.0) / math.pi)

    def test_laplace_z1(self, use_case: EvaluateTransform) -> None:
        """Test that b = 0 reproduces the Langevin density."""
        request = EvaluateTransformRequest(kind=TransformKind.LAPLACE_Z1, w=0.0, z=0.0, b=0.0)
        assert use_case.execute(request).record.value == pytest.approx(math.sqrt(3.0) / math.pi)

    def test_phi_outside_domain(self, use_case: EvaluateTransform) -> None:
        """Test that ℜλ >= 4π² propagates as a domain error."""
        with pytest.raises(DomainError):
            use_case.execute(EvaluateTransformRequest(kind=TransformKind.PHI, lam=50.0))
