"""Test domain value objects."""

from __future__ import annotations

import math
import sys

import numpy as np
import pytest

from chaos_kernel.domain.exceptions import InvalidParameterError, NumericFailureError
from chaos_kernel.domain.value_objects.alpha_eval import AlphaEval, AlphaMethod
from chaos_kernel.domain.value_objects.aux_values import AuxValues, RegularizedAux
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome
from chaos_kernel.domain.value_objects.ensembles import Estimate, TangentSample
from chaos_kernel.domain.value_objects.envelope import DecayEnvelope, EnvelopeKind
from chaos_kernel.domain.value_objects.field_vector import FieldVector
from chaos_kernel.domain.value_objects.fl_query import FLQueryY, FLQueryZ
from chaos_kernel.domain.value_objects.output_format import OutputFormat
from chaos_kernel.domain.value_objects.quad_result import QuadResult
from chaos_kernel.domain.value_objects.regime import Regime
from chaos_kernel.domain.value_objects.report_record import ReportRecord
from chaos_kernel.domain.value_objects.scale_params import ScaleParams
from chaos_kernel.domain.value_objects.scheme import Scheme


class TestQuadResult:
    """Test QuadResult value object."""

    def test_error_is_panel_error_plus_tail(self) -> None:
        """Test that the reported error adds both budgets."""
        result = QuadResult(value=1.0 + 0j, quad_error=1e-9, tail_bound=2e-9, panels_used=8)
        assert result.error == pytest.approx(3e-9)
        assert result.real == 1.0

    def test_rejects_non_finite_value(self) -> None:
        """Test that NaN values are surfaced."""
        with pytest.raises(NumericFailureError):
            QuadResult(value=complex(math.nan, 0), quad_error=0.0, tail_bound=0.0, panels_used=1)

    def test_rejects_negative_error(self) -> None:
        """Test that error terms must be nonnegative."""
        with pytest.raises(InvalidParameterError):
            QuadResult(value=1.0 + 0j, quad_error=-1.0, tail_bound=0.0, panels_used=1)

    def test_scaled_keeps_flags_and_scales_errors(self) -> None:
        """Test scaling by a positive factor."""
        result = QuadResult(value=2.0 + 0j, quad_error=1e-8, tail_bound=1e-9, panels_used=4)
        scaled = result.scaled(0.5, frozenset({"consistent_with_zero"}))
        assert scaled.real == 1.0
        assert scaled.quad_error == pytest.approx(5e-9)
        assert scaled.tail_bound == pytest.approx(5e-10)
        assert scaled.flags == frozenset({"consistent_with_zero"})


class TestDecayEnvelope:
    """Test DecayEnvelope value object."""

    def test_exponential_tail_matches_integral(self) -> None:
        """Test that a pure exponential tail is bounded exactly."""
        envelope = DecayEnvelope(kind=EnvelopeKind.EXPONENTIAL, rate=2.0, prefactor=1.0)
        # ∫_T^∞ e^{−2t} dt = e^{−2T}/2
        assert math.exp(envelope.log_tail(3.0)) == pytest.approx(math.exp(-6.0) / 2.0)

    def test_bound_decreases(self) -> None:
        """Test that the bound decays past its threshold."""
        envelope = DecayEnvelope(
            kind=EnvelopeKind.EXPONENTIAL, rate=1.0, prefactor=5.0, threshold=2.0, power=4.0
        )
        values = envelope.bound(np.array([10.0, 20.0, 40.0]))
        assert np.all(np.diff(values) < 0)

    def test_sqrt_kind_tail_is_finite(self) -> None:
        """Test the square-root envelope tail."""
        envelope = DecayEnvelope(kind=EnvelopeKind.EXPONENTIAL_SQRT, rate=1.0, prefactor=1.0)
        start = envelope.min_tail_start()
        assert math.isfinite(envelope.log_tail(start))

    def test_power_needs_threshold(self) -> None:
        """Test that a polynomial factor requires a positive threshold."""
        with pytest.raises(InvalidParameterError):
            DecayEnvelope(kind=EnvelopeKind.EXPONENTIAL, rate=1.0, prefactor=1.0, power=2.0)

    def test_tail_below_threshold_rejected(self) -> None:
        """Test that tails cannot start before the threshold."""
        envelope = DecayEnvelope(
            kind=EnvelopeKind.EXPONENTIAL, rate=1.0, prefactor=1.0, threshold=5.0
        )
        with pytest.raises(InvalidParameterError):
            envelope.log_tail(1.0)


class TestFLQuery:
    """Test Fourier-Laplace query value objects."""

    def test_rejects_negative_rate(self) -> None:
        """Test that the Laplace rate must be nonnegative."""
        with pytest.raises(InvalidParameterError):
            FLQueryZ(s=1.0, r=0.0, c=0.0, b=-1.0)

    def test_rejects_non_finite(self) -> None:
        """Test that infinite frequencies are refused."""
        with pytest.raises(InvalidParameterError):
            FLQueryY(s=1.0, r=math.inf, rho=0.0, gamma=0.0, c=0.0, b=0.0)

    def test_split_into_langevin_factors(self) -> None:
        """Test that the joint query splits into its two factors."""
        query = FLQueryY(s=0.5, r=1.0, rho=2.0, gamma=3.0, c=4.0, b=0.25)
        assert query.w_part() == FLQueryZ(s=0.5, r=1.0, c=4.0, b=0.25)
        assert query.beta_part() == FLQueryZ(s=0.5, r=2.0, c=3.0, b=0.25)


class TestAlphaEval:
    """Test AlphaEval value object."""

    def test_valid_evaluation(self) -> None:
        """Test creating a valid evaluation."""
        value = AlphaEval(x=1.0, value=0.266, method=AlphaMethod.SERIES, est_error=1e-16)
        assert value.method == "series"

    def test_negative_beyond_error_rejected(self) -> None:
        """Test that a clearly negative density is a numeric failure."""
        with pytest.raises(NumericFailureError):
            AlphaEval(x=1.0, value=-1e-3, method=AlphaMethod.INTEGRAL, est_error=1e-9)

    def test_x_must_be_positive(self) -> None:
        """Test that alpha is evaluated at positive x."""
        with pytest.raises(InvalidParameterError):
            AlphaEval(x=0.0, value=0.0, method=AlphaMethod.SERIES, est_error=0.0)


class TestAuxValues:
    """Test auxiliary value containers."""

    def test_infinite_f_at_origin_allowed(self) -> None:
        """Test that F may be reported as +inf at ξ = 0."""
        values = AuxValues(
            xi=0.0, f_r=math.inf, f_i=math.inf, u_r=12.0, u_i=1.2, v_r=1.0, v_i=1 / 12
        )
        assert values.u_r == 12.0

    def test_regularized_must_be_finite(self) -> None:
        """Test that regularized functions are finite."""
        with pytest.raises(NumericFailureError):
            RegularizedAux(
                xi=0.0,
                f_r_reg=math.inf,
                f_i_reg=0.8,
                tilde_u_r=1 / 175,
                tilde_u_i=-1 / 15750,
                tilde_v_r=1 / 180,
                tilde_v_i=-1 / 7560,
            )


class TestFieldVector:
    """Test FieldVector value object."""

    def test_component_by_name(self) -> None:
        """Test reading a component by coordinate name."""
        vector = FieldVector(components=(1.0, 2.0, 3.0, 4.0, 5.0, 6.0))
        assert vector.component("lam") == 2.0
        assert vector.component("z") == 6.0

    def test_from_array_shape_checked(self) -> None:
        """Test that exactly six components are required."""
        with pytest.raises(InvalidParameterError):
            FieldVector.from_array([1.0, 2.0, 3.0])


class TestScaleParams:
    """Test ScaleParams value object."""

    def test_negative_b_squared_rejected(self) -> None:
        """Test that B_s² is nonnegative."""
        with pytest.raises(InvalidParameterError):
            ScaleParams(b_sq=-1.0, b_prime=0.0, mu=0.0, nu=0.0)


class TestCheckOutcome:
    """Test CheckOutcome value object."""

    def test_upper_threshold(self) -> None:
        """Test a discrepancy check."""
        assert CheckOutcome(name="gap", measured=1e-9, threshold=1e-8).verdict == "PASS"
        assert CheckOutcome(name="gap", measured=1e-7, threshold=1e-8).verdict == "FAIL"

    def test_lower_bound_threshold(self) -> None:
        """Test a p-value style check."""
        outcome = CheckOutcome(name="ks", measured=0.3, threshold=0.01, lower_bound=True)
        assert outcome.passed

    def test_nan_rejected(self) -> None:
        """Test that NaN figures are refused."""
        with pytest.raises(InvalidParameterError):
            CheckOutcome(name="gap", measured=math.nan, threshold=1.0)


class TestEstimate:
    """Test Estimate value object."""

    def test_mean_and_standard_error(self) -> None:
        """Test sample mean and standard error."""
        estimate = Estimate.of([1.0, 2.0, 3.0, 4.0])
        assert estimate.mean == pytest.approx(2.5)
        assert estimate.std_error == pytest.approx(math.sqrt(5.0 / 3.0) / 2.0)
        assert estimate.z_score(2.5) == 0.0

    def test_zero_error_z_score(self) -> None:
        """Test z-scores of a constant sample."""
        estimate = Estimate.of([1.0, 1.0])
        assert estimate.z_score(1.0) == 0.0
        assert estimate.z_score(2.0) == math.inf

    def test_needs_two_samples(self) -> None:
        """Test that a standard error needs two samples."""
        with pytest.raises(InvalidParameterError):
            Estimate.of([1.0])


class TestTangentSample:
    """Test TangentSample value object."""

    def test_chaos_coordinate_is_half_energy(self) -> None:
        """Test A = (∫w² + ∫β²)/2."""
        ones = np.ones(3)
        sample = TangentSample(
            s=1.0, w=ones, beta=ones, zeta=ones, z=ones, w_energy=2 * ones, beta_energy=4 * ones
        )
        np.testing.assert_allclose(sample.a, 3.0)
        assert list(sample.columns()) == ["w", "beta", "x", "zeta", "z"]

    def test_concatenate_rejects_mixed_horizons(self) -> None:
        """Test that only samples of one horizon are joined."""
        ones = np.ones(2)
        first = TangentSample(1.0, ones, ones, ones, ones, ones, ones)
        second = TangentSample(0.5, ones, ones, ones, ones, ones, ones)
        with pytest.raises(InvalidParameterError):
            TangentSample.concatenate([first, second])

    def test_mismatched_lengths_rejected(self) -> None:
        """Test that all coordinates have one length."""
        with pytest.raises(InvalidParameterError):
            TangentSample(
                1.0, np.ones(2), np.ones(3), np.ones(2), np.ones(2), np.ones(2), np.ones(2)
            )


class TestReportRecord:
    """Test ReportRecord value object."""

    def test_from_quad_keeps_flags_and_budget(self) -> None:
        """Test building a record from a quadrature result."""
        result = QuadResult(
            value=0.5 + 0j,
            quad_error=1e-9,
            tail_bound=1e-10,
            panels_used=32,
            truncation=9.0,
            flags=frozenset({"consistent_with_zero"}),
        )
        record = ReportRecord.from_quad("q_exact", {"s": 1.0}, result)
        assert record.error_estimate == pytest.approx(1.1e-9)
        assert record.flags == ("consistent_with_zero",)
        assert record.value_imag is None
        assert record.extra == {"truncation": 9.0, "panels": 32.0}

    def test_from_check_caps_infinite_measurement(self) -> None:
        """Test that failed checks with infinite discrepancy stay serializable."""
        outcome = CheckOutcome(name="5 scaling law", measured=math.inf, threshold=0.0)
        record = ReportRecord.from_check(outcome, seed=7)
        assert record.value == sys.float_info.max
        assert record.verdict == "FAIL"
        assert record.seed == 7

    def test_rejects_bare_point_estimate(self) -> None:
        """Test that every number carries a finite nonnegative error."""
        with pytest.raises(InvalidParameterError):
            ReportRecord(
                operation="alpha", inputs={}, value=1.0, error_estimate=math.nan, method="series"
            )

    def test_rejects_non_finite_value(self) -> None:
        """Test that NaN values never reach a report."""
        with pytest.raises(NumericFailureError):
            ReportRecord(
                operation="alpha", inputs={}, value=math.inf, error_estimate=0.0, method="series"
            )


class TestEnums:
    """Test enumerations."""

    def test_regime_admissibility(self) -> None:
        """Test which regimes admit the small-time equivalent."""
        assert Regime.LARGE_MU.is_admissible()
        assert Regime.LARGE_SPREAD.is_admissible()
        assert not Regime.NONE.is_admissible()

    def test_scheme_values(self) -> None:
        """Test scheme names."""
        assert Scheme.EXACT == "exact-gaussian-plus-trapezoid"
        assert Scheme.EXACT.is_exact_gaussian()
        assert not Scheme.EULER.is_exact_gaussian()

    def test_output_formats(self) -> None:
        """Test machine-readable formats."""
        assert OutputFormat.JSON.is_machine_readable()
        assert OutputFormat.CSV.is_machine_readable()
        assert not OutputFormat.HUMAN.is_machine_readable()
