"""Test validation suite plumbing and the cheap suites."""

from __future__ import annotations

import math
from collections.abc import Callable

import pytest

from chaos_kernel.adapters.random.philox_stream import PhiloxStream
from chaos_kernel.application.services import acceptance, density
from chaos_kernel.domain.exceptions import DomainError, InvalidParameterError
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome


@pytest.fixture
def options(stream: PhiloxStream) -> acceptance.SuiteOptions:
    """Provide reduced suite sizes."""
    return acceptance.SuiteOptions(stream=stream, quick=True)


class TestSelectSuites:
    """Test select_suites."""

    def test_all_by_default(self) -> None:
        """Test that no keys select every suite in order."""
        keys = [suite.key for suite in acceptance.select_suites()]
        assert keys == [str(k) for k in range(1, 12)] + ["S1"]

    def test_by_key(self) -> None:
        """Test selection keeps the requested order."""
        keys = [suite.key for suite in acceptance.select_suites(["10", "1"])]
        assert keys == ["10", "1"]

    def test_unknown_key(self) -> None:
        """Test that unknown keys are refused."""
        with pytest.raises(InvalidParameterError):
            acceptance.select_suites(["12"])


class TestRunSuite:
    """Test run_suite."""

    def test_library_error_becomes_failure(self, options: acceptance.SuiteOptions) -> None:
        """Test that a raised library error is reported as a failed outcome."""

        def broken(_options: acceptance.SuiteOptions) -> CheckOutcome:
            raise DomainError("outside the strip")

        outcome = acceptance.run_suite(acceptance.Suite("X", "broken", broken), options)
        assert not outcome.passed
        assert outcome.name == "X broken"
        assert "DomainError" in outcome.detail

    def test_outcome_renamed(self, options: acceptance.SuiteOptions) -> None:
        """Test that the outcome carries the suite key and title."""
        suite = acceptance.select_suites(["10"])[0]
        outcome = acceptance.run_suite(suite, options)
        assert outcome.name == "10 root sequences"

    def test_size(self, stream: PhiloxStream) -> None:
        """Test full and reduced problem sizes."""
        assert acceptance.SuiteOptions(stream=stream).size(100, 10) == 100
        assert acceptance.SuiteOptions(stream=stream, quick=True).size(100, 10) == 10


class TestCheapSuites:
    """Test the suites that need no Monte Carlo."""

    @pytest.mark.parametrize(
        "suite",
        [
            acceptance.laplace_identity,
            acceptance.dual_alpha,
            acceptance.marginal_normalization,
            acceptance.scaling_law,
            acceptance.hormander,
            acceptance.root_sequences,
        ],
    )
    def test_passes(
        self,
        suite: Callable[[acceptance.SuiteOptions], CheckOutcome],
        options: acceptance.SuiteOptions,
    ) -> None:
        """Test a passing verdict."""
        outcome = suite(options)
        assert outcome.passed, outcome.detail

    def test_trend_point(self) -> None:
        """Test μ_s = 32/(15s) − 0.01 with x inside the support at the trend points."""
        for s in acceptance.TREND_TIMES:
            point = acceptance.trend_point(s)
            params = density.scale_params(point, s)
            assert params.mu == pytest.approx(32.0 / (15.0 * s) - 0.01)
            assert point.x > density.chaos_floor(point.marginal, s)
            assert math.isfinite(params.nu)


class TestTrendFamily:
    """Test the family behind the small-time trend."""

    def test_positive_density(self) -> None:
        """Test a density clearly away from zero at the largest trend time."""
        s = acceptance.TREND_TIMES[0]
        result = density.q_exact(acceptance.trend_point(s), s)
        assert result.real > 10.0 * result.error

    def test_gap_shrinks_with_time(self) -> None:
        """Test |q_exact/q_asymptotic − 1| at s = 0.4 and 0.2."""
        gaps = []
        for s in (0.4, 0.2):
            point = acceptance.trend_point(s)
            mu = density.scale_params(point, s).mu
            gaps.append(abs(density.asymptotic_ratio(point, s, 1e-4 / (20.0 * mu**3)) - 1.0))
        assert gaps[1] < gaps[0]
