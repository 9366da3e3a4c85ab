"""Test auxiliary functions and root sequences."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chaos_kernel.application.services import special
from chaos_kernel.domain.exceptions import InvalidParameterError


class TestSeriesLimits:
    """Test exact limits at ξ = 0."""

    def test_values_at_origin(self) -> None:
        """Test U, V at 0 and the regularized F limits."""
        limits = special.series_limits()
        assert limits["u_r"] == 12
        assert limits["u_i"] == Fraction(6, 5)
        assert limits["v_r"] == 1
        assert limits["v_i"] == Fraction(1, 12)
        assert limits["f_r_reg"] == 6
        assert limits["f_i_reg"] == Fraction(4, 5)

    def test_quartic_coefficients(self) -> None:
        """Test the ξ⁴ coefficients of U and V."""
        limits = special.series_limits()
        assert limits["tilde_u_r"] == Fraction(1, 175)
        assert limits["tilde_u_i"] == Fraction(-1, 15750)
        assert limits["tilde_v_r"] == Fraction(1, 180)
        assert limits["tilde_v_i"] == Fraction(-1, 7560)

    def test_next_term_of_f_r(self) -> None:
        """Test F_r ξ⁴ = 6 − (67/1050)ξ⁴ + O(ξ⁸) through the exact series."""
        series = special.series_table()["f_r_reg"]
        xi = 1e-2
        value = float(series(np.array([xi]))[0])
        assert (value - 6.0) / xi**4 == pytest.approx(-67.0 / 1050.0, rel=1e-6)


class TestAuxTable:
    """Test aux_table."""

    @pytest.mark.parametrize("xi", [0.3, 0.45, 0.55, 0.8])
    def test_series_and_direct_branches_agree(self, xi: float) -> None:
        """Test that both representations agree around the switch point."""
        series = special.aux_table([xi], branch="series")
        direct = special.aux_table([xi], branch="direct")
        for name in special.AUX_NAMES[2:] + ("f_r_reg", "f_i_reg"):
            a = float(getattr(series, name)[0])
            b = float(getattr(direct, name)[0])
            assert a == pytest.approx(b, rel=1e-9), name

    @pytest.mark.parametrize("name", ["u_r", "u_i", "v_r", "v_i"])
    def test_branches_agree_at_switch(self, name: str) -> None:
        """Test U and V from both representations at XI_SERIES."""
        xi = [special.XI_SERIES]
        series = float(getattr(special.aux_table(xi, branch="series"), name)[0])
        direct = float(getattr(special.aux_table(xi, branch="direct"), name)[0])
        assert series == pytest.approx(direct, rel=1e-14)

    @pytest.mark.parametrize("name", ["f_r_reg", "f_i_reg"])
    def test_regularized_f_agrees_at_switch(self, name: str) -> None:
        """Test ξ⁴F_r and ξ²F_i from both representations at XI_SERIES."""
        xi = [special.XI_SERIES]
        series = float(getattr(special.aux_table(xi, branch="series"), name)[0])
        direct = float(getattr(special.aux_table(xi, branch="direct"), name)[0])
        assert series == pytest.approx(direct, rel=3e-14)

    @pytest.mark.parametrize(
        ("name", "origin"),
        [
            ("tilde_u_r", special.U_R0),
            ("tilde_u_i", special.U_I0),
            ("tilde_v_r", special.V_R0),
            ("tilde_v_i", special.V_I0),
        ],
    )
    def test_differences_agree_at_switch(self, name: str, origin: float) -> None:
        """Test (U − U(0))/ξ⁴ and (V − V(0))/ξ⁴ on the scale of U(0) and V(0)."""
        xi = special.XI_SERIES
        series = float(getattr(special.aux_table([xi], branch="series"), name)[0])
        direct = float(getattr(special.aux_table([xi], branch="direct"), name)[0])
        assert abs(series - direct) * xi**4 <= 1e-14 * origin

    def test_default_branch_switches_at_threshold(self) -> None:
        """Test that the default picks the series just below XI_SERIES."""
        below = special.XI_SERIES * (1 - 1e-12)
        default = special.aux_table([below, special.XI_SERIES])
        series = special.aux_table([below], branch="series")
        direct = special.aux_table([special.XI_SERIES], branch="direct")
        assert default.u_i[0] == series.u_i[0]
        assert default.u_i[1] == direct.u_i[0]

    def test_origin(self) -> None:
        """Test the values at ξ = 0."""
        values = special.aux_eval(0.0)
        assert values.u_r == 12.0
        assert values.v_r == 1.0
        assert math.isinf(values.f_r)
        regular = special.aux_eval_regularized(0.0)
        assert regular.f_r_reg == 6.0
        assert regular.tilde_u_r == pytest.approx(1 / 175)

    @given(st.floats(min_value=0.0, max_value=50.0))
    def test_lower_bounds(self, xi: float) -> None:
        """Test U_r >= 12 and V_r >= 1 on the half-line."""
        values = special.aux_eval(xi)
        assert values.u_r >= 12.0 * (1.0 - 1e-12)
        assert values.v_r >= 1.0 - 1e-12

    def test_growth_past_two_pi(self) -> None:
        """Test U_r − 2ξ >= 4 and V_r >= 3 for ξ in [2π, 60]."""
        table = special.aux_table(np.linspace(2.0 * math.pi, 60.0, 2000))
        assert np.all(table.u_r - 2.0 * table.xi >= 4.0)
        assert np.all(table.v_r >= 3.0)

    def test_u_r_asymptote(self) -> None:
        """Test U_r = 2ξ + 4 + 4/ξ + O(ξ⁻³)."""
        xi = 40.0
        assert special.aux_eval(xi).u_r == pytest.approx(2 * xi + 4 + 4 / xi, abs=50 / xi**3)

    def test_large_argument_regime(self) -> None:
        """Test finite values past the asymptotic switch."""
        table = special.aux_table(np.array([29.0, 31.0, 100.0]))
        for name in special.AUX_NAMES + special.REGULARIZED_NAMES:
            assert np.all(np.isfinite(getattr(table, name))), name

    def test_negative_rejected(self) -> None:
        """Test that ξ < 0 is refused."""
        with pytest.raises(InvalidParameterError):
            special.aux_table([-1.0])

    def test_direct_branch_singular_at_zero(self) -> None:
        """Test that the direct branch refuses ξ = 0."""
        with pytest.raises(InvalidParameterError):
            special.aux_table([0.0], branch="direct")

    def test_f_denominator_positive(self) -> None:
        """Test the scaled denominator of F away from the origin."""
        xi = np.linspace(0.5, 60.0, 500)
        assert np.all(special.f_denominator_scaled(xi) > 0)


class TestTanFixedPoints:
    """Test tan_fixed_points."""

    def test_first_root(self) -> None:
        """Test y₀ ≈ 4.493409457909064."""
        assert special.tan_fixed_points(1)[0] == pytest.approx(4.493409457909064, abs=1e-13)

    def test_sixteen_roots(self) -> None:
        """Test residuals, intervals and shrinking gaps."""
        roots = special.tan_fixed_points(16)
        gaps = [(k + 1.5) * math.pi - y for k, y in enumerate(roots)]
        for k, y in enumerate(roots):
            assert (k + 1) * math.pi < y < (k + 1.5) * math.pi
            assert special.tan_residual(y) <= 1e-12
        assert all(b < a for a, b in zip(gaps, gaps[1:], strict=False))

    @pytest.mark.parametrize("n", [0, special.ROOT_CAP + 1])
    def test_count_bounds(self, n: int) -> None:
        """Test that the root count is capped."""
        with pytest.raises(InvalidParameterError):
            special.tan_fixed_points(n)


class TestSh2Cos2Zeros:
    """Test sh2cos2_zeros."""

    def test_zeros_have_small_residual(self) -> None:
        """Test |sh²z + cos²z| at the closed-form zeros."""
        for z in special.sh2cos2_zeros(16):
            assert special.sh2cos2_residual(z, relative=True) <= 1e-12

    def test_first_zero(self) -> None:
        """Test z₀ = (1 + i)π/4."""
        assert special.sh2cos2_zeros(1)[0] == pytest.approx((1 + 1j) * math.pi / 4)

    def test_count_must_be_positive(self) -> None:
        """Test that at least one zero is requested."""
        with pytest.raises(InvalidParameterError):
            special.sh2cos2_zeros(0)


class TestSeriesParity:
    """Test that the small-ξ series are even."""

    @pytest.mark.parametrize("name", ["u_r", "u_i", "v_r", "v_i", *special.REGULARIZED_NAMES])
    def test_odd_coefficients_vanish(self, name: str) -> None:
        """Test that numerator and denominator carry only even powers."""
        series = special.series_table()[name]
        assert all(c == 0 for c in series.num[1::2])
        assert all(c == 0 for c in series.den[1::2])
