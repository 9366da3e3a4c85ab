"""Auxiliary functions F, U, V and the pole sequences of the inversion kernel.

With p = ch ξ + cos ξ, m = ch ξ − cos ξ, P = sh ξ + sin ξ, M = sh ξ − sin ξ:

    U_r = 2ξ³Mp / ((ξp − P)² + M²)      U_i = ξ(ξp − P)p / ((ξp − P)² + M²)
    V_r = ξP / (2m)                      V_i = M / (4ξm)
    F_r = [ch cos + (ξ/2)(ch sin − sh cos) − 1] / (m·D)
    F_i = [sh sin − (ξ/2)(ch sin + sh cos)] / (m·D),   D = m − ξP + (ξ²/2)p

Below ``XI_SERIES`` every function (and every regularized difference) is a
ratio of exact rational Taylor polynomials generated with sympy, so nothing
cancels. At the switch both representations agree to a few ulp. Above it
the closed forms are evaluated with each hyperbolic factor scaled by
2e^{−ξ}; beyond ``XI_ASYMPTOTIC`` the e^{−2ξ} corrections are dropped.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Final

import numpy as np
import numpy.typing as npt
import sympy
from numpy.polynomial import polynomial as npoly

from chaos_kernel.application.services.numerics import find_root_bracketed
from chaos_kernel.domain.exceptions import InvalidParameterError
from chaos_kernel.domain.value_objects.aux_values import AuxValues, RegularizedAux

logger = logging.getLogger(__name__)

type FloatArray = npt.NDArray[np.float64]

# Below this the direct forms cancel: ξp − P ~ ξ⁵/15 and U_i − 6/5 ~ −ξ⁴/15750.
XI_SERIES: Final = 2.0
XI_ASYMPTOTIC: Final = 30.0
SERIES_ORDER: Final = 40
ROOT_CAP: Final = 64

AUX_NAMES: Final = ("f_r", "f_i", "u_r", "u_i", "v_r", "v_i")
REGULARIZED_NAMES: Final = (
    "f_r_reg",
    "f_i_reg",
    "tilde_u_r",
    "tilde_u_i",
    "tilde_v_r",
    "tilde_v_i",
)
# Values of U_r, U_i, V_r, V_i at ξ = 0.
U_R0: Final = 12.0
U_I0: Final = 6.0 / 5.0
V_R0: Final = 1.0
V_I0: Final = 1.0 / 12.0

_XI = sympy.Symbol("xi")


@dataclass(frozen=True)
class RationalSeries:
    """Ratio of two truncated Taylor polynomials with exact coefficients."""

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]

    @property
    def limit(self) -> Fraction:
        """Value at ξ = 0."""
        return self.num[0] / self.den[0]

    @cached_property
    def _float_coeffs(self) -> tuple[FloatArray, FloatArray]:
        return (
            np.array([float(c) for c in self.num], dtype=np.float64),
            np.array([float(c) for c in self.den], dtype=np.float64),
        )

    def __call__(self, xi: FloatArray) -> FloatArray:
        """Evaluate at real ξ."""
        num_c, den_c = self._float_coeffs
        num = npoly.polyval(xi, num_c)
        den = npoly.polyval(xi, den_c)
        return np.asarray(num / den, dtype=np.float64)


def _poly(expr: sympy.Expr) -> sympy.Poly:
    return sympy.Poly(expr, _XI, domain=sympy.QQ)


def _truncate(poly: sympy.Poly, order: int) -> sympy.Poly:
    return poly.rem(_poly(_XI ** (order + 1)))


def _taylor(fn: Callable[[sympy.Symbol], sympy.Expr]) -> sympy.Poly:
    return _poly(sympy.series(fn(_XI), _XI, 0, SERIES_ORDER + 1).removeO())


def _lowest_degree(poly: sympy.Poly) -> int:
    return min(monom[0] for monom in poly.monoms())


def _ratio(num: sympy.Poly, den: sympy.Poly) -> RationalSeries:
    num = _truncate(num, SERIES_ORDER)
    den = _truncate(den, SERIES_ORDER)
    shift = _lowest_degree(den)
    if not num.is_zero and _lowest_degree(num) < shift:
        raise ArithmeticError("Series ratio has a pole at the origin")
    order = SERIES_ORDER - shift
    num = _truncate(num.exquo(_poly(_XI**shift)), order)
    den = _truncate(den.exquo(_poly(_XI**shift)), order)

    def ascending(poly: sympy.Poly) -> tuple[Fraction, ...]:
        coeffs = [poly.coeff_monomial(_XI**k) for k in range(order + 1)]
        return tuple(Fraction(int(c.p), int(c.q)) for c in coeffs)

    return RationalSeries(num=ascending(num), den=ascending(den))


@cache
def series_table() -> dict[str, RationalSeries]:
    """Exact small-ξ representations of every auxiliary and regularized function."""
    ch, cos, sh, sin = (_taylor(fn) for fn in (sympy.cosh, sympy.cos, sympy.sinh, sympy.sin))
    x = _poly(_XI)
    half = _poly(sympy.Rational(1, 2))
    p, m, P, M = ch + cos, ch - cos, sh + sin, sh - sin
    q = x * p - P
    den_u = q * q + M * M
    num_ur = 2 * x**3 * M * p
    num_ui = x * q * p
    num_fr = ch * cos + half * x * (ch * sin - sh * cos) - 1
    num_fi = sh * sin - half * x * (ch * sin + sh * cos)
    den_f = m * (m - x * P + half * x**2 * p)
    x4 = x**4

    def shifted(num: sympy.Poly, den: sympy.Poly, value: sympy.Rational) -> RationalSeries:
        return _ratio(num - _poly(value) * den, x4 * den)

    table = {
        "u_r": _ratio(num_ur, den_u),
        "u_i": _ratio(num_ui, den_u),
        "v_r": _ratio(x * P, 2 * m),
        "v_i": _ratio(M, 4 * x * m),
        "f_r_reg": _ratio(x4 * num_fr, den_f),
        "f_i_reg": _ratio(x**2 * num_fi, den_f),
        "tilde_u_r": shifted(num_ur, den_u, sympy.Integer(12)),
        "tilde_u_i": shifted(num_ui, den_u, sympy.Rational(6, 5)),
        "tilde_v_r": shifted(x * P, 2 * m, sympy.Integer(1)),
        "tilde_v_i": shifted(M, 4 * x * m, sympy.Rational(1, 12)),
    }
    logger.debug("Built exact series table to order %d", SERIES_ORDER)
    return table


def series_limits() -> dict[str, Fraction]:
    """Exact values at ξ = 0 of U, V and of the regularized functions."""
    return {name: series.limit for name, series in series_table().items()}


@dataclass(frozen=True)
class AuxTable:
    """Auxiliary and regularized functions on an array of ξ."""

    xi: FloatArray
    f_r: FloatArray
    f_i: FloatArray
    u_r: FloatArray
    u_i: FloatArray
    v_r: FloatArray
    v_i: FloatArray
    f_r_reg: FloatArray
    f_i_reg: FloatArray
    tilde_u_r: FloatArray
    tilde_u_i: FloatArray
    tilde_v_r: FloatArray
    tilde_v_i: FloatArray


def _series_branch(xi: FloatArray) -> dict[str, FloatArray]:
    table = series_table()
    values = {name: table[name](xi) for name in table}
    with np.errstate(divide="ignore", invalid="ignore"):
        values["f_r"] = np.where(xi > 0, values["f_r_reg"] / xi**4, np.inf)
        values["f_i"] = np.where(xi > 0, values["f_i_reg"] / xi**2, np.inf)
    return values


def _direct_branch(xi: FloatArray) -> dict[str, FloatArray]:
    # Hyperbolic factors scaled by 2e^{-ξ}; e^{-2ξ} is negligible past XI_ASYMPTOTIC.
    e1 = np.exp(-xi)
    e2 = np.where(xi < XI_ASYMPTOTIC, e1 * e1, 0.0)
    cos, sin = np.cos(xi), np.sin(xi)
    hc, hs = 1.0 + e2, 1.0 - e2
    c_t, s_t = 2.0 * e1 * cos, 2.0 * e1 * sin
    p, m, P, M = hc + c_t, hc - c_t, hs + s_t, hs - s_t

    q = xi * p - P
    den_u = q * q + M * M
    u_r = 2.0 * xi**3 * M * p / den_u
    u_i = xi * q * p / den_u
    v_r = xi * P / (2.0 * m)
    v_i = M / (4.0 * xi * m)
    den_f = m * (m - xi * P + 0.5 * xi**2 * p)
    f_r = 2.0 * e1 * (hc * cos + 0.5 * xi * (hc * sin - hs * cos) - 2.0 * e1) / den_f
    f_i = 2.0 * e1 * (hs * sin - 0.5 * xi * (hc * sin + hs * cos)) / den_f
    xi4 = xi**4
    return {
        "f_r": f_r,
        "f_i": f_i,
        "u_r": u_r,
        "u_i": u_i,
        "v_r": v_r,
        "v_i": v_i,
        "f_r_reg": f_r * xi4,
        "f_i_reg": f_i * xi**2,
        "tilde_u_r": (u_r - U_R0) / xi4,
        "tilde_u_i": (u_i - U_I0) / xi4,
        "tilde_v_r": (v_r - V_R0) / xi4,
        "tilde_v_i": (v_i - V_I0) / xi4,
    }


def aux_table(xi: npt.ArrayLike, branch: str | None = None) -> AuxTable:
    """Evaluate all auxiliary functions on an array of ξ >= 0.

    Args:
        xi: Nonnegative finite abscissae
        branch: ``"series"`` or ``"direct"`` to force one representation;
            by default the series is used below ``XI_SERIES``

    Returns:
        Arrays shaped like ``xi``

    Raises:
        InvalidParameterError: If some ξ is negative or not finite
    """
    arr = np.atleast_1d(np.asarray(xi, dtype=np.float64))
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise InvalidParameterError("Auxiliary functions need finite ξ >= 0")
    if branch == "series":
        small = np.ones(arr.shape, dtype=bool)
    elif branch == "direct":
        if np.any(arr == 0):
            raise InvalidParameterError("The direct branch is singular at ξ = 0")
        small = np.zeros(arr.shape, dtype=bool)
    elif branch is None:
        small = arr < XI_SERIES
    else:
        raise InvalidParameterError(f"Unknown branch {branch!r}")

    out = {name: np.empty_like(arr) for name in AUX_NAMES + REGULARIZED_NAMES}
    for mask, evaluate in ((small, _series_branch), (~small, _direct_branch)):
        if np.any(mask):
            part = evaluate(arr[mask])
            for name, values in part.items():
                out[name][mask] = values
    return AuxTable(xi=arr, **out)


def aux_eval(xi: float) -> AuxValues:
    """F_r, F_i, U_r, U_i, V_r, V_i at a single ξ >= 0 (F is +inf at 0)."""
    table = aux_table(xi)
    return AuxValues(xi=float(xi), **{name: float(getattr(table, name)[0]) for name in AUX_NAMES})


def aux_eval_regularized(xi: float) -> RegularizedAux:
    """Regularized auxiliary functions at a single ξ >= 0."""
    table = aux_table(xi)
    return RegularizedAux(
        xi=float(xi), **{name: float(getattr(table, name)[0]) for name in REGULARIZED_NAMES}
    )


def f_denominator_scaled(xi: npt.ArrayLike) -> FloatArray:
    """Denominator of F, scaled by 4e^{−2ξ}.

    (ch ξ − cos ξ)[(ch ξ − cos ξ) − ξ(sh ξ + sin ξ) + (ξ²/2)(ch ξ + cos ξ)]
    """
    arr = np.asarray(xi, dtype=np.float64)
    e1 = np.exp(-arr)
    e2 = e1 * e1
    c_t, s_t = 2.0 * e1 * np.cos(arr), 2.0 * e1 * np.sin(arr)
    p, m, P = 1.0 + e2 + c_t, 1.0 + e2 - c_t, 1.0 - e2 + s_t
    return np.asarray(m * (m - arr * P + 0.5 * arr**2 * p), dtype=np.float64)


def tan_fixed_points(n: int, cap: int = ROOT_CAP) -> list[float]:
    """First n positive solutions of tg y = y.

    The k-th root lies in ((k+1)π, (k+3/2)π) and approaches its right end.

    Raises:
        InvalidParameterError: If n < 1 or n exceeds ``cap``
    """
    if n < 1 or n > cap:
        raise InvalidParameterError(f"Root count must be in [1, {cap}], got {n}")

    def residual(y: float) -> float:
        return math.tan(y) - y

    def slope(y: float) -> float:
        return math.tan(y) ** 2

    roots = []
    for k in range(n):
        right = (k + 1.5) * math.pi
        lo = (k + 1) * math.pi + 1e-9
        hi = right - 0.1 / right
        roots.append(find_root_bracketed(residual, lo, hi, 1e-13, fprime=slope))
    return roots


def tan_residual(y: float) -> float:
    """|sin y − y cos y|, the residual of tg y = y without the pole of tg.

    Near the k-th root |tg y − y| is this residual times |1/cos y| ≈ y, so
    the quotient form cannot drop below y²·ulp(y) in floating point.
    """
    return abs(math.sin(y) - y * math.cos(y))


def sh2cos2_zeros(n: int) -> list[complex]:
    """First-quadrant zeros (1+i)(π/4)(1+2k) of sh²z + cos²z, k < n."""
    if n < 1:
        raise InvalidParameterError(f"Zero count must be positive, got {n}")
    return [(1 + 1j) * (math.pi / 4) * (1 + 2 * k) for k in range(n)]


def sh2cos2_residual(z: complex, relative: bool = False) -> float:
    """|sh²z + cos²z|, optionally divided by |sh z|² + |cos z|²."""
    value = abs(cmath.sinh(z) ** 2 + cmath.cos(z) ** 2)
    if relative:
        return value / (abs(cmath.sinh(z)) ** 2 + abs(cmath.cos(z)) ** 2)
    return value
