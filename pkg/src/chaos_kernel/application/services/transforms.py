"""Closed-form Fourier-Laplace transforms of the Gaussian and second-chaos coordinates."""

from __future__ import annotations

import cmath
import logging
import math
from functools import cache
from typing import Final

import numpy as np
import numpy.typing as npt
import sympy

from chaos_kernel.application.services.numerics import principal_sqrt
from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.exceptions import DomainError, InvalidParameterError
from chaos_kernel.domain.value_objects.fl_query import FLQueryY, FLQueryZ

logger = logging.getLogger(__name__)

type FloatArray = npt.NDArray[np.float64]

# Below this |b²| (equivalently |λ|) the transforms are evaluated from Taylor series in b².
SMALL_SQUARE: Final = 0.1
SERIES_TERMS: Final = 12
ABSCISSA: Final = 4.0 * math.pi**2
LOG_TWO_PI: Final = math.log(2.0 * math.pi)

_U = sympy.Symbol("u")
_SMALL_ARGUMENT_FORMS: Final = {
    # Langevin transform coefficients, u = bs
    "tanh_over_u": sympy.tanh(_U) / _U,
    "u_minus_tanh_over_u3": (_U - sympy.tanh(_U)) / _U**3,
    "one_minus_sech_over_u2": (1 - sympy.sech(_U)) / _U**2,
    # Laplace transform in the chaos coordinate, u = b
    "quartic_over_h": _U**4
    / (2 * (_U * sympy.cosh(_U / 2) - 2 * sympy.sinh(_U / 2)) * sympy.sinh(_U / 2)),
    "half_coth_half": (_U / 2) / sympy.tanh(_U / 2),
    "one_minus_half_coth_half_over_u2": (1 - (_U / 2) / sympy.tanh(_U / 2)) / _U**2,
}


@cache
def even_series(name: str) -> tuple[float, ...]:
    """Taylor coefficients in u² of an even small-argument form, lowest first."""
    expr = _SMALL_ARGUMENT_FORMS[name]
    poly = sympy.series(expr, _U, 0, 2 * SERIES_TERMS).removeO()
    return tuple(float(poly.coeff(_U, 2 * k)) for k in range(SERIES_TERMS))


def _eval_even(name: str, square: complex) -> complex:
    total = 0j
    for coeff in reversed(even_series(name)):
        total = total * square + coeff
    return total


def langevin_density_grid(s: float, w: npt.ArrayLike, z: npt.ArrayLike) -> FloatArray:
    """Vectorized density of (w_s, ∫w) at proper time s."""
    if not s > 0:
        raise InvalidParameterError(f"Proper time must be positive, got {s}")
    w_arr = np.asarray(w, dtype=np.float64)
    z_arr = np.asarray(z, dtype=np.float64)
    exponent = -(6.0 / s**3) * (z_arr - 0.5 * s * w_arr) ** 2 - w_arr**2 / (2.0 * s)
    return np.asarray(math.sqrt(3.0) / (math.pi * s * s) * np.exp(exponent), dtype=np.float64)


def langevin_density(s: float, w: float, z: float) -> float:
    """Density of the Langevin pair (w_s, ∫₀ˢ w) at (w, z).

    Raises:
        InvalidParameterError: If s <= 0
    """
    return float(langevin_density_grid(s, w, z))


def langevin_coefficients(u: float, series: bool | None = None) -> tuple[float, float, float]:
    """(th u/u, (1 − sech u)/u², (u − th u)/u³) for u = bs >= 0.

    Args:
        u: Product of rate and proper time
        series: Force the Taylor series (True) or the closed form (False);
            by default the series is used for u² below ``SMALL_SQUARE``

    Raises:
        InvalidParameterError: If the closed form is requested at u = 0
    """
    square = u * u
    if series is None:
        series = square < SMALL_SQUARE
    if series:
        return (
            _eval_even("tanh_over_u", square).real,
            _eval_even("one_minus_sech_over_u2", square).real,
            _eval_even("u_minus_tanh_over_u3", square).real,
        )
    if u == 0:
        raise InvalidParameterError("The closed form is singular at u = 0")
    tanh_u = math.tanh(u)
    sech_u = 2.0 * math.exp(-u) / (1.0 + math.exp(-2.0 * u))
    return tanh_u / u, (1.0 - sech_u) / square, (u - tanh_u) / (square * u)


def flt_Z(q: FLQueryZ) -> complex:
    """E[exp(i(r w_s + c∫w) − (b²/2)∫w²)] in closed form.

    With u = bs the exponent is −(s/2)·[th(u)/u]·r² − s²·[(1 − sech u)/u²]·rc
    − (s³/2)·[(u − th u)/u³]·c², each bracket tending to 1, 1/2, 1/3 as u → 0.
    """
    s, r, c = q.s, q.r, q.c
    u = q.b * s
    if u == 0:
        return complex(math.exp(-0.5 * s * (r * r + r * c * s + c * c * s * s / 3.0)))
    a_rr, a_rc, a_cc = langevin_coefficients(u)
    log_ch = u + math.log1p(math.exp(-2.0 * u)) - math.log(2.0)
    exponent = -0.5 * log_ch - 0.5 * s * a_rr * r * r - s * s * a_rc * r * c
    exponent -= 0.5 * s**3 * a_cc * c * c
    return complex(math.exp(exponent))


def flt_Y(q: FLQueryY) -> complex:
    """Transform of (w_s, beta_s, zeta_s, z_s, A_s): product of the two Langevin factors."""
    return flt_Z(q.w_part()) * flt_Z(q.beta_part())


def _chaos_forms(square: complex) -> tuple[complex, complex, complex]:
    """(log of b⁴/h(b), (b/2)coth(b/2), (1 − (b/2)coth(b/2))/b²) as functions of b².

    h(b) = 2(b ch(b/2) − 2 sh(b/2)) sh(b/2) = (b − 2 th(b/2)) sh b. All three
    forms are even in b, so any square root of ``square`` may be used.
    """
    if abs(square) < SMALL_SQUARE:
        return (
            cmath.log(_eval_even("quartic_over_h", square)),
            _eval_even("half_coth_half", square),
            _eval_even("one_minus_half_coth_half_over_u2", square),
        )
    b = _even_root(square)
    e = cmath.exp(-b)
    # h(b) = (e^b/2)·[b(1 + e^{-b}) − 2(1 − e^{-b})]·(1 − e^{-b})
    log_h = b - math.log(2.0) + cmath.log((b * (1.0 + e) - 2.0 * (1.0 - e)) * (1.0 - e))
    half_coth = 0.5 * b * (1.0 + e) / (1.0 - e)
    return 4.0 * cmath.log(b) - log_h, half_coth, (1.0 - half_coth) / square


def _chaos_exponent(
    w: float, z: float, forms: tuple[complex, complex, complex], square: complex
) -> complex:
    _, half_coth, g = forms
    return (w - 2.0 * z) ** 2 / (8.0 * g) - 0.5 * square * z * z - 0.5 * half_coth * w * w


def _even_root(v: complex) -> complex:
    # The transforms are even in b, so either root is valid on the cut.
    if v.imag == 0 and v.real < 0:
        return 1j * math.sqrt(-v.real)
    return principal_sqrt(v)


def laplace_Z1(w: float, z: float, b: float) -> float:
    """x-Laplace transform E[e^{−b²A}; (w_1, ∫w) ∈ d(w, z)] / dw dz of one Langevin factor.

    Equals (b²/(2π√([b − 2th(b/2)] sh b)))·exp[(b²/8)(w − 2z)²/(1 − (b/2)coth(b/2))
    − (b²/2)z² − (b/4)coth(b/2)w²], computed in log space; b = 0 gives the
    Langevin density at time 1.

    Raises:
        InvalidParameterError: If b < 0
    """
    if b < 0:
        raise InvalidParameterError(f"Laplace rate must be nonnegative, got {b}")
    if b == 0:
        return langevin_density(1.0, w, z)
    square = complex(b * b)
    forms = _chaos_forms(square)
    log_value = 0.5 * forms[0] - LOG_TWO_PI + _chaos_exponent(w, z, forms, square)
    return math.exp(log_value.real)


def laplace_z1_grid(w: npt.ArrayLike, z: npt.ArrayLike, b: float) -> FloatArray:
    """Vectorized :func:`laplace_Z1` over arrays of (w, z)."""
    if b < 0:
        raise InvalidParameterError(f"Laplace rate must be nonnegative, got {b}")
    if b == 0:
        return langevin_density_grid(1.0, w, z)
    w_arr = np.asarray(w, dtype=np.float64)
    z_arr = np.asarray(z, dtype=np.float64)
    log_k, half_coth, g = (v.real for v in _chaos_forms(complex(b * b)))
    exponent = (w_arr - 2.0 * z_arr) ** 2 / (8.0 * g) - 0.5 * b * b * z_arr**2
    exponent -= 0.5 * half_coth * w_arr**2
    return np.asarray(np.exp(0.5 * log_k - LOG_TWO_PI + exponent), dtype=np.float64)


def laplace_z1_mass(b: float) -> float:
    """Total mass (ch b)^{−1/2} of :func:`laplace_Z1` over the plane."""
    return math.exp(-0.5 * (abs(b) + math.log1p(math.exp(-2.0 * abs(b))) - math.log(2.0)))


def _log_psi(p: MarginalPoint, square: complex) -> complex:
    forms = _chaos_forms(square)
    return (
        forms[0]
        - 2.0 * LOG_TWO_PI
        + _chaos_exponent(p.w, p.z, forms, square)
        + _chaos_exponent(p.beta, p.zeta, forms, square)
    )


def psi(p: MarginalPoint, b: float) -> float:
    """Laplace transform in x of the joint density of (w_1, beta_1, x, zeta_1, z_1).

    Equals laplace_Z1(w, z, b)·laplace_Z1(beta, zeta, b); at b = 0 it is the
    Gaussian marginal (3/π²)exp[−(w²+β²)/2 − 6(z − w/2)² − 6(ζ − β/2)²].

    Raises:
        InvalidParameterError: If b < 0
    """
    if b < 0:
        raise InvalidParameterError(f"Laplace rate must be nonnegative, got {b}")
    if b == 0:
        return langevin_density(1.0, p.w, p.z) * langevin_density(1.0, p.beta, p.zeta)
    return math.exp(_log_psi(p, complex(b * b)).real)


def phi(p: MarginalPoint, lam: complex) -> complex:
    """Analytic continuation Φ(λ) = Ψ(√−λ) on ℜλ < 4π².

    Args:
        p: Gaussian coordinates
        lam: Complex Laplace variable

    Returns:
        Φ(λ); real and equal to :func:`psi` for real λ <= 0

    Raises:
        DomainError: If ℜλ >= 4π²
    """
    lam = complex(lam)
    if not cmath.isfinite(lam):
        raise InvalidParameterError(f"λ must be finite, got {lam}")
    if lam.real >= ABSCISSA:
        raise DomainError(f"Φ is only defined for ℜλ < 4π², got {lam}")
    value = cmath.exp(_log_psi(p, -lam))
    if lam.imag == 0:
        return complex(value.real, 0.0)
    return value


def ou_covariance_oracle(b: float, s: float) -> npt.NDArray[np.float64]:
    """Covariance of (√(2b) w_s, √(2b³) ∫τ dw_τ) for the Ornstein-Uhlenbeck representation.

    With x = bs: K11 = 1 − e^{−2x}, K12 = x − 1 + 2e^{−x} − (x+1)e^{−2x},
    K22 = x² − 3 + 4(x+1)e^{−x} − (x+1)²e^{−2x}.

    Raises:
        InvalidParameterError: If b or s is not positive
    """
    if not (b > 0 and s > 0):
        raise InvalidParameterError(f"Need b > 0 and s > 0, got b={b}, s={s}")
    x = b * s
    e1, e2 = math.exp(-x), math.exp(-2.0 * x)
    k11 = -math.expm1(-2.0 * x)
    k12 = x - 1.0 + 2.0 * e1 - (x + 1.0) * e2
    k22 = x * x - 3.0 + 4.0 * (x + 1.0) * e1 - (x + 1.0) ** 2 * e2
    return np.array([[k11, k12], [k12, k22]], dtype=np.float64)


def ou_determinant(b: float, s: float) -> float:
    """δ_{bs} = 2(bs − 2) + 8e^{−bs} − 2(bs + 2)e^{−2bs}, the determinant of the oracle."""
    x = b * s
    return 2.0 * (x - 2.0) + 8.0 * math.exp(-x) - 2.0 * (x + 2.0) * math.exp(-2.0 * x)
