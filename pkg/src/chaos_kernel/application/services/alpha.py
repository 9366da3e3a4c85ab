"""Density of the second-chaos coordinate A_s.

Three representations of α₁ are provided:

* the theta-like series 2π Σ (−1)ⁿ (n+½) e^{−(n+½)²π²x}, alternating with
  decreasing terms once π²x is moderate;
* the reflection series Σ (−1)ⁿ (2n+1)/√(πx³) e^{−(2n+1)²/(4x)}, the exit-time
  density of Brownian motion from (−1, 1) at time 2x, fast for small x;
* the oscillatory integral

      α₁(x) = (4/π) ∫₀^∞ [cos(2xy² − y) y sh y + cos y cos(2xy²) e^{−y} y]
                         / (sh²y + cos²y) dy,

  evaluated with numerator and denominator multiplied by 4e^{−2y}.

α_s(x) = s⁻² α₁(x/s²) and ∫ e^{λx} α₁(x) dx = 1/cos√λ for λ < π²/4.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import replace
from typing import Final

import numpy as np
import numpy.typing as npt
from scipy import special as sp

from chaos_kernel.application.services.numerics import (
    DEFAULT_MAX_PANELS,
    integrate_semiline,
    quadratic_phase,
)
from chaos_kernel.domain.exceptions import (
    DomainError,
    InvalidParameterError,
    SeriesUnreliableError,
)
from chaos_kernel.domain.value_objects.alpha_eval import AlphaEval, AlphaMethod
from chaos_kernel.domain.value_objects.envelope import DecayEnvelope, EnvelopeKind
from chaos_kernel.domain.value_objects.quad_result import QuadResult

logger = logging.getLogger(__name__)

type FloatArray = npt.NDArray[np.float64]
type GridFunction = Callable[[FloatArray], FloatArray]

SERIES_THRESHOLD: Final = 0.15
REFLECTION_LIMIT: Final = 1.0
SERIES_RELATIVE_STOP: Final = 1e-14
SERIES_MAX_TERMS: Final = 200
GRID_TERMS: Final = 64
DEFAULT_TOL: Final = 1e-12
LAPLACE_TOL: Final = 1e-10
# Smallest admitted distance of λ from the abscissa π²/4.
LAPLACE_GAP: Final = 1e-2

PI_SQ: Final = math.pi**2
ABSCISSA: Final = PI_SQ / 4.0
SANDWICH_START: Final = 1.0 / PI_SQ

_ENVELOPE_START: Final = 3.0
# 2(1 + e^{-2y})/(1 - e^{-2y})² <= 2.02 for y >= 3
_ENVELOPE_CONSTANT: Final = 2.02
_INTEGRAL_ENVELOPE: Final = DecayEnvelope(
    kind=EnvelopeKind.EXPONENTIAL,
    rate=1.0,
    prefactor=(4.0 / math.pi) * _ENVELOPE_CONSTANT * _ENVELOPE_START * math.exp(-_ENVELOPE_START),
    threshold=_ENVELOPE_START,
    power=1.0,
)

_N: Final = np.arange(GRID_TERMS, dtype=np.float64)
_SIGNS: Final = np.where(_N % 2 == 0, 1.0, -1.0)
_ODD: Final = 2.0 * _N + 1.0


def _require_positive(x: float, name: str = "x") -> None:
    if not (math.isfinite(x) and x > 0):
        raise InvalidParameterError(f"{name} must be positive and finite, got {x}")


def tail_asymptote(x: float) -> float:
    """Leading term π e^{−π²x/4}, an upper bound on α₁(x) for x >= π⁻²."""
    return math.pi * math.exp(-ABSCISSA * x)


def sandwich_bounds(x: float) -> tuple[float, float]:
    """Lower and upper bounds on α₁(x), valid for x >= π⁻².

    Raises:
        InvalidParameterError: If x < π⁻²
    """
    if x < SANDWICH_START:
        raise InvalidParameterError(f"Bounds hold for x >= 1/π², got {x}")
    upper = tail_asymptote(x)
    return upper * (1.0 - 3.0 * math.exp(-2.0 * PI_SQ * x)), upper


def _alternating_sum(terms: list[float]) -> float:
    total = 0.0
    for term in reversed(terms):
        total += term
    return total


def alpha1_series(x: float, threshold: float = SERIES_THRESHOLD) -> AlphaEval:
    """α₁(x) from the alternating theta-like series.

    Terms are added while the next one is at least 1e-14 of the partial sum,
    at most 200 of them; the first omitted term bounds the error.

    Args:
        x: Chaos value
        threshold: Smallest x accepted

    Returns:
        Evaluation with method ``series``

    Raises:
        InvalidParameterError: If x is not positive
        SeriesUnreliableError: If x < threshold
    """
    _require_positive(x)
    if x < threshold:
        raise SeriesUnreliableError(
            f"Series is unreliable for x={x} < {threshold}; use the integral method"
        )
    terms: list[float] = []
    partial = 0.0
    omitted = 0.0
    for n in range(SERIES_MAX_TERMS + 1):
        k = n + 0.5
        term = (-1) ** n * 2.0 * math.pi * k * math.exp(-k * k * PI_SQ * x)
        if terms and abs(term) <= SERIES_RELATIVE_STOP * abs(partial):
            omitted = abs(term)
            break
        if n == SERIES_MAX_TERMS:
            omitted = abs(term)
            break
        terms.append(term)
        partial += term
    value = _alternating_sum(terms)
    return AlphaEval(x=x, value=value, method=AlphaMethod.SERIES, est_error=omitted)


def alpha1_small_time(x: float) -> AlphaEval:
    """α₁(x) from the reflection series of the exit time of (−1, 1).

    Accurate for small x where the theta-like series needs many terms; beyond
    ``REFLECTION_LIMIT`` its first terms cancel and the other series is used.

    Raises:
        InvalidParameterError: If x is not positive
        SeriesUnreliableError: If x > REFLECTION_LIMIT
    """
    _require_positive(x)
    if x > REFLECTION_LIMIT:
        raise SeriesUnreliableError(f"Reflection series is unreliable for x={x}")
    log_scale = -0.5 * math.log(math.pi) - 1.5 * math.log(x)
    terms: list[float] = []
    partial = 0.0
    omitted = 0.0
    for n in range(SERIES_MAX_TERMS + 1):
        k = 2 * n + 1
        term = (-1) ** n * k * math.exp(log_scale - k * k / (4.0 * x))
        decreasing = k * k > 2.0 * x
        if terms and decreasing and abs(term) <= SERIES_RELATIVE_STOP * abs(partial):
            omitted = abs(term)
            break
        if n == SERIES_MAX_TERMS:
            omitted = abs(term)
            break
        terms.append(term)
        partial += term
    value = _alternating_sum(terms)
    # All terms may underflow for tiny x; the density is then zero to double precision.
    return AlphaEval(x=x, value=value, method=AlphaMethod.REFLECTION, est_error=omitted)


def _integral_integrand(x: float) -> tuple[GridFunction, GridFunction]:
    def oscillating(y: FloatArray) -> FloatArray:
        e1 = np.exp(-y)
        e2 = e1 * e1
        denominator = (1.0 - e2) ** 2 + 4.0 * e2 * np.cos(y) ** 2
        # 2xy² = high + low; cos(high) is exact to an ulp however large high is.
        high, low = quadratic_phase(2.0 * x, y)
        cos_high, sin_high = np.cos(high), np.sin(high)
        cos_quad = cos_high * np.cos(low) - sin_high * np.sin(low)
        shift = y - low
        cos_shifted = cos_high * np.cos(shift) + sin_high * np.sin(shift)
        numerator = 2.0 * y * e1 * (1.0 - e2) * cos_shifted
        numerator = numerator + 4.0 * y * e1 * e2 * np.cos(y) * cos_quad
        return np.asarray((4.0 / math.pi) * numerator / denominator, dtype=np.float64)

    def dominating(y: FloatArray) -> FloatArray:
        e1 = np.exp(-y)
        e2 = e1 * e1
        denominator = (1.0 - e2) ** 2 + 4.0 * e2 * np.cos(y) ** 2
        return np.asarray((4.0 / math.pi) * 2.0 * y * e1 * (1.0 + e2) / denominator)

    return oscillating, dominating


def _relative_scale(x: float) -> float:
    if x >= SERIES_THRESHOLD:
        return min(1.0, tail_asymptote(x))
    leading = math.exp(-0.5 * math.log(math.pi) - 1.5 * math.log(x) - 1.0 / (4.0 * x))
    return min(1.0, max(leading, 1e-300))


def alpha1_integral(
    x: float,
    tol: float = DEFAULT_TOL,
    *,
    max_panels: int = DEFAULT_MAX_PANELS,
    attempts: int = 3,
) -> AlphaEval:
    """α₁(x) from its oscillatory integral representation.

    Tolerances below the rounding of the summed integrand magnitude are
    raised to that floor.

    Args:
        x: Chaos value
        tol: Tolerance relative to the size of α₁ near x
        max_panels: Panel budget of the first quadrature attempt
        attempts: Number of budget-doubling attempts

    Returns:
        Evaluation with method ``integral``; ``est_error`` is the panel error
        plus the tail bound

    Raises:
        InvalidParameterError: If x or tol is not positive
        ToleranceUnreachableError: If the panel budget is exhausted
    """
    _require_positive(x)
    _require_positive(tol, "tol")
    oscillating, _ = _integral_integrand(x)
    result = integrate_semiline(
        oscillating,
        _INTEGRAL_ENVELOPE,
        tol * _relative_scale(x),
        oscillation_scale=lambda T: 4.0 * x * T + 1.0,
        max_panels=max_panels,
        attempts=attempts,
    )
    logger.debug(
        "alpha_1(%s) by integral: %d panels, T=%.4g", x, result.panels_used, result.truncation
    )
    return AlphaEval(x=x, value=result.real, method=AlphaMethod.INTEGRAL, est_error=result.error)


def alpha1_uniform_bound(tol: float = 1e-10) -> QuadResult:
    """(4/π) ∫₀^∞ y ch y / (sh²y + cos²y) dy, a bound on α₁ over the whole half-line."""
    _, dominating = _integral_integrand(1.0)
    return integrate_semiline(dominating, _INTEGRAL_ENVELOPE, tol)


def alpha1(
    x: float,
    method: AlphaMethod | None = None,
    threshold: float = SERIES_THRESHOLD,
    tol: float = DEFAULT_TOL,
) -> AlphaEval:
    """α₁(x) by the requested method, or the series above ``threshold`` and the integral below.

    Raises:
        InvalidParameterError: If x is not positive
        SeriesUnreliableError: If an explicitly requested series is out of range
    """
    if method is None:
        _require_positive(x)
        method = AlphaMethod.SERIES if x >= threshold else AlphaMethod.INTEGRAL
    if method is AlphaMethod.SERIES:
        return alpha1_series(x, threshold)
    if method is AlphaMethod.REFLECTION:
        return alpha1_small_time(x)
    return alpha1_integral(x, tol)


def alpha_scaled(s: float, x: float, threshold: float = SERIES_THRESHOLD) -> float:
    """α_s(x) = s⁻² α₁(x/s²), the density of A_s.

    Raises:
        InvalidParameterError: If s or x is not positive
    """
    _require_positive(s, "s")
    _require_positive(x)
    return alpha1(x / (s * s), threshold=threshold).value / (s * s)


def tilted_alpha1_grid(
    x: npt.ArrayLike, lam: float = 0.0, threshold: float = SERIES_THRESHOLD
) -> FloatArray:
    """Vectorized e^{λx} α₁(x) from the two series, without overflow of e^{λx}.

    Points below ``threshold`` use the reflection series, the others the
    theta-like series with its leading exponential factored out.
    """
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if np.any(arr < 0):
        raise InvalidParameterError("alpha_1 grid needs nonnegative points")
    out = np.zeros_like(arr)
    small = (arr > 0) & (arr < threshold)
    large = arr >= threshold
    if np.any(small):
        xs = arr[small][:, None]
        log_terms = (
            np.log(_ODD) - 0.5 * math.log(math.pi) - 1.5 * np.log(xs) - _ODD**2 / (4.0 * xs)
        )
        out[small] = np.exp(lam * arr[small]) * (_SIGNS * np.exp(log_terms)).sum(axis=1)
    if np.any(large):
        xl = arr[large]
        # (n+½)² − ¼ = n(n+1)
        decay = np.exp(-np.outer(xl, _N * (_N + 1.0)) * PI_SQ)
        ratio = (_SIGNS * _ODD * decay).sum(axis=1)
        out[large] = math.pi * np.exp((lam - ABSCISSA) * xl) * ratio
    return out.reshape(np.shape(x)) if np.ndim(x) else out


def alpha1_grid(x: npt.ArrayLike, threshold: float = SERIES_THRESHOLD) -> FloatArray:
    """Vectorized α₁ over an array of points."""
    return tilted_alpha1_grid(x, 0.0, threshold)


def alpha1_cdf_grid(x: npt.ArrayLike, threshold: float = SERIES_THRESHOLD) -> FloatArray:
    """Vectorized P(A₁ <= x).

    Small x: 2 Σ (−1)ⁿ erfc((2n+1)/(2√x)). Otherwise:
    1 − (4/π) Σ (−1)ⁿ e^{−(2n+1)²π²x/4}/(2n+1).
    """
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    out = np.zeros_like(arr)
    small = (arr > 0) & (arr < threshold)
    large = arr >= threshold
    if np.any(small):
        args = _ODD / (2.0 * np.sqrt(arr[small][:, None]))
        out[small] = 2.0 * (_SIGNS * sp.erfc(args)).sum(axis=1)
    if np.any(large):
        decay = np.exp(-np.outer(arr[large], _ODD**2) * PI_SQ / 4.0)
        out[large] = 1.0 - (4.0 / math.pi) * (_SIGNS * decay / _ODD).sum(axis=1)
    out = np.clip(out, 0.0, 1.0)
    return out.reshape(np.shape(x)) if np.ndim(x) else out


def alpha1_cdf(x: float) -> float:
    """Distribution function of A₁ at x (zero for x <= 0)."""
    return float(alpha1_cdf_grid(np.array([x]))[0])


def alpha_laplace(lam: float, tol: float = LAPLACE_TOL) -> QuadResult:
    """∫₀^∞ e^{λx} α₁(x) dx by quadrature, for λ < π²/4.

    Beyond 1/π² the integrand is π e^{−(π²/4 − λ)x} up to a factor 1 − 3e^{−2π²x},
    so the tail past the truncation point is added in closed form and only the
    neglected correction is reported as tail error. The closed form of the
    whole transform is 1/cos√λ for λ >= 0 and 1/ch√(−λ) for λ < 0.

    Args:
        lam: Real exponent
        tol: Absolute tolerance

    Returns:
        Real-valued quadrature result

    Raises:
        DomainError: If π²/4 − λ < 1e-2
    """
    if not math.isfinite(lam):
        raise InvalidParameterError(f"λ must be finite, got {lam}")
    rate = ABSCISSA - lam
    if rate < LAPLACE_GAP:
        raise DomainError(f"λ={lam} is too close to or beyond the abscissa π²/4")
    envelope = DecayEnvelope(
        kind=EnvelopeKind.EXPONENTIAL,
        rate=rate,
        prefactor=math.pi * math.exp(-rate * SANDWICH_START),
        threshold=SANDWICH_START,
    )

    def integrand(t: FloatArray) -> FloatArray:
        return tilted_alpha1_grid(t, lam)

    body = integrate_semiline(integrand, envelope, tol)
    T = body.truncation
    tail = math.pi * math.exp(-rate * T) / rate
    correction_rate = rate + 2.0 * PI_SQ
    correction = 3.0 * math.pi * math.exp(-correction_rate * T) / correction_rate
    result = replace(body, value=body.value + tail, tail_bound=correction)
    logger.debug("Laplace transform of alpha_1 at λ=%s: %.12g", lam, result.real)
    return result


def laplace_closed_form(lam: float) -> float:
    """1/cos√λ for 0 <= λ < π²/4, 1/ch√(−λ) for λ < 0."""
    if lam >= ABSCISSA:
        raise DomainError(f"λ={lam} is beyond the abscissa π²/4")
    if lam >= 0:
        return 1.0 / math.cos(math.sqrt(lam))
    return 1.0 / math.cosh(math.sqrt(-lam))
