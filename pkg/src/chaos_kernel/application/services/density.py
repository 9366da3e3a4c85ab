"""Density q_s of the tangent process and its small-time equivalent.

With a = B_s²/s³, c = (w² + β²)/(2s) and ℓ = (B′_s − x)/s², the density is

    q_s = q̃_s/(3πs²) ∫₀^∞ G_s(ξ) e^{−a(U_r − 12) − c(V_r − 1)} ξ⁵ dξ,
    G_s = 2F_r cos Λ_s − 2F_i sin Λ_s,   Λ_s = 2ξ²(a U_i + ℓ + c V_i),

evaluated through the regularized functions so the integrand is finite at 0.
"""

from __future__ import annotations

import logging
import math
from typing import Final

import numpy as np
import numpy.typing as npt

from chaos_kernel.application.services.numerics import (
    DEFAULT_MAX_PANELS,
    integrate_interval,
    integrate_semiline,
    quadratic_phase,
    truncation_point,
)
from chaos_kernel.application.services.special import XI_SERIES, aux_table
from chaos_kernel.application.services.transforms import phi, psi
from chaos_kernel.domain.entities.chaos_point import ChaosPoint
from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.exceptions import (
    AsymptoticUndefinedError,
    InvalidParameterError,
    NumericFailureError,
    OscillationBudgetError,
)
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome
from chaos_kernel.domain.value_objects.envelope import DecayEnvelope, EnvelopeKind
from chaos_kernel.domain.value_objects.quad_result import (
    CONSISTENT_WITH_ZERO,
    NEGATIVE_WITHIN_ERROR,
    QuadResult,
)
from chaos_kernel.domain.value_objects.regime import Regime, RegimeReport
from chaos_kernel.domain.value_objects.scale_params import ScaleParams

logger = logging.getLogger(__name__)

type FloatArray = npt.NDArray[np.float64]

DENSITY_TOL: Final = 1e-8
OSCILLATION_BUDGET: Final = 1e4
MU_THRESHOLD: Final = 10.0
EPSILON: Final = 0.5

ENVELOPE_START: Final = 2.0 * math.pi
# 2|F(ξ)|ξ <= 32 e^{−ξ} on [2π, ∞), with margin
ENVELOPE_CONSTANT: Final = 32.0
# U_r(ξ) >= 2ξ + 4 and V_r(ξ) >= ξ/2 − 0.05 on [2π, ∞)
V_R_OFFSET: Final = 1.05
LOG_MARGINAL_PREFACTOR: Final = math.log(3.0 / math.pi**2)
LOG_ASYMPTOTIC_PREFACTOR: Final = -math.log(20.0 * math.pi**3)
# Exponent of the Chernoff bound on the x-tail; Φ is finite below 4π².
CHERNOFF_RATE: Final = 2.0 * math.pi**2


def _require_time(s: float) -> None:
    if not (math.isfinite(s) and s > 0):
        raise InvalidParameterError(f"Proper time must be positive, got {s}")


def scale_params(p: ChaosPoint, s: float) -> ScaleParams:
    """B_s², B′_s, μ_s and ν_s of a point at proper time s.

    ν_s is the quartic coefficient B_s²/(175s³) + (w² + β²)/(360s) of the
    decay exponent at ξ = 0.

    Raises:
        InvalidParameterError: If s <= 0
    """
    _require_time(s)
    w, beta, x, zeta, z = p.as_tuple()
    energy = w * w + beta * beta
    b_sq = ((s * w - 2.0 * z) ** 2 + (s * beta - 2.0 * zeta) ** 2) / 8.0
    b_prime = (4.0 * w * z + 4.0 * beta * zeta - s * energy) / 8.0
    mu = 6.0 * b_sq / (5.0 * s**3) + (b_prime - x) / s**2 + energy / (24.0 * s)
    nu = b_sq / (175.0 * s**3) + energy / (360.0 * s)
    return ScaleParams(b_sq=b_sq, b_prime=b_prime, mu=mu, nu=nu)


def mu_completed_square(p: ChaosPoint, s: float) -> float:
    """μ_s as 3[(z − sw/12)² + (ζ − sβ/12)²]/(5s³) + (w² + β²)/(16s) − x/s²."""
    _require_time(s)
    return (
        3.0 * ((p.z - s * p.w / 12.0) ** 2 + (p.zeta - s * p.beta / 12.0) ** 2) / (5.0 * s**3)
        + (p.w * p.w + p.beta * p.beta) / (16.0 * s)
        - p.x / s**2
    )


def gaussian_exponent(p: MarginalPoint, s: float) -> float:
    """−3[(sw − 2z)² + (sβ − 2ζ)²]/(2s³) − (w² + β²)/(2s)."""
    return -3.0 * ((s * p.w - 2.0 * p.z) ** 2 + (s * p.beta - 2.0 * p.zeta) ** 2) / (
        2.0 * s**3
    ) - (p.w * p.w + p.beta * p.beta) / (2.0 * s)


def log_marginal_gauss(p: MarginalPoint, s: float) -> float:
    """Logarithm of :func:`marginal_gauss`."""
    _require_time(s)
    return LOG_MARGINAL_PREFACTOR - 4.0 * math.log(s) + gaussian_exponent(p, s)


def marginal_gauss(p: MarginalPoint, s: float) -> float:
    """Density q̃_s of (w_s, β_s, ζ_s, z_s): (3/(π²s⁴)) times the Gaussian exponent.

    Raises:
        InvalidParameterError: If s <= 0
    """
    return math.exp(log_marginal_gauss(p, s))


def chaos_floor(p: MarginalPoint, s: float) -> float:
    """Smallest reachable chaos value (z² + ζ²)/(2s) given the integrated coordinates.

    ∫w² >= z²/s on [0, s], so q_s vanishes for x below this floor.
    """
    _require_time(s)
    return (p.z * p.z + p.zeta * p.zeta) / (2.0 * s)


def _coefficients(p: ChaosPoint, s: float) -> tuple[float, float, float]:
    params = scale_params(p, s)
    a = params.b_sq / s**3
    c = (p.w * p.w + p.beta * p.beta) / (2.0 * s)
    linear = (params.b_prime - p.x) / s**2
    return a, c, linear


def integrand_grid(p: ChaosPoint, s: float, xi: npt.ArrayLike) -> FloatArray:
    """Vectorized integrand G_s(ξ) e^{−a(U_r−12) − c(V_r−1)} ξ⁵ over ξ >= 0."""
    a, c, linear = _coefficients(p, s)
    table = aux_table(xi)
    t = table.xi
    t2 = t * t
    # Λ_s = high + rest, with 2ℓξ² carried exactly in high + low.
    high, low = quadratic_phase(2.0 * linear, t)
    rest = 2.0 * t2 * (a * table.u_i + c * table.v_i) + low
    cos_high, sin_high = np.cos(high), np.sin(high)
    cos_rest, sin_rest = np.cos(rest), np.sin(rest)
    cos_phase = cos_high * cos_rest - sin_high * sin_rest
    sin_phase = sin_high * cos_rest + cos_high * sin_rest
    decay = np.exp(-t2 * t2 * (a * table.tilde_u_r + c * table.tilde_v_r))
    values = 2.0 * (table.f_r_reg * cos_phase - table.f_i_reg * t2 * sin_phase)
    return np.asarray(values * t * decay, dtype=np.float64).reshape(np.shape(xi))


def integrand_eval(p: ChaosPoint, s: float, xi: float) -> float:
    """Integrand of the density at a single ξ >= 0; tends to 0 like 12ξ cos Λ_s.

    Raises:
        InvalidParameterError: If s <= 0 or ξ < 0
    """
    _require_time(s)
    return float(integrand_grid(p, s, np.array([xi]))[0])


def density_envelope(p: ChaosPoint, s: float) -> DecayEnvelope:
    """Bound 32ξ⁴ exp[−ξ − a(2ξ − 8) − c(ξ/2 − 1.05)] on the integrand for ξ >= 2π."""
    a, c, _ = _coefficients(p, s)
    t0 = ENVELOPE_START
    log_pref = (
        math.log(ENVELOPE_CONSTANT)
        + 4.0 * math.log(t0)
        - t0
        - a * (2.0 * t0 - 8.0)
        - c * (t0 / 2.0 - V_R_OFFSET)
    )
    return DecayEnvelope(
        kind=EnvelopeKind.EXPONENTIAL,
        rate=1.0 + 2.0 * a + c / 2.0,
        prefactor=max(math.exp(log_pref), 1e-300),
        threshold=t0,
        power=4.0,
    )


def oscillation_rate(p: ChaosPoint, s: float) -> float:
    """K with |Λ_s(ξ)| <= 2Kξ², using 1 <= U_i <= 6/5 and 0 < V_i <= 1/12."""
    a, c, linear = _coefficients(p, s)
    return 1.25 * a + abs(linear) + c / 12.0


def q_exact(
    p: ChaosPoint,
    s: float,
    tol: float = DENSITY_TOL,
    *,
    max_panels: int = DEFAULT_MAX_PANELS,
    attempts: int = 3,
    oscillation_budget: float = OSCILLATION_BUDGET,
) -> QuadResult:
    """Exact density q_s at p by semi-infinite quadrature.

    Args:
        p: Point of the state space
        s: Proper time
        tol: Absolute tolerance on the dimensionless ξ-integral
        max_panels: Panel budget of the first quadrature attempt
        attempts: Number of budget-doubling attempts
        oscillation_budget: Largest number of phase periods accepted on [0, T]

    Returns:
        Real-valued result scaled by q̃_s/(3πs²); small values within the error
        are flagged rather than clamped

    Raises:
        InvalidParameterError: If s <= 0
        OscillationBudgetError: If the phase makes more periods than the budget
        ToleranceUnreachableError: If the panel budget is exhausted
        NumericFailureError: If the value is negative beyond its error
    """
    _require_time(s)
    envelope = density_envelope(p, s)
    rate = oscillation_rate(p, s)
    T = truncation_point(envelope, tol / 2.0)
    periods = rate * T * T / math.pi
    if periods > oscillation_budget:
        raise OscillationBudgetError(
            f"Phase makes {periods:.3g} periods on [0, {T:.3g}], budget {oscillation_budget:g}"
        )

    def integrand(xi: FloatArray) -> FloatArray:
        return integrand_grid(p, s, xi)

    raw = integrate_semiline(
        integrand,
        envelope,
        tol,
        oscillation_scale=lambda upper: 4.0 * rate * upper + 1.0,
        breakpoints=(XI_SERIES,),
        max_panels=max_panels,
        attempts=attempts,
    )
    factor = math.exp(log_marginal_gauss(p.marginal, s) - math.log(3.0 * math.pi * s * s))
    result = raw.scaled(factor)
    value, error = result.real, result.error
    flags: set[str] = set()
    if value < -error:
        raise NumericFailureError(f"q_s = {value:.3e} is negative beyond its error {error:.3e}")
    if abs(value) <= error:
        flags.add(CONSISTENT_WITH_ZERO)
    if value < 0:
        flags.add(NEGATIVE_WITHIN_ERROR)
        logger.warning("q_s at %s is %.3e, negative within error %.3e", p, value, error)
    logger.debug("q_exact at s=%s: %.6e ± %.1e, %d panels", s, value, error, raw.panels_used)
    return result.scaled(1.0, frozenset(flags))


def q_exact_grid(
    p: MarginalPoint, s: float, xs: npt.ArrayLike, tol: float = DENSITY_TOL
) -> list[QuadResult]:
    """q_s along a sweep of chaos values with the Gaussian coordinates fixed."""
    results = []
    for x in np.asarray(xs, dtype=np.float64).ravel():
        point = ChaosPoint(w=p.w, beta=p.beta, x=float(x), zeta=p.zeta, z=p.z)
        results.append(q_exact(point, s, tol))
    return results


def regime_check(
    p: ChaosPoint,
    s: float,
    epsilon: float = EPSILON,
    mu_threshold: float = MU_THRESHOLD,
) -> RegimeReport:
    """Which validity condition of the small-time equivalent holds at (p, s).

    Divergence to infinity is replaced by exceeding ``mu_threshold``.

    Raises:
        InvalidParameterError: If s, epsilon or mu_threshold is not positive
    """
    _require_time(s)
    if not (epsilon > 0 and mu_threshold > 0):
        raise InvalidParameterError("epsilon and mu_threshold must be positive")
    mu = scale_params(p, s).mu
    energy = p.w * p.w + p.beta * p.beta
    drift = p.z * p.z + p.zeta * p.zeta
    large_mu = mu >= mu_threshold and p.x / s**2 <= drift / s**3 + mu / epsilon
    spread = ((s * p.w - 2.0 * p.z) ** 2 + (s * p.beta - 2.0 * p.zeta) ** 2) / s**3 + energy / s
    large_spread = (
        mu > 0
        and spread >= mu_threshold
        and 2.0 * s * p.x <= drift + epsilon * s * s * energy
    )
    if large_mu:
        satisfied = Regime.LARGE_MU
    elif large_spread:
        satisfied = Regime.LARGE_SPREAD
    else:
        satisfied = Regime.NONE
    return RegimeReport(
        satisfied=satisfied,
        mu=mu,
        epsilon=epsilon,
        mu_threshold=mu_threshold,
        large_mu=large_mu,
        large_spread=large_spread,
    )


def q_asymptotic(
    p: ChaosPoint,
    s: float,
    epsilon: float = EPSILON,
    mu_threshold: float = MU_THRESHOLD,
) -> tuple[float | None, RegimeReport]:
    """Small-time equivalent q̃_s/(60πs²μ_s³) of the density.

    Returns:
        The equivalent (None when μ_s <= 0) and the regime report; the value
        is meaningful only when the report names a satisfied condition
    """
    report = regime_check(p, s, epsilon, mu_threshold)
    if report.mu <= 0:
        return None, report
    log_value = (
        LOG_ASYMPTOTIC_PREFACTOR
        - 6.0 * math.log(s)
        - 3.0 * math.log(report.mu)
        + gaussian_exponent(p.marginal, s)
    )
    return math.exp(log_value), report


def asymptotic_ratio(p: ChaosPoint, s: float, tol: float = DENSITY_TOL) -> float:
    """q_exact / q_asymptotic at (p, s).

    Raises:
        AsymptoticUndefinedError: If μ_s <= 0
    """
    value, report = q_asymptotic(p, s)
    if value is None or value == 0.0:
        raise AsymptoticUndefinedError(f"Small-time equivalent undefined, μ_s = {report.mu}")
    return q_exact(p, s, tol).real / value


def x_transform(
    p: MarginalPoint,
    b: float = 0.0,
    tol: float = 1e-6,
    *,
    density_tol: float = 1e-9,
) -> QuadResult:
    """∫₀^∞ e^{−b²x} q_1(w, β, x, ζ, z) dx by outer quadrature over x.

    The integral beyond X is bounded by e^{−λX}Φ(λ) with λ = 2π², and X is
    chosen to make this at most tol/2.

    Raises:
        InvalidParameterError: If b < 0 or tol is not positive
    """
    if b < 0 or not tol > 0:
        raise InvalidParameterError(f"Need b >= 0 and tol > 0, got b={b}, tol={tol}")
    moment = phi(p, CHERNOFF_RATE).real
    upper = max(math.log(2.0 * moment / tol) / CHERNOFF_RATE, 0.5)
    tail = moment * math.exp(-CHERNOFF_RATE * upper)
    inner_errors: list[float] = []

    def integrand(xs: FloatArray) -> FloatArray:
        values = np.empty_like(xs)
        for index, x in np.ndenumerate(xs):
            point = ChaosPoint(w=p.w, beta=p.beta, x=float(x), zeta=p.zeta, z=p.z)
            inner = q_exact(point, 1.0, density_tol)
            inner_errors.append(inner.error)
            values[index] = inner.real * math.exp(-b * b * float(x))
        return values

    body = integrate_interval(integrand, 0.0, upper, tol / 2.0)
    inner = max(inner_errors, default=0.0) * upper
    logger.debug("x-transform at b=%s over [0, %.4g]: %.10g", b, upper, body.real)
    return QuadResult(
        value=body.value,
        quad_error=body.quad_error + inner,
        tail_bound=tail,
        panels_used=body.panels_used,
        truncation=upper,
    )


def marginal_check(p: MarginalPoint, tol: float = 1e-5) -> CheckOutcome:
    """Relative gap between ∫ q_1 dx and the Gaussian marginal Ψ(0)."""
    expected = psi(p, 0.0)
    measured = x_transform(p, 0.0, tol * expected / 10.0)
    return CheckOutcome(
        name="x-marginal",
        measured=abs(measured.real - expected) / expected,
        threshold=tol,
        detail=f"integral={measured.real:.10g} expected={expected:.10g}",
    )


def laplace_check(p: MarginalPoint, b: float, tol: float = 1e-5) -> CheckOutcome:
    """Relative gap between ∫ e^{−b²x} q_1 dx and the closed-form transform Ψ(b)."""
    expected = psi(p, b)
    measured = x_transform(p, b, tol * expected / 10.0)
    return CheckOutcome(
        name=f"x-laplace b={b:g}",
        measured=abs(measured.real - expected) / expected,
        threshold=tol,
        detail=f"integral={measured.real:.10g} expected={expected:.10g}",
    )
