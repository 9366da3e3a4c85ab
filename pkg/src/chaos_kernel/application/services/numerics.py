"""Numerical kernels: principal square root, bracketed roots, semi-infinite quadrature."""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable, Sequence
from itertools import pairwise
from typing import Final

import numpy as np
import numpy.typing as npt
from scipy import optimize
from tenacity import (
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
)

from chaos_kernel.domain.exceptions import (
    BranchCutError,
    ConvergenceError,
    EnvelopeViolationError,
    InvalidParameterError,
    NoSignChangeError,
    NumericFailureError,
    ToleranceUnreachableError,
)
from chaos_kernel.domain.value_objects.envelope import DecayEnvelope
from chaos_kernel.domain.value_objects.quad_result import QuadResult

logger = logging.getLogger(__name__)

type Integrand = Callable[[npt.NDArray[np.float64]], npt.ArrayLike]
type FloatArray = npt.NDArray[np.float64]

BISECT_WIDTH: Final = 1e-6
DEFAULT_MAX_PANELS: Final = 20_000
INITIAL_PANELS: Final = 8
ENVELOPE_SAMPLES: Final = 16
ROUNDOFF: Final = 50.0 * float(np.finfo(np.float64).eps)
# 2**27 + 1, splits a double into two 26-bit halves.
_SPLITTER: Final = 134217729.0

_X20, _W20 = np.polynomial.legendre.leggauss(20)
_X10, _W10 = np.polynomial.legendre.leggauss(10)


def principal_sqrt(v: complex) -> complex:
    """Principal square root with the cut on the open negative real axis.

    Args:
        v: Complex argument

    Returns:
        The root with nonnegative real part

    Raises:
        BranchCutError: If v is a negative real number
        NumericFailureError: If v is not finite
    """
    v = complex(v)
    if not cmath.isfinite(v):
        raise NumericFailureError(f"principal_sqrt of non-finite value {v}")
    if v.imag == 0 and v.real < 0:
        raise BranchCutError(f"{v} lies on the branch cut of the principal square root")
    return cmath.sqrt(v)


def find_root_bracketed(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-13,
    *,
    fprime: Callable[[float], float] | None = None,
    max_iter: int = 200,
) -> float:
    """Root of a continuous function that changes sign on [lo, hi].

    Bisection shrinks the bracket to ``BISECT_WIDTH``; Newton (secant when no
    derivative is given) then polishes to ``tol``. A polish step leaving the
    bracket falls back to Brent's method on the shrunk bracket.

    Raises:
        NoSignChangeError: If f(lo) and f(hi) have the same sign
        ConvergenceError: If the iteration cap is hit
    """
    if not lo < hi:
        raise InvalidParameterError(f"Empty bracket [{lo}, {hi}]")
    f_lo, f_hi = f(lo), f(hi)
    if not (math.isfinite(f_lo) and math.isfinite(f_hi)):
        raise NumericFailureError(f"Non-finite bracket values f({lo})={f_lo}, f({hi})={f_hi}")
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise NoSignChangeError(f"f({lo})={f_lo} and f({hi})={f_hi} have the same sign")

    iterations = 0
    while hi - lo > BISECT_WIDTH:
        iterations += 1
        if iterations > max_iter:
            raise ConvergenceError(f"Bisection did not reach width {BISECT_WIDTH}")
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid

    root, info = optimize.newton(
        f, 0.5 * (lo + hi), fprime=fprime, tol=tol, maxiter=50, full_output=True, disp=False
    )
    if info.converged and lo <= root <= hi:
        return float(root)

    logger.debug("Newton polish left [%s, %s], falling back to brentq", lo, hi)
    root, info = optimize.brentq(
        f, lo, hi, xtol=tol, maxiter=max_iter, full_output=True, disp=False
    )
    if not info.converged:
        raise ConvergenceError(f"Root polish on [{lo}, {hi}] did not converge: {info.flag}")
    return float(root)


def _split(a: FloatArray) -> tuple[FloatArray, FloatArray]:
    c = _SPLITTER * a
    high = c - (c - a)
    return high, a - high


def two_product(a: npt.ArrayLike, b: npt.ArrayLike) -> tuple[FloatArray, FloatArray]:
    """a·b as an unevaluated sum hi + lo with hi the rounded product (Dekker).

    Exact unless the product overflows or underflows.
    """
    a_arr, b_arr = np.broadcast_arrays(
        np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
    )
    product = a_arr * b_arr
    a_hi, a_lo = _split(a_arr)
    b_hi, b_lo = _split(b_arr)
    error = ((a_hi * b_hi - product) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return product, error


def quadratic_phase(coefficient: float, t: npt.ArrayLike) -> tuple[FloatArray, FloatArray]:
    """coefficient·t² as hi + lo, keeping the digits rounding would drop from a large phase.

    cos(hi + lo) then carries an error of a few ulp instead of eps·|phase|.
    """
    square, square_lo = two_product(t, t)
    high, high_lo = two_product(coefficient, square)
    return high, high_lo + coefficient * square_lo


def truncation_point(envelope: DecayEnvelope, target: float) -> float:
    """Smallest T >= threshold with envelope tail below ``target``.

    Raises:
        ConvergenceError: If no such T is found below 2**60 times the start
    """
    if not target > 0:
        raise InvalidParameterError(f"Tail target must be positive, got {target}")
    log_target = math.log(target)
    start = envelope.min_tail_start()

    def excess(T: float) -> float:
        return envelope.log_tail(T) - log_target

    if excess(start) <= 0:
        return start if start > 0 else 1.0
    lo, hi = start, max(2.0 * start, 1.0)
    for _ in range(60):
        if excess(hi) <= 0:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise ConvergenceError("Envelope tail never falls below target")
    T = optimize.brentq(excess, lo, hi, xtol=1e-12 * hi)
    # Step just past the root so the bound holds despite rounding.
    return float(T) * (1.0 + 1e-12)


def _eval(f: Integrand, t: npt.NDArray[np.float64]) -> npt.NDArray[np.complex128]:
    values = np.asarray(f(t), dtype=np.complex128)
    if values.shape != t.shape:
        values = np.broadcast_to(values, t.shape)
    if not np.all(np.isfinite(values)):
        raise NumericFailureError("Integrand returned non-finite values")
    return values


def _panel_rule(
    f: Integrand, a: npt.NDArray[np.float64], b: npt.NDArray[np.float64]
) -> tuple[npt.NDArray[np.complex128], npt.NDArray[np.complex128], npt.NDArray[np.float64]]:
    half = 0.5 * (b - a)[:, None]
    mid = 0.5 * (b + a)[:, None]
    f20 = _eval(f, mid + half * _X20)
    g20 = (f20 * _W20).sum(axis=1) * half[:, 0]
    g10 = (_eval(f, mid + half * _X10) * _W10).sum(axis=1) * half[:, 0]
    magnitude = (np.abs(f20) * _W20).sum(axis=1) * half[:, 0]
    return g20, g10, magnitude


def initial_edges(
    lo: float, hi: float, panels: int, breakpoints: Sequence[float] = ()
) -> FloatArray:
    """Uniform panel edges on [lo, hi] that include every breakpoint inside it.

    Each piece between breakpoints gets its length share of ``panels``, at least one.
    """
    cuts = [lo, *sorted(p for p in breakpoints if lo < p < hi), hi]
    pieces = [
        np.linspace(start, stop, max(1, math.ceil(panels * (stop - start) / (hi - lo))) + 1)[:-1]
        for start, stop in pairwise(cuts)
    ]
    return np.append(np.concatenate(pieces), hi)


def _adaptive(
    f: Integrand,
    edges: FloatArray,
    tol: float,
    max_panels: int,
) -> tuple[complex, float, int]:
    lo, hi = float(edges[0]), float(edges[-1])
    a, b = edges[:-1], edges[1:]
    length = hi - lo
    target = tol
    value_parts: list[npt.NDArray[np.complex128]] = []
    error = 0.0
    accepted = 0
    first_pass = True
    while a.size:
        if accepted + a.size > max_panels:
            raise ToleranceUnreachableError(
                f"Quadrature on [{lo}, {hi}] needs more than {max_panels} panels for tol={target}"
            )
        g20, g10, magnitude = _panel_rule(f, a, b)
        err = np.abs(g20 - g10)
        if first_pass:
            first_pass = False
            # A cancelling integral is only known to rounding of its absolute integral.
            floor = ROUNDOFF * float(magnitude.sum())
            if floor > target:
                logger.debug("Tolerance %.3e raised to rounding floor %.3e", target, floor)
                target = floor
        # Differences at rounding level of the panel's absolute integral cannot shrink further.
        ok = err <= np.maximum(target * (b - a) / length, ROUNDOFF * magnitude)
        if error + float(err.sum()) <= target:
            ok = np.ones_like(ok)
        value_parts.append(g20[ok])
        error += float(err[ok].sum())
        accepted += int(ok.sum())
        mids = 0.5 * (a[~ok] + b[~ok])
        a, b = np.concatenate([a[~ok], mids]), np.concatenate([mids, b[~ok]])
    total = complex(np.concatenate(value_parts).sum()) if value_parts else 0j
    return total, error, accepted


def integrate_interval(
    f: Integrand,
    lo: float,
    hi: float,
    tol: float,
    *,
    oscillation_scale: float | None = None,
    breakpoints: Sequence[float] = (),
    max_panels: int = DEFAULT_MAX_PANELS,
    attempts: int = 3,
) -> QuadResult:
    """Adaptive panel quadrature of a vectorized integrand over [lo, hi].

    Each panel is integrated with 20- and 10-point Gauss-Legendre rules; the
    20-point value is kept and their difference is the panel error. Panels
    whose error exceeds their length share of ``tol`` are bisected, until the
    summed error is below ``tol``. A ``tol`` below rounding of the absolute
    integral is raised to that floor. When the budget runs out the whole pass
    is retried with twice as many panels.

    Args:
        f: Integrand accepting and returning arrays
        lo: Lower limit
        hi: Upper limit
        tol: Absolute tolerance on the integral
        oscillation_scale: Largest angular frequency of the integrand; caps the
            initial panel width at half a period
        breakpoints: Points where the integrand may be non-smooth; no panel straddles one
        max_panels: Panel budget of the first attempt
        attempts: Number of attempts, each doubling the budget

    Returns:
        Integral with ``tail_bound`` equal to zero

    Raises:
        ToleranceUnreachableError: If the last attempt runs out of panels
    """
    if not hi > lo:
        raise InvalidParameterError(f"Empty interval [{lo}, {hi}]")
    if not tol > 0:
        raise InvalidParameterError(f"Tolerance must be positive, got {tol}")
    initial = INITIAL_PANELS
    if oscillation_scale is not None and oscillation_scale > 0:
        initial = max(initial, math.ceil((hi - lo) * oscillation_scale / math.pi))
    edges = initial_edges(lo, hi, initial, breakpoints)
    if edges.size - 1 > max_panels:
        max_panels = 2 * (edges.size - 1)

    result: tuple[complex, float, int] = (0j, 0.0, 0)
    for attempt in Retrying(
        stop=stop_after_attempt(attempts),
        retry=retry_if_exception_type(ToleranceUnreachableError),
        before_sleep=before_sleep_log(logger, logging.WARNING),
        reraise=True,
    ):
        with attempt:
            budget = max_panels * 2 ** (attempt.retry_state.attempt_number - 1)
            result = _adaptive(f, edges, tol, budget)
    value, error, panels = result
    logger.debug("Integrated [%s, %s] with %d panels, error %.3e", lo, hi, panels, error)
    return QuadResult(
        value=value, quad_error=error, tail_bound=0.0, panels_used=panels, truncation=hi
    )


def check_envelope(f: Integrand, envelope: DecayEnvelope, T: float) -> None:
    """Sample f beyond the envelope threshold and compare with the bound.

    Raises:
        EnvelopeViolationError: If any sample exceeds the envelope
    """
    start = max(envelope.threshold, T / 64.0)
    t = np.geomspace(start, 2.0 * T, ENVELOPE_SAMPLES)
    values = np.abs(_eval(f, t))
    bound = envelope.bound(t)
    bad = values > bound * (1.0 + 1e-9) + 1e-300
    if np.any(bad):
        t_bad = float(t[np.argmax(bad)])
        raise EnvelopeViolationError(
            f"Integrand exceeds its envelope at t={t_bad:.6g}: "
            f"{float(values[np.argmax(bad)]):.6g} > {float(bound[np.argmax(bad)]):.6g}"
        )


def integrate_semiline(
    f: Integrand,
    envelope: DecayEnvelope,
    tol: float,
    *,
    oscillation_scale: float | Callable[[float], float] | None = None,
    breakpoints: Sequence[float] = (),
    max_panels: int = DEFAULT_MAX_PANELS,
    attempts: int = 3,
) -> QuadResult:
    """Integral of f over [0, inf) with an analytic tail bound.

    The truncation point T is the smallest point where the envelope tail is
    below tol/2; [0, T] is integrated adaptively to tol/2.

    Args:
        f: Vectorized integrand, real or complex valued
        envelope: Bound on |f| beyond its threshold
        tol: Absolute tolerance on the whole integral
        oscillation_scale: Angular frequency bound, or a function of T giving it
        breakpoints: Points where the integrand may be non-smooth
        max_panels: Panel budget of the first attempt
        attempts: Number of budget-doubling attempts

    Returns:
        Value, panel error, tail bound, panel count and truncation point

    Raises:
        EnvelopeViolationError: If sampling finds |f| above the envelope
        ToleranceUnreachableError: If the panel budget is exhausted
    """
    if not tol > 0:
        raise InvalidParameterError(f"Tolerance must be positive, got {tol}")
    T = truncation_point(envelope, tol / 2.0)
    tail = math.exp(envelope.log_tail(T))
    check_envelope(f, envelope, T)
    omega = oscillation_scale(T) if callable(oscillation_scale) else oscillation_scale
    logger.debug("Semi-infinite quadrature truncated at T=%.6g, tail %.3e", T, tail)
    body = integrate_interval(
        f,
        0.0,
        T,
        tol / 2.0,
        oscillation_scale=omega,
        breakpoints=breakpoints,
        max_panels=max_panels,
        attempts=attempts,
    )
    return QuadResult(
        value=body.value,
        quad_error=body.quad_error,
        tail_bound=tail,
        panels_used=body.panels_used,
        truncation=T,
    )
