"""Dudley diffusion and its tangent process: vector fields, brackets and Monte Carlo.

The diffusion in hyperbolic coordinates (σ = 1) is the Itô system

    dλ = dw + ½ th λ ds,   dμ = dβ / ch λ,
    dx = ch λ ch μ ds,     dy = ch λ sh μ ds,   dz = sh λ ds,

and its tangent process is Y_s = (w_s, β_s, ½∫(β² + w²), ∫β, ∫w).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable, Sequence
from functools import partial
from typing import Any, Final

import numpy as np
import numpy.typing as npt
from scipy import stats

from chaos_kernel.application.ports.random_stream import RandomStream
from chaos_kernel.application.services.alpha import alpha1_cdf_grid
from chaos_kernel.application.services.transforms import flt_Z
from chaos_kernel.domain.entities.path_config import PathConfig
from chaos_kernel.domain.entities.phase_point import PhasePoint
from chaos_kernel.domain.exceptions import (
    InsufficientPathsError,
    InvalidParameterError,
    PathBlowUpError,
)
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome
from chaos_kernel.domain.value_objects.ensembles import (
    DudleyEnsemble,
    Estimate,
    RemainderSurvey,
    RemainderRow,
    TangentSample,
)
from chaos_kernel.domain.value_objects.field_vector import FieldVector
from chaos_kernel.domain.value_objects.fl_query import FLQueryZ

logger = logging.getLogger(__name__)

type FloatArray = npt.NDArray[np.float64]
type Field = Callable[[FloatArray], FloatArray]
type BlockMap = Callable[[Callable[..., Any], Iterable[tuple[Any, ...]]], list[Any]]

BLOWUP_GUARD: Final = 300.0
RANK_TOLERANCE: Final = 1e-10
FD_STEP: Final = 1e-3
BLOCK_SIZE: Final = 256
MIN_SURVEY_PATHS: Final = 1000
MIN_KS_SAMPLES: Final = 100
SURVEY_STEPS: Final = 256
HITTING_DT: Final = 1e-3
HITTING_CHUNK: Final = 512
KS_LEVEL: Final = 0.01
Z_SCORE_LIMIT: Final = 3.0


# Vector fields on (s, λ, μ, x, y, z)


def _v1(q: FloatArray) -> FloatArray:
    return np.array([0.0, 1.0, 0.0, 0.0, 0.0, 0.0])


def _v2(q: FloatArray) -> FloatArray:
    return np.array([0.0, 0.0, 1.0 / math.cosh(q[1]), 0.0, 0.0, 0.0])


def _v0_prime(q: FloatArray) -> FloatArray:
    lam, mu = q[1], q[2]
    ch = math.cosh(lam)
    return np.array(
        [1.0, 0.5 * math.tanh(lam), 0.0, ch * math.cosh(mu), ch * math.sinh(mu), math.sinh(lam)]
    )


def _state(p: PhasePoint) -> FloatArray:
    return np.concatenate([[0.0], p.as_array()])


def vector_fields(p: PhasePoint) -> tuple[FieldVector, FieldVector, FieldVector]:
    """V₁ = ∂λ, V₂ = (1/ch λ)∂μ and V′₀ = ∂s + ½th λ ∂λ + ch λ ch μ ∂x + ch λ sh μ ∂y + sh λ ∂z."""
    q = _state(p)
    return (
        FieldVector.from_array(_v1(q)),
        FieldVector.from_array(_v2(q)),
        FieldVector.from_array(_v0_prime(q)),
    )


def bracket_basis(p: PhasePoint) -> tuple[FieldVector, ...]:
    """(V′₀, V₁, V₂, [V₁,V′₀], [V₂,V′₀], [V₂,[V₂,V′₀]]) from their closed forms.

    [V₁,V′₀] = 1/(2ch²λ) ∂λ + sh λ ch μ ∂x + sh λ sh μ ∂y + ch λ ∂z,
    [V₂,V′₀] = th²λ/(2 ch λ) ∂μ + sh μ ∂x + ch μ ∂y,
    [V₂,[V₂,V′₀]] = (ch μ ∂x + sh μ ∂y)/ch λ.
    """
    v1, v2, v0 = vector_fields(p)
    ch, sh = math.cosh(p.lam), math.sinh(p.lam)
    chm, shm = math.cosh(p.mu), math.sinh(p.mu)
    b10 = FieldVector(components=(0.0, 0.5 / (ch * ch), 0.0, sh * chm, sh * shm, ch))
    b20 = FieldVector(components=(0.0, 0.0, math.tanh(p.lam) ** 2 / (2.0 * ch), shm, chm, 0.0))
    b220 = FieldVector(components=(0.0, 0.0, 0.0, chm / ch, shm / ch, 0.0))
    return (v0, v1, v2, b10, b20, b220)


def jacobian_fd(field: Field, q: FloatArray, h: float = FD_STEP) -> FloatArray:
    """Five-point central-difference Jacobian, rows indexed by component."""
    q = np.asarray(q, dtype=np.float64)
    columns = []
    for j in range(q.size):
        e = np.zeros_like(q)
        e[j] = h
        columns.append(
            (-field(q + 2 * e) + 8.0 * field(q + e) - 8.0 * field(q - e) + field(q - 2 * e))
            / (12.0 * h)
        )
    return np.stack(columns, axis=1)


def lie_bracket_fd(x_field: Field, y_field: Field, h: float = FD_STEP) -> Field:
    """[X, Y] = DY·X − DX·Y with finite-difference Jacobians, as a new field."""

    def bracket(q: FloatArray) -> FloatArray:
        return jacobian_fd(y_field, q, h) @ x_field(q) - jacobian_fd(x_field, q, h) @ y_field(q)

    return bracket


def bracket_oracle(p: PhasePoint) -> tuple[FieldVector, FieldVector, FieldVector]:
    """[V₁,V′₀], [V₂,V′₀] and [V₂,[V₂,V′₀]] by finite differences of the fields."""
    q = _state(p)
    b10 = lie_bracket_fd(_v1, _v0_prime)
    b20 = lie_bracket_fd(_v2, _v0_prime)
    b220 = lie_bracket_fd(_v2, b20)
    return (
        FieldVector.from_array(b10(q)),
        FieldVector.from_array(b20(q)),
        FieldVector.from_array(b220(q)),
    )


def span_rank(vectors: Sequence[FieldVector], tol: float = RANK_TOLERANCE) -> int:
    """Number of singular values above ``tol`` times the largest."""
    if not vectors:
        return 0
    singular = np.linalg.svd(np.stack([v.as_array() for v in vectors]), compute_uv=False)
    if singular[0] == 0:
        return 0
    return int(np.sum(singular > tol * singular[0]))


def hormander_rank(p: PhasePoint) -> int:
    """Rank of the six fields of :func:`bracket_basis` at p."""
    return span_rank(bracket_basis(p))


# Monte Carlo


def _blocks(paths: int, block: int = BLOCK_SIZE) -> list[tuple[int, int]]:
    return [(start, min(block, paths - start)) for start in range(0, paths, block)]


def serial_map(fn: Callable[..., Any], rows: Iterable[tuple[Any, ...]]) -> list[Any]:
    """In-process stand-in for a worker pool's ordered starmap."""
    return [fn(*args) for args in rows]


def _normals(
    stream: RandomStream, start: int, count: int, steps: int, width: int
) -> FloatArray:
    draws = np.empty((count, steps, width))
    for i in range(count):
        draws[i] = stream.for_path(start + i).standard_normal((steps, width))
    return draws


def _check_guard(lam: FloatArray, guard: float, step: int) -> None:
    if np.any(np.abs(lam) > guard):
        raise PathBlowUpError(f"|λ| exceeded {guard} at step {step}")


def simulate_dudley(
    cfg: PathConfig,
    stream: RandomStream,
    path: int = 0,
    *,
    noise: bool = True,
    blowup_guard: float = BLOWUP_GUARD,
) -> list[PhasePoint]:
    """Euler-Maruyama path of the Dudley diffusion from the rest frame at the origin.

    Brownian increments are exact Gaussians. Without noise the path is the
    geodesic (0, 0, s, 0, 0).

    Returns:
        The steps + 1 states on the time grid

    Raises:
        PathBlowUpError: If |λ| exceeds ``blowup_guard``
    """
    h = cfg.dt
    draws = (
        stream.for_path(path).standard_normal((cfg.steps, 2)) * math.sqrt(h)
        if noise
        else np.zeros((cfg.steps, 2))
    )
    lam = mu = x = y = z = 0.0
    states = [PhasePoint.origin()]
    for k in range(cfg.steps):
        ch = math.cosh(lam)
        x += ch * math.cosh(mu) * h
        y += ch * math.sinh(mu) * h
        z += math.sinh(lam) * h
        lam, mu = lam + draws[k, 0] + 0.5 * math.tanh(lam) * h, mu + draws[k, 1] / ch
        if abs(lam) > blowup_guard:
            raise PathBlowUpError(f"|λ| exceeded {blowup_guard} at step {k + 1}")
        states.append(PhasePoint(lam=lam, mu=mu, x=x, y=y, z=z))
    return states


def _dudley_arrays(
    h: float, dw: FloatArray, db: FloatArray, guard: float, survey: bool
) -> tuple[tuple[FloatArray, ...], FloatArray, FloatArray]:
    """Euler endpoints and, when probing, running sups of the two remainders."""
    count, steps = dw.shape
    lam, mu, x, y, z = (np.zeros(count) for _ in range(5))
    w, beta, a, zeta, zbar = (np.zeros(count) for _ in range(5))
    sup_r, sup_rp = np.zeros(count), np.zeros(count)
    for k in range(steps):
        ch = np.cosh(lam)
        x = x + ch * np.cosh(mu) * h
        y = y + ch * np.sinh(mu) * h
        z = z + np.sinh(lam) * h
        lam, mu = lam + dw[:, k] + 0.5 * np.tanh(lam) * h, mu + db[:, k] / ch
        _check_guard(lam, guard, k + 1)
        if survey:
            # Left-point sums, as for the position.
            a = a + 0.5 * (w * w + beta * beta) * h
            zeta = zeta + beta * h
            zbar = zbar + w * h
            w, beta = w + dw[:, k], beta + db[:, k]
            t = (k + 1) * h
            sup_r = np.maximum(sup_r, np.hypot(lam - w, mu - beta))
            rp = np.sqrt((x - t - a) ** 2 + (y - zeta) ** 2 + (z - zbar) ** 2)
            sup_rp = np.maximum(sup_rp, rp)
    return (lam, mu, x, y, z), sup_r, sup_rp


def simulate_dudley_block(
    cfg: PathConfig,
    stream: RandomStream,
    start: int,
    count: int,
    blowup_guard: float = BLOWUP_GUARD,
) -> DudleyEnsemble:
    """Endpoints of paths ``start`` to ``start + count − 1``, vectorized over paths."""
    h = cfg.dt
    draws = _normals(stream, start, count, cfg.steps, 2) * math.sqrt(h)
    (lam, mu, x, y, z), _, _ = _dudley_arrays(
        h, draws[..., 0], draws[..., 1], blowup_guard, False
    )
    return DudleyEnsemble(s=cfg.s_final, lam=lam, mu=mu, x=x, y=y, z=z)


def simulate_dudley_ensemble(
    cfg: PathConfig,
    paths: int,
    stream: RandomStream,
    blowup_guard: float = BLOWUP_GUARD,
    block_map: BlockMap = serial_map,
) -> DudleyEnsemble:
    """Endpoints of ``paths`` Dudley paths, joined in path order.

    ``block_map`` runs the path blocks, e.g. a worker pool's ordered starmap.
    """
    if paths < 1:
        raise InvalidParameterError(f"Path count must be positive, got {paths}")
    task = partial(simulate_dudley_block, cfg, stream, blowup_guard=blowup_guard)
    return DudleyEnsemble.concatenate(block_map(task, _blocks(paths)))


def simulate_tangent_block(
    cfg: PathConfig, stream: RandomStream, start: int, count: int
) -> TangentSample:
    """Tangent-process endpoints of paths ``start`` to ``start + count − 1``.

    The exact scheme draws, per step of length h, the increment Δw and the
    area J = ∫(w − w_k) = (h/2)Δw + √(h³/12)η, so ∫w and the endpoints have
    their exact law; ∫w² uses the trapezoid rule. The Euler scheme uses
    left-point sums throughout.
    """
    h = cfg.dt
    exact = cfg.scheme.is_exact_gaussian()
    draws = _normals(stream, start, count, cfg.steps, 4 if exact else 2)
    root_h = math.sqrt(h)
    area_scale = math.sqrt(h**3 / 12.0)
    out: dict[str, FloatArray] = {}
    for name, (inc, area) in {"w": (0, 2), "beta": (1, 3)}.items():
        increments = draws[:, :, inc] * root_h
        path = np.concatenate([np.zeros((count, 1)), np.cumsum(increments, axis=1)], axis=1)
        left = path[:, :-1]
        if exact:
            areas = 0.5 * h * increments + area_scale * draws[:, :, area]
            integral = (h * left + areas).sum(axis=1)
            energy = 0.5 * h * (left**2 + path[:, 1:] ** 2).sum(axis=1)
        else:
            integral = h * left.sum(axis=1)
            energy = h * (left**2).sum(axis=1)
        out[name], out[f"{name}_int"], out[f"{name}_energy"] = path[:, -1], integral, energy
    return TangentSample(
        s=cfg.s_final,
        w=out["w"],
        beta=out["beta"],
        zeta=out["beta_int"],
        z=out["w_int"],
        w_energy=out["w_energy"],
        beta_energy=out["beta_energy"],
    )


def simulate_tangent(
    cfg: PathConfig, paths: int, stream: RandomStream, block_map: BlockMap = serial_map
) -> TangentSample:
    """Endpoints of ``paths`` tangent-process paths, joined in path order."""
    if paths < 1:
        raise InvalidParameterError(f"Path count must be positive, got {paths}")
    task = partial(simulate_tangent_block, cfg, stream)
    sample = TangentSample.concatenate(block_map(task, _blocks(paths)))
    logger.debug("Simulated %d tangent paths, scheme %s", paths, cfg.scheme.value)
    return sample


def laplace_estimate(sample: TangentSample, b: float) -> Estimate:
    """Monte Carlo E[e^{−b²A_s}]; the exact value is 1/ch(bs)."""
    return Estimate.of(np.exp(-b * b * sample.a))


def _median_error(values: FloatArray) -> float:
    # Half-width of the order-statistic band one binomial standard error around the median.
    band = 0.5 / math.sqrt(values.size)
    lo, hi = np.quantile(values, [0.5 - band, 0.5 + band])
    return float(hi - lo) / 2.0


def remainder_survey(
    s_values: Sequence[float],
    r_values: Sequence[float],
    paths: int,
    stream: RandomStream,
    steps: int = SURVEY_STEPS,
) -> RemainderSurvey:
    """Size of the gap between the diffusion and its tangent process.

    For each horizon s the paths give sup‖R_t‖ with R = (λ, μ) − (w, β) and
    sup‖R′_t‖ with R′ = (x, y, z) − (t + A_t, ζ_t, z̄_t). Reported are the
    tail frequencies P[sup‖R‖ >= R s^{3/2}] and P[sup‖R′‖ >= R s^{5/2}],
    and log-log slopes of the medians against s.

    Raises:
        InsufficientPathsError: If fewer than 1000 paths are requested
        InvalidParameterError: If some s is outside (0, 1] or fewer than two are given
    """
    if paths < MIN_SURVEY_PATHS:
        raise InsufficientPathsError(
            f"Remainder tails need at least {MIN_SURVEY_PATHS} paths, got {paths}"
        )
    if len(s_values) < 2 or any(not 0 < s <= 1 for s in s_values):
        raise InvalidParameterError(f"Need at least two horizons in (0, 1], got {s_values}")
    thresholds = np.asarray(sorted(r_values), dtype=np.float64)
    rows = []
    for index, s in enumerate(s_values):
        cfg = PathConfig(s_final=s, steps=steps, seed=stream.seed)
        sup_r_parts, sup_rp_parts = [], []
        for start, count in _blocks(paths):
            draws = _normals(stream, index * paths + start, count, steps, 2) * math.sqrt(cfg.dt)
            _, block_r, block_rp = _dudley_arrays(
                cfg.dt, draws[..., 0], draws[..., 1], BLOWUP_GUARD, True
            )
            sup_r_parts.append(block_r)
            sup_rp_parts.append(block_rp)
        sup_r, sup_rp = np.concatenate(sup_r_parts), np.concatenate(sup_rp_parts)
        rows.append(
            RemainderRow(
                s=s,
                median_r=float(np.median(sup_r)),
                median_r_prime=float(np.median(sup_rp)),
                tail_r=tuple(float(np.mean(sup_r >= r * s**1.5)) for r in thresholds),
                tail_r_prime=tuple(float(np.mean(sup_rp >= r * s**2.5)) for r in thresholds),
                median_r_error=_median_error(sup_r),
                median_r_prime_error=_median_error(sup_rp),
                paths=paths,
            )
        )
        logger.info(
            "Remainder survey s=%s: median R %.3e, median R' %.3e",
            s,
            rows[-1].median_r,
            rows[-1].median_r_prime,
        )
    log_s = np.log([row.s for row in rows])
    fit_r = stats.linregress(log_s, np.log([row.median_r for row in rows]))
    fit_rp = stats.linregress(log_s, np.log([row.median_r_prime for row in rows]))
    return RemainderSurvey(
        r_values=tuple(float(r) for r in thresholds),
        rows=tuple(rows),
        exponent_r=float(fit_r.slope),
        exponent_r_prime=float(fit_rp.slope),
        exponent_r_stderr=float(fit_r.stderr),
        exponent_r_prime_stderr=float(fit_rp.stderr),
    )


def simulate_hitting_times(
    samples: int, stream: RandomStream, dt: float = HITTING_DT, first_path: int = 0
) -> FloatArray:
    """First exit times of (−1, 1) by a Brownian motion started at 0.

    Between grid points a crossing is detected with the Brownian-bridge
    probability exp(−2(1 − b_k)(1 − b_{k+1})/dt) (and its mirror at −1). Exits
    are dated at the middle of the step in which they happen.
    """
    if samples < 1 or not dt > 0:
        raise InvalidParameterError(f"Need samples >= 1 and dt > 0, got {samples}, {dt}")
    times = np.empty(samples)
    for start, count in _blocks(samples, 4 * BLOCK_SIZE):
        generators = [stream.for_path(first_path + start + i) for i in range(count)]
        position = np.zeros(count)
        elapsed = np.zeros(count)
        active = np.arange(count)
        while active.size:
            chunk = [generators[i] for i in active]
            normal = np.stack([g.standard_normal(HITTING_CHUNK) for g in chunk]) * math.sqrt(dt)
            uniform = np.stack([g.random(HITTING_CHUNK) for g in chunk])
            b = position[active]
            t = elapsed[active]
            done = np.full(active.size, np.nan)
            for k in range(HITTING_CHUNK):
                nxt = b + normal[:, k]
                crossed = np.abs(nxt) >= 1.0
                up = (1.0 - b) * np.maximum(1.0 - nxt, 0.0)
                down = (1.0 + b) * np.maximum(1.0 + nxt, 0.0)
                p_cross = np.exp(-2.0 * up / dt) + np.exp(-2.0 * down / dt)
                bridged = ~crossed & (uniform[:, k] < p_cross)
                fresh = np.isnan(done)
                done = np.where(fresh & (crossed | bridged), t + 0.5 * dt, done)
                b = np.where(np.isnan(done), nxt, b)
                t = np.where(np.isnan(done), t + dt, t)
            finished = ~np.isnan(done)
            times[start + active[finished]] = done[finished]
            position[active], elapsed[active] = b, t
            active = active[~finished]
    return times


def simulate_max_inverse_square(
    samples: int, stream: RandomStream, steps: int = 1024, first_path: int = 0
) -> FloatArray:
    """Samples of (max_{τ<=1} |β_τ|)⁻² with the grid maximum refined by bridge extremes.

    The maximum and minimum of each Brownian-bridge segment are drawn from
    their exact marginal laws, (a + b ± √((b − a)² − 2h log U))/2.
    """
    if samples < 1 or steps < 1:
        raise InvalidParameterError(f"Need samples >= 1 and steps >= 1, got {samples}, {steps}")
    h = 1.0 / steps
    out = np.empty(samples)
    for start, count in _blocks(samples, 4 * BLOCK_SIZE):
        normal = np.empty((count, steps))
        uniform = np.empty((count, 2, steps))
        for i in range(count):
            g = stream.for_path(first_path + start + i)
            normal[i] = g.standard_normal(steps)
            uniform[i] = g.random((2, steps))
        path = np.concatenate(
            [np.zeros((count, 1)), np.cumsum(normal * math.sqrt(h), axis=1)], axis=1
        )
        a, b = path[:, :-1], path[:, 1:]
        spread = (b - a) ** 2
        top = 0.5 * (a + b + np.sqrt(spread - 2.0 * h * np.log1p(-uniform[:, 0])))
        bottom = 0.5 * (a + b - np.sqrt(spread - 2.0 * h * np.log1p(-uniform[:, 1])))
        extreme = np.maximum(top.max(axis=1), -bottom.min(axis=1))
        out[start : start + count] = extreme**-2
    return out


def ks_two_sample(name: str, first: FloatArray, second: FloatArray) -> CheckOutcome:
    """Two-sample Kolmogorov-Smirnov test; passes when the p-value exceeds 0.01."""
    if min(first.size, second.size) < MIN_KS_SAMPLES:
        raise InsufficientPathsError(f"KS test needs at least {MIN_KS_SAMPLES} samples per side")
    result = stats.ks_2samp(first, second)
    return CheckOutcome(
        name=name,
        measured=float(result.pvalue),
        threshold=KS_LEVEL,
        detail=f"D={float(result.statistic):.4g} n={first.size},{second.size}",
        lower_bound=True,
    )


def ks_against_alpha(name: str, chaos: FloatArray) -> CheckOutcome:
    """One-sample Kolmogorov-Smirnov test of A₁ samples against the exact distribution."""
    if chaos.size < MIN_KS_SAMPLES:
        raise InsufficientPathsError(f"KS test needs at least {MIN_KS_SAMPLES} samples")
    result = stats.kstest(chaos, alpha1_cdf_grid)
    return CheckOutcome(
        name=name,
        measured=float(result.pvalue),
        threshold=KS_LEVEL,
        detail=f"D={float(result.statistic):.4g} n={chaos.size}",
        lower_bound=True,
    )


def characteristic_function_check(
    sample: TangentSample,
    frequencies: Sequence[tuple[float, float]],
    b: float = 0.0,
) -> list[CheckOutcome]:
    """Empirical E[e^{i(r w_s + c z̄_s)} e^{−(b²/2)∫w²}] against its closed form.

    Each outcome reports the larger of the real and imaginary discrepancies in
    standard errors, to be at most 3.
    """
    if sample.size < 2:
        raise InsufficientPathsError("Characteristic function check needs at least two paths")
    weight = np.exp(-0.5 * b * b * sample.w_energy)
    outcomes = []
    for r, c in frequencies:
        phase = r * sample.w + c * sample.z
        real = Estimate.of(np.cos(phase) * weight)
        imag = Estimate.of(np.sin(phase) * weight)
        expected = flt_Z(FLQueryZ(s=sample.s, r=r, c=c, b=b))
        score = max(real.z_score(expected.real), imag.z_score(expected.imag))
        outcomes.append(
            CheckOutcome(
                name=f"cf r={r:g} c={c:g} b={b:g}",
                measured=score,
                threshold=Z_SCORE_LIMIT,
                detail=(
                    f"empirical={real.mean:.5f}{imag.mean:+.5f}i "
                    f"closed={expected.real:.5f}{expected.imag:+.5f}i"
                ),
            )
        )
    return outcomes


def expected_position(s: float) -> float:
    """E[x_s] = e^s − 1, since ch λ ch μ is an eigenfunction of the generator with eigenvalue 1."""
    return math.expm1(s)
