"""Validation suites: identities, dual-method oracles and Monte Carlo cross-checks."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Final

import numpy as np
from scipy import stats

from chaos_kernel.application.ports.random_stream import RandomStream
from chaos_kernel.application.services import alpha, density, model, special, transforms
from chaos_kernel.domain.entities.chaos_point import ChaosPoint
from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.entities.path_config import PathConfig
from chaos_kernel.domain.entities.phase_point import PhasePoint
from chaos_kernel.domain.exceptions import ChaosKernelError, InvalidParameterError
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome
from chaos_kernel.domain.value_objects.ensembles import Estimate
from chaos_kernel.domain.value_objects.scheme import Scheme

logger = logging.getLogger(__name__)

LAPLACE_RATES: Final = (0.5, 1.0, 2.0)
INVERSION_POINT: Final = MarginalPoint(w=0.1, beta=0.2, zeta=0.3, z=0.4)
SCALING_TIMES: Final = (0.25, 0.5)
TREND_TIMES: Final = (0.4, 0.3, 0.2, 0.15, 0.1)
SURVEY_TIMES: Final = (0.2, 0.1, 0.05, 0.025)
CELL_CENTER: Final = ChaosPoint(w=0.0, beta=0.0, x=0.5, zeta=0.0, z=0.0)
CELL_COUNT: Final = 10
CHF_FREQUENCIES: Final = tuple(itertools.product((-1.0, 0.0, 1.0), (-1.0, 0.0, 1.0)))


@dataclass(frozen=True)
class SuiteOptions:
    """Sizes and plumbing shared by the suites."""

    stream: RandomStream
    quick: bool = False
    block_map: model.BlockMap = model.serial_map

    def size(self, full: int, quick: int) -> int:
        """Full or reduced problem size."""
        return quick if self.quick else full


@dataclass(frozen=True)
class Suite:
    """One named validation suite."""

    key: str
    title: str
    run: Callable[[SuiteOptions], CheckOutcome]


def _normalized(name: str, errors: Sequence[tuple[str, float, float]]) -> CheckOutcome:
    # Worst error in units of its own tolerance.
    worst = max(err / tol for _, err, tol in errors)
    detail = " ".join(f"{label}:{err:.2e}/{tol:.0e}" for label, err, tol in errors)
    return CheckOutcome(name=name, measured=worst, threshold=1.0, detail=detail)


def laplace_identity(_options: SuiteOptions) -> CheckOutcome:
    """∫e^{−b²x}α₁ = 1/ch b for b ∈ {0.5, 1, 2}, and the transform at λ = 1 equals 1/cos 1."""
    errors = [
        (f"b={b:g}", abs(alpha.alpha_laplace(-b * b).real - 1.0 / math.cosh(b)), 1e-7)
        for b in LAPLACE_RATES
    ]
    errors.append(("λ=1", abs(alpha.alpha_laplace(1.0).real - 1.0 / math.cos(1.0)), 1e-6))
    return _normalized("laplace identity", errors)


def dual_alpha(options: SuiteOptions) -> CheckOutcome:
    """Series and integral agree on [0.2, 5] and the tail sandwich holds from 1/π²."""
    xs = np.linspace(0.2, 5.0, options.size(50, 10))
    worst = 0.0
    for x in xs:
        series = alpha.alpha1_series(float(x)).value
        integral = alpha.alpha1_integral(float(x)).value
        worst = max(worst, abs(series - integral) / series)
    violations = 0
    for x in np.geomspace(alpha.SANDWICH_START, 10.0, options.size(200, 40)):
        lower, upper = alpha.sandwich_bounds(float(x))
        value = alpha.alpha1(float(x)).value
        violations += not lower <= value <= upper
    return CheckOutcome(
        name="dual-method alpha",
        measured=worst if violations == 0 else math.inf,
        threshold=1e-8,
        detail=f"points={xs.size} sandwich_violations={violations}",
    )


def marginal_normalization(options: SuiteOptions) -> CheckOutcome:
    """∬ laplace_Z1(w, z, 1) dw dz = (ch 1)^{−1/2} by a Gauss-Legendre product rule."""
    nodes, weights = np.polynomial.legendre.leggauss(options.size(256, 160))
    w_half, z_half = 16.0, 8.0
    w, z = np.meshgrid(w_half * nodes, z_half * nodes, indexing="ij")
    values = transforms.laplace_z1_grid(w, z, 1.0)
    total = float(weights @ values @ weights) * w_half * z_half
    expected = transforms.laplace_z1_mass(1.0)
    return CheckOutcome(
        name="marginal normalization",
        measured=abs(total - expected),
        threshold=1e-8,
        detail=f"integral={total:.12g} expected={expected:.12g}",
    )


def inversion_consistency(options: SuiteOptions) -> CheckOutcome:
    """Outer x-quadrature of q_1 reproduces Ψ(b) at b ∈ {0.5, 1}."""
    rates = (1.0,) if options.quick else (0.5, 1.0)
    checks = [density.laplace_check(INVERSION_POINT, b, 1e-5) for b in rates]
    return CheckOutcome(
        name="inversion consistency",
        measured=max(c.measured for c in checks),
        threshold=1e-5,
        detail=" ".join(f"{c.name}:{c.measured:.2e}" for c in checks),
    )


def _random_unit_points(stream: RandomStream, count: int) -> list[ChaosPoint]:
    rng = stream.for_path(0)
    return [
        ChaosPoint(
            w=rng.uniform(-1.0, 1.0),
            beta=rng.uniform(-1.0, 1.0),
            x=rng.uniform(0.2, 1.0),
            zeta=rng.uniform(-0.3, 0.3),
            z=rng.uniform(-0.3, 0.3),
        )
        for _ in range(count)
    ]


def scaling_law(options: SuiteOptions) -> CheckOutcome:
    """q_s(p) = s⁻⁶ q_1(p at unit time), computed both ways."""
    worst = 0.0
    for unit in _random_unit_points(options.stream, options.size(10, 3)):
        reference = density.q_exact(unit, 1.0, 1e-11).real
        for s in SCALING_TIMES:
            root = math.sqrt(s)
            point = ChaosPoint(
                w=unit.w * root,
                beta=unit.beta * root,
                x=unit.x * s * s,
                zeta=unit.zeta * s * root,
                z=unit.z * s * root,
            )
            direct = density.q_exact(point, s, 1e-11).real
            worst = max(worst, abs(direct * s**6 - reference) / abs(reference))
    return CheckOutcome(name="scaling law", measured=worst, threshold=1e-6)


def _cell_probability(
    lower: Sequence[float], upper: Sequence[float], nodes: int, tol: float
) -> float:
    x, wts = np.polynomial.legendre.leggauss(nodes)
    half = [(b - a) / 2.0 for a, b in zip(lower, upper, strict=True)]
    mid = [(b + a) / 2.0 for a, b in zip(lower, upper, strict=True)]
    total = 0.0
    for index in itertools.product(range(nodes), repeat=5):
        coords = [m + h * x[i] for m, h, i in zip(mid, half, index, strict=True)]
        weight = math.prod(float(wts[i]) for i in index)
        total += weight * density.q_exact(ChaosPoint.from_sequence(coords), 1.0, tol).real
    return total * math.prod(half)


def histogram_cells(options: SuiteOptions) -> CheckOutcome:
    """Monte Carlo cell frequencies of Y_1 against ∫_cell q_exact, ten x-slices."""
    paths = options.size(1_000_000, 100_000)
    cfg = PathConfig(
        s_final=1.0, steps=options.size(4096, 1024), seed=options.stream.seed, scheme=Scheme.EXACT
    )
    sample = model.simulate_tangent(cfg, paths, options.stream, options.block_map)
    columns = sample.columns()
    c = CELL_CENTER
    inside = (
        (np.abs(columns["w"] - c.w) <= 0.5)
        & (np.abs(columns["beta"] - c.beta) <= 0.5)
        & (np.abs(columns["zeta"] - c.zeta) <= 0.25)
        & (np.abs(columns["z"] - c.z) <= 0.25)
    )
    edges = np.linspace(c.x - 0.25, c.x + 0.25, CELL_COUNT + 1)
    nodes = options.size(3, 2)
    scores = []
    for lo, hi in itertools.pairwise(edges):
        frequency = float(np.mean(inside & (columns["x"] >= lo) & (columns["x"] < hi)))
        error = math.sqrt(max(frequency * (1.0 - frequency), 1.0 / paths) / paths)
        expected = _cell_probability(
            (c.w - 0.5, c.beta - 0.5, float(lo), c.zeta - 0.25, c.z - 0.25),
            (c.w + 0.5, c.beta + 0.5, float(hi), c.zeta + 0.25, c.z + 0.25),
            nodes,
            1e-7,
        )
        scores.append(abs(frequency - expected) / error)
        logger.info("Cell x∈[%.3f, %.3f): MC %.5f, exact %.5f", lo, hi, frequency, expected)
    failing = sum(score > model.Z_SCORE_LIMIT for score in scores)
    return CheckOutcome(
        name="monte carlo cells",
        measured=float(failing),
        threshold=1.0,
        detail=f"cells={len(scores)} max_z={max(scores):.2f} paths={paths}",
    )


def trend_point(s: float) -> ChaosPoint:
    """Point with ζ = z = 0, w = β = 4 and x = 0.01s², so μ_s = 32/(15s) − 0.01.

    Every x > 0 is reachable when ζ = z = 0.
    """
    return ChaosPoint(w=4.0, beta=4.0, x=0.01 * s * s, zeta=0.0, z=0.0)


def convergence_trend(options: SuiteOptions) -> CheckOutcome:
    """|q_exact/q_asymptotic − 1| shrinks as s decreases, with log-log slope <= −0.5 in μ_s."""
    times = TREND_TIMES[:3] if options.quick else TREND_TIMES
    mus, gaps = [], []
    for s in times:
        point = trend_point(s)
        floor = density.chaos_floor(point.marginal, s)
        if point.x <= floor:
            raise InvalidParameterError(
                f"Trend point x={point.x} at s={s} is outside the support x > {floor}"
            )
        mu = density.scale_params(point, s).mu
        tol = 1e-4 / (20.0 * mu**3)
        gaps.append(abs(density.asymptotic_ratio(point, s, tol) - 1.0))
        mus.append(mu)
        logger.info("Trend s=%s: μ=%.3f relative gap %.3e", s, mu, gaps[-1])
    monotone = all(b < a for a, b in itertools.pairwise(gaps))
    slope = float(stats.linregress(np.log(mus), np.log(gaps)).slope)
    return CheckOutcome(
        name="small-time trend",
        measured=slope if monotone else math.inf,
        threshold=-0.5,
        detail=" ".join(f"s={s:g}:{g:.2e}" for s, g in zip(times, gaps, strict=True)),
    )


def hormander(options: SuiteOptions) -> CheckOutcome:
    """Full rank at random phase points and closed-form brackets against finite differences."""
    rng = options.stream.for_path(1)
    points = [
        PhasePoint(*(float(v) for v in rng.uniform(-3.0, 3.0, 5)))
        for _ in range(options.size(1000, 100))
    ]
    deficient = sum(model.hormander_rank(p) != 6 for p in points)
    worst = 0.0
    for p in points[: options.size(20, 5)]:
        closed = model.bracket_basis(p)[3:]
        for exact, oracle in zip(closed, model.bracket_oracle(p), strict=True):
            gap = np.abs(exact.as_array() - oracle.as_array())
            worst = max(worst, float(np.max(gap / np.maximum(1.0, np.abs(exact.as_array())))))
    return CheckOutcome(
        name="hormander rank",
        measured=worst if deficient == 0 else math.inf,
        threshold=1e-6,
        detail=f"points={len(points)} rank_deficient={deficient}",
    )


def remainder_scaling(options: SuiteOptions) -> CheckOutcome:
    """Median remainder exponents 1.5 ± 0.15 and 2.5 ± 0.2."""
    survey = model.remainder_survey(
        SURVEY_TIMES, (1.0,), options.size(10_000, 1_000), options.stream
    )
    return _normalized(
        "remainder scaling",
        [
            ("R", abs(survey.exponent_r - 1.5), 0.15),
            ("R'", abs(survey.exponent_r_prime - 2.5), 0.2),
        ],
    )


def root_sequences(_options: SuiteOptions) -> CheckOutcome:
    """Roots of tg y = y in their intervals with shrinking gaps, and zeros of sh²z + cos²z."""
    roots = special.tan_fixed_points(16)
    residual = max(special.tan_residual(y) for y in roots)
    misplaced = sum(
        not (k + 1) * math.pi < y < (k + 1.5) * math.pi for k, y in enumerate(roots)
    )
    gaps = [(k + 1.5) * math.pi - y for k, y in enumerate(roots)]
    widening = sum(b >= a for a, b in itertools.pairwise(gaps))
    zeros = max(special.sh2cos2_residual(z, relative=True) for z in special.sh2cos2_zeros(16))
    bad = misplaced + widening
    return CheckOutcome(
        name="root sequences",
        measured=max(residual, zeros) if bad == 0 else math.inf,
        threshold=1e-12,
        detail=f"tan_residual={residual:.1e} zero_residual={zeros:.1e} misplaced={bad}",
    )


def distributional_identity(options: SuiteOptions) -> CheckOutcome:
    """2A₁, the exit time of (−1, 1) and (max|β|)⁻² share one law."""
    samples = options.size(100_000, 10_000)
    cfg = PathConfig(
        s_final=1.0, steps=options.size(4096, 1024), seed=options.stream.seed, scheme=Scheme.EXACT
    )
    chaos = 2.0 * model.simulate_tangent(cfg, samples, options.stream, options.block_map).a
    hitting = model.simulate_hitting_times(samples, options.stream, first_path=samples)
    maxima = model.simulate_max_inverse_square(samples, options.stream, first_path=2 * samples)
    checks = [
        model.ks_two_sample("2A vs exit time", chaos, hitting),
        model.ks_two_sample("2A vs max", chaos, maxima),
        model.ks_against_alpha("A vs exact law", 0.5 * chaos),
    ]
    return CheckOutcome(
        name="distributional identity",
        measured=min(c.measured for c in checks),
        threshold=model.KS_LEVEL,
        detail=" ".join(f"{c.name}: p={c.measured:.3f}" for c in checks),
        lower_bound=True,
    )


def monte_carlo_transforms(options: SuiteOptions) -> CheckOutcome:
    """Characteristic function on a 3×3 grid, E[e^{−A_1}], E[A_1], E[x_0.1] and weak error."""
    paths = options.size(100_000, 20_000)
    steps = options.size(1024, 256)
    cfg = PathConfig(s_final=1.0, steps=steps, seed=options.stream.seed)
    sample = model.simulate_tangent(cfg, paths, options.stream, options.block_map)
    scores = [c.measured for c in model.characteristic_function_check(sample, CHF_FREQUENCIES)]
    laplace = model.laplace_estimate(sample, 1.0)
    scores.append(laplace.z_score(1.0 / math.cosh(1.0)))
    scores.append(Estimate.of(sample.a).z_score(0.5))
    doubled = model.simulate_tangent(
        PathConfig(s_final=1.0, steps=2 * steps, seed=options.stream.seed),
        paths,
        options.stream,
        options.block_map,
    )
    weak = abs(model.laplace_estimate(doubled, 1.0).mean - laplace.mean) / laplace.std_error
    dudley = model.simulate_dudley_ensemble(
        PathConfig(s_final=0.1, steps=steps, seed=options.stream.seed),
        paths,
        options.stream,
        block_map=options.block_map,
    )
    scores.append(Estimate.of(dudley.x).z_score(model.expected_position(0.1)))
    return CheckOutcome(
        name="monte carlo transforms",
        measured=max(max(scores) / model.Z_SCORE_LIMIT, weak / 2.0),
        threshold=1.0,
        detail=f"max_z={max(scores):.2f} weak_step_change={weak:.2f}se",
    )


# Keys 1 to 11 are the acceptance criteria, S-keys supplementary checks.
SUITES: Final = (
    Suite("1", "laplace identity", laplace_identity),
    Suite("2", "dual-method alpha", dual_alpha),
    Suite("3", "marginal normalization", marginal_normalization),
    Suite("4", "inversion consistency", inversion_consistency),
    Suite("5", "scaling law", scaling_law),
    Suite("6", "monte carlo cells", histogram_cells),
    Suite("7", "small-time trend", convergence_trend),
    Suite("8", "hormander rank", hormander),
    Suite("9", "remainder scaling", remainder_scaling),
    Suite("10", "root sequences", root_sequences),
    Suite("11", "distributional identity", distributional_identity),
    Suite("S1", "monte carlo transforms", monte_carlo_transforms),
)


def run_suite(suite: Suite, options: SuiteOptions) -> CheckOutcome:
    """Run one suite; a library failure becomes a failed outcome naming the error."""
    logger.info("Running suite %s (%s)", suite.key, suite.title)
    try:
        outcome = suite.run(options)
    except ChaosKernelError as e:
        logger.error("Suite %s failed: %s", suite.key, e)
        return CheckOutcome(
            name=f"{suite.key} {suite.title}",
            measured=math.inf,
            threshold=0.0,
            detail=f"{type(e).__name__}: {e}",
        )
    outcome = CheckOutcome(
        name=f"{suite.key} {suite.title}",
        measured=outcome.measured,
        threshold=outcome.threshold,
        detail=outcome.detail,
        lower_bound=outcome.lower_bound,
    )
    logger.info("Suite %s: %s", suite.key, outcome.verdict)
    return outcome


def select_suites(keys: Sequence[str] | None = None) -> list[Suite]:
    """Suites by key, all of them when ``keys`` is empty."""
    if not keys:
        return list(SUITES)
    known = {suite.key: suite for suite in SUITES}
    unknown = [key for key in keys if key not in known]
    if unknown:
        raise InvalidParameterError(f"Unknown suites {unknown}; known: {list(known)}")
    return [known[key] for key in keys]
