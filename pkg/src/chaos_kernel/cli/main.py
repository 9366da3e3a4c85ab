"""Command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Iterable, Sequence
from pathlib import Path
from typing import TextIO

from pydantic import ValidationError

from chaos_kernel import __version__
from chaos_kernel.adapters.random.philox_stream import PhiloxStream
from chaos_kernel.adapters.reporting.factory import writer_for
from chaos_kernel.application.ports.report_writer import ReportWriter
from chaos_kernel.application.services import acceptance, model
from chaos_kernel.application.use_cases import (
    CurveKind,
    EvaluateAlpha,
    EvaluateAlphaRequest,
    EvaluateDensity,
    EvaluateDensityRequest,
    EvaluateTransform,
    EvaluateTransformRequest,
    ExportCurves,
    ExportCurvesRequest,
    FindRoots,
    FindRootsRequest,
    RunSimulation,
    RunSimulationRequest,
    RunValidation,
    RunValidationRequest,
    SimulationKind,
    TransformKind,
)
from chaos_kernel.config import Settings, load_settings
from chaos_kernel.domain.entities.chaos_point import ChaosPoint
from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.exceptions import ChaosKernelError, InvalidParameterError
from chaos_kernel.domain.value_objects.output_format import OutputFormat
from chaos_kernel.domain.value_objects.report_record import ReportRecord
from chaos_kernel.domain.value_objects.scheme import Scheme
from chaos_kernel.workers.pool import WorkerPool

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

SCHEMES = {"euler": Scheme.EULER, "exact": Scheme.EXACT}

type Runner = Callable[[argparse.Namespace, Settings, WorkerPool], Iterable[ReportRecord]]


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from e


def _chaos_point(text: str) -> ChaosPoint:
    values = _floats(text)
    if len(values) != 5:
        raise argparse.ArgumentTypeError(f"expected w,beta,x,zeta,z, got {text!r}")
    try:
        return ChaosPoint.from_sequence(values)
    except InvalidParameterError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _marginal_point(text: str) -> MarginalPoint:
    values = _floats(text)
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"expected w,beta,zeta,z, got {text!r}")
    try:
        return MarginalPoint.from_sequence(values)
    except InvalidParameterError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a complex number, got {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation family."""
    parser = argparse.ArgumentParser(
        prog="chaos-kernel",
        description="Density of the second-chaos tangent process of the Dudley diffusion.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat], default=None
    )
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--config", type=Path, default=None, help="JSON settings file")
    parser.add_argument("--density-tol", type=float, default=None)
    parser.add_argument("--alpha-tol", type=float, default=None)
    parser.add_argument("--transform-tol", type=float, default=None)
    parser.add_argument("--max-panels", type=int, default=None)
    parser.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None
    )
    commands = parser.add_subparsers(dest="command", required=True)

    density = commands.add_parser("density", help="q_exact / q_asymptotic at a point or x-sweep")
    density.add_argument("--point", type=_chaos_point, required=True, help="w,beta,x,zeta,z")
    density.add_argument("--s", type=float, default=1.0)
    density.add_argument("--exact", action="store_true")
    density.add_argument("--asymptotic", action="store_true")
    density.add_argument("--xs", type=_floats, default=(), help="sweep of the chaos coordinate")

    alpha = commands.add_parser("alpha", help="density, distribution and transform of A_s")
    alpha.add_argument("--x", type=_floats, default=(), help="comma-separated chaos values")
    alpha.add_argument("--s", type=float, default=1.0)
    alpha.add_argument(
        "--method", choices=["auto", "both", "series", "integral", "reflection"], default="auto"
    )
    alpha.add_argument("--cdf", action="store_true")
    alpha.add_argument("--laplace", type=_floats, default=(), help="exponents λ < π²/4")

    transform = commands.add_parser("transform", help="closed-form transforms")
    transform.add_argument("kind", choices=[k.value for k in TransformKind])
    for name in ("s", "r", "c", "rho", "gamma", "b", "w", "z"):
        transform.add_argument(f"--{name}", type=float, default=1.0 if name == "s" else 0.0)
    transform.add_argument("--lam", type=_complex, default=0j)
    transform.add_argument("--point", type=_marginal_point, default=None, help="w,beta,zeta,z")

    roots = commands.add_parser("roots", help="root sequences of tg y = y and sh²z + cos²z")
    roots.add_argument("--tan-fixed-points", type=int, default=0)
    roots.add_argument("--sh2cos2-zeros", type=int, default=0)

    simulate = commands.add_parser("simulate", help="Monte Carlo ensembles")
    simulate.add_argument("kind", choices=[k.value for k in SimulationKind])
    simulate.add_argument("--s", type=float, default=1.0)
    simulate.add_argument("--paths", type=int, default=10_000)
    simulate.add_argument("--steps", type=int, default=None)
    simulate.add_argument("--scheme", choices=list(SCHEMES), default="exact")
    simulate.add_argument("--laplace-rates", type=_floats, default=(1.0,))
    simulate.add_argument("--s-values", type=_floats, default=(0.2, 0.1, 0.05, 0.025))
    simulate.add_argument("--r-values", type=_floats, default=(0.5, 1.0, 2.0))
    simulate.add_argument("--dt", type=float, default=model.HITTING_DT)

    validate = commands.add_parser("validate", help="acceptance suites with PASS/FAIL")
    validate.add_argument("--quick", action="store_true", help="reduced sample sizes")
    validate.add_argument(
        "--suite",
        action="append",
        default=[],
        choices=[suite.key for suite in acceptance.SUITES],
        help="repeatable; all suites by default",
    )

    export = commands.add_parser("export", help="curve samples for external plotting")
    export.add_argument("curve", choices=[c.value for c in CurveKind])
    export.add_argument("--start", type=float, required=True)
    export.add_argument("--stop", type=float, required=True)
    export.add_argument("--points", type=int, default=100)
    export.add_argument("--point", type=_chaos_point, default=None, help="w,beta,x,zeta,z")
    export.add_argument("--s", type=float, default=1.0)
    return parser


def _density(
    args: argparse.Namespace, settings: Settings, _pool: WorkerPool
) -> Iterable[ReportRecord]:
    request = EvaluateDensityRequest(
        point=args.point,
        s=args.s,
        xs=args.xs,
        exact=args.exact or not args.asymptotic,
        asymptotic=args.asymptotic,
        tol=settings.density_tol,
        epsilon=settings.epsilon,
        mu_threshold=settings.mu_threshold,
        max_panels=settings.max_panels,
        attempts=settings.quad_attempts,
        oscillation_budget=settings.oscillation_budget,
    )
    return EvaluateDensity().execute(request).records


def _alpha(
    args: argparse.Namespace, settings: Settings, _pool: WorkerPool
) -> Iterable[ReportRecord]:
    request = EvaluateAlphaRequest(
        xs=args.x,
        s=args.s,
        method=args.method,
        cdf=args.cdf,
        laplace=args.laplace,
        threshold=settings.series_threshold,
        tol=settings.alpha_tol,
        laplace_tol=settings.transform_tol,
    )
    return EvaluateAlpha().execute(request).records


def _transform(
    args: argparse.Namespace, _settings: Settings, _pool: WorkerPool
) -> Iterable[ReportRecord]:
    request = EvaluateTransformRequest(
        kind=TransformKind(args.kind),
        s=args.s,
        r=args.r,
        c=args.c,
        rho=args.rho,
        gamma=args.gamma,
        b=args.b,
        lam=args.lam,
        w=args.w,
        z=args.z,
        point=args.point,
    )
    return [EvaluateTransform().execute(request).record]


def _roots(
    args: argparse.Namespace, _settings: Settings, _pool: WorkerPool
) -> Iterable[ReportRecord]:
    request = FindRootsRequest(
        tan_fixed_points=args.tan_fixed_points, sh2cos2_zeros=args.sh2cos2_zeros
    )
    return FindRoots().execute(request).records


def _simulate(
    args: argparse.Namespace, settings: Settings, pool: WorkerPool
) -> Iterable[ReportRecord]:
    request = RunSimulationRequest(
        kind=SimulationKind(args.kind),
        seed=settings.seed,
        s=args.s,
        paths=args.paths,
        steps=args.steps,
        steps_per_unit_time=settings.steps_per_unit_time,
        scheme=SCHEMES[args.scheme],
        blowup_guard=settings.blowup_guard,
        laplace_rates=args.laplace_rates,
        s_values=args.s_values,
        r_values=args.r_values,
        dt=args.dt,
    )
    return RunSimulation(PhiloxStream, pool.starmap).execute(request).records


def _validate(
    args: argparse.Namespace, settings: Settings, pool: WorkerPool
) -> Iterable[ReportRecord]:
    request = RunValidationRequest(seed=settings.seed, quick=args.quick, suites=args.suite)
    return RunValidation(PhiloxStream, pool.starmap).execute(request).records


def _export(
    args: argparse.Namespace, settings: Settings, _pool: WorkerPool
) -> Iterable[ReportRecord]:
    request = ExportCurvesRequest(
        curve=CurveKind(args.curve),
        start=args.start,
        stop=args.stop,
        points=args.points,
        point=args.point,
        s=args.s,
        tol=settings.density_tol,
    )
    return ExportCurves().execute(request).records


RUNNERS: dict[str, Runner] = {
    "density": _density,
    "alpha": _alpha,
    "transform": _transform,
    "roots": _roots,
    "simulate": _simulate,
    "validate": _validate,
    "export": _export,
}

# Commands whose rows are written as they are produced.
STREAMED = frozenset({"density", "simulate", "validate", "export"})


def _emit(
    writer: ReportWriter, command: str, records: Iterable[ReportRecord], sink: TextIO
) -> list[ReportRecord]:
    if command in STREAMED:
        seen: list[ReportRecord] = []

        def tracked() -> Iterable[ReportRecord]:
            for record in records:
                seen.append(record)
                yield record

        writer.stream(command, tracked(), sink)
        return seen
    complete = list(records)
    writer.write(command, complete, sink)
    return complete


def _fail(operation: str, message: str, code: int) -> int:
    print(f"error: {operation}: {message}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = load_settings(
            args.config,
            output_format=args.output_format,
            seed=args.seed,
            workers=args.workers,
            density_tol=args.density_tol,
            alpha_tol=args.alpha_tol,
            transform_tol=args.transform_tol,
            max_panels=args.max_panels,
            log_level=args.log_level,
        )
    except ValidationError as e:
        return _fail("config", str(e), EXIT_USAGE)

    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    logger.info("Running %s (seed=%d, workers=%d)", args.command, settings.seed, settings.workers)

    writer = writer_for(settings.output_format)
    try:
        with WorkerPool(settings.workers) as pool:
            records = RUNNERS[args.command](args, settings, pool)
            emitted = _emit(writer, args.command, records, sys.stdout)
    except InvalidParameterError as e:
        return _fail(args.command, str(e), EXIT_USAGE)
    except ChaosKernelError as e:
        logger.debug("Failure in %s", args.command, exc_info=True)
        return _fail(args.command, f"{type(e).__name__}: {e}", EXIT_FAILURE)

    failed = [record.operation for record in emitted if record.verdict == "FAIL"]
    if failed:
        logger.warning("Failed checks: %s", ", ".join(failed))
        return EXIT_FAILURE
    logger.info("%s finished: %d records", args.command, len(emitted))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
