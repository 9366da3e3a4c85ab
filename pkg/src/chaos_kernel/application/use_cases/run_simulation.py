"""Run simulation use case."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import numpy.typing as npt

from chaos_kernel.application.ports.random_stream import RandomStream
from chaos_kernel.application.services import model
from chaos_kernel.domain.entities.path_config import PathConfig
from chaos_kernel.domain.exceptions import InvalidParameterError
from chaos_kernel.domain.value_objects.ensembles import Estimate
from chaos_kernel.domain.value_objects.report_record import MC_STANDARD_ERROR, ReportRecord
from chaos_kernel.domain.value_objects.scheme import Scheme

logger = logging.getLogger(__name__)

SAMPLE_PATH = "sample_path"
EULER = "euler-maruyama"


class SimulationKind(str, Enum):
    """What the simulate command samples."""

    DUDLEY = "dudley"
    DUDLEY_PATH = "dudley-path"
    TANGENT = "tangent"
    HITTING = "hitting"
    REMAINDER = "remainder"


@dataclass
class RunSimulationRequest:
    """Request to simulate an ensemble and summarize it."""

    kind: SimulationKind
    seed: int
    s: float = 1.0
    paths: int = 10_000
    steps: int | None = None
    steps_per_unit_time: int = 4096
    scheme: Scheme = Scheme.EXACT
    blowup_guard: float = model.BLOWUP_GUARD
    laplace_rates: Sequence[float] = (1.0,)
    s_values: Sequence[float] = field(default_factory=lambda: (0.2, 0.1, 0.05, 0.025))
    r_values: Sequence[float] = (0.5, 1.0, 2.0)
    dt: float = model.HITTING_DT


@dataclass
class RunSimulationResponse:
    """Response with summary records, each with its Monte Carlo standard error."""

    records: Iterator[ReportRecord]


class RunSimulation:
    """Use case for Dudley, tangent-process and hitting-time ensembles."""

    def __init__(
        self,
        stream_factory: Callable[[int], RandomStream],
        block_map: model.BlockMap = model.serial_map,
    ) -> None:
        """Initialize use case with a random stream factory and a block runner."""
        self._stream_factory = stream_factory
        self._block_map = block_map

    def execute(self, request: RunSimulationRequest) -> RunSimulationResponse:
        """Execute the simulation use case.

        Raises:
            InvalidParameterError: If the path count or horizon is invalid
        """
        if request.paths < 1:
            raise InvalidParameterError(f"Path count must be positive, got {request.paths}")
        if not request.s > 0:
            raise InvalidParameterError(f"Proper time must be positive, got {request.s}")
        return RunSimulationResponse(records=self._records(request))

    def _config(self, request: RunSimulationRequest) -> PathConfig:
        if request.steps is not None:
            return PathConfig(request.s, request.steps, request.seed, request.scheme)
        return PathConfig.with_density(
            request.s, request.steps_per_unit_time, request.seed, request.scheme
        )

    def _records(self, request: RunSimulationRequest) -> Iterator[ReportRecord]:
        stream = self._stream_factory(request.seed)
        logger.info(
            "Simulating %s: s=%s paths=%d seed=%d",
            request.kind.value,
            request.s,
            request.paths,
            request.seed,
        )
        match request.kind:
            case SimulationKind.TANGENT:
                yield from self._tangent(request, stream)
            case SimulationKind.DUDLEY:
                yield from self._dudley(request, stream)
            case SimulationKind.DUDLEY_PATH:
                yield from self._dudley_path(request, stream)
            case SimulationKind.HITTING:
                yield from self._hitting(request, stream)
            case SimulationKind.REMAINDER:
                yield from self._remainder(request, stream)

    def _mean(
        self,
        request: RunSimulationRequest,
        name: str,
        values: npt.NDArray[np.float64],
        exact: float | None = None,
        method: str | None = None,
    ) -> ReportRecord:
        estimate = Estimate.of(values)
        extra = {} if exact is None else {"exact": exact, "z_score": estimate.z_score(exact)}
        return ReportRecord(
            operation=name,
            inputs={"s": request.s, "paths": request.paths, "kind": request.kind.value},
            value=estimate.mean,
            error_estimate=estimate.std_error,
            method=method or request.scheme.value,
            flags=(MC_STANDARD_ERROR,),
            seed=request.seed,
            extra=extra,
        )

    def _tangent(
        self, request: RunSimulationRequest, stream: RandomStream
    ) -> Iterator[ReportRecord]:
        sample = model.simulate_tangent(
            self._config(request), request.paths, stream, self._block_map
        )
        for name, values in sample.columns().items():
            exact = request.s**2 / 2.0 if name == "x" else 0.0
            yield self._mean(request, f"mean_{name}", values, exact)
        for b in request.laplace_rates:
            yield self._mean(
                request,
                f"laplace_A_b={b:g}",
                np.exp(-b * b * sample.a),
                1.0 / math.cosh(b * request.s),
            )

    def _dudley(
        self, request: RunSimulationRequest, stream: RandomStream
    ) -> Iterator[ReportRecord]:
        ensemble = model.simulate_dudley_ensemble(
            self._config(request),
            request.paths,
            stream,
            request.blowup_guard,
            self._block_map,
        )
        yield self._mean(request, "mean_lam", ensemble.lam, 0.0, EULER)
        yield self._mean(request, "mean_mu", ensemble.mu, 0.0, EULER)
        expected_x = model.expected_position(request.s)
        yield self._mean(request, "mean_x", ensemble.x, expected_x, EULER)
        yield self._mean(request, "mean_y", ensemble.y, 0.0, EULER)
        yield self._mean(request, "mean_z", ensemble.z, 0.0, EULER)

    def _dudley_path(
        self, request: RunSimulationRequest, stream: RandomStream
    ) -> Iterator[ReportRecord]:
        cfg = self._config(request)
        states = model.simulate_dudley(cfg, stream, blowup_guard=request.blowup_guard)
        for step, state in enumerate(states):
            yield ReportRecord(
                operation="dudley_state",
                inputs={"step": step, "t": step * cfg.dt},
                value=state.x,
                error_estimate=0.0,
                method=EULER,
                flags=(SAMPLE_PATH,),
                seed=request.seed,
                extra={
                    "lam": state.lam,
                    "mu": state.mu,
                    "y": state.y,
                    "z": state.z,
                    "mass_shell": state.mass_shell(),
                },
            )

    def _hitting(
        self, request: RunSimulationRequest, stream: RandomStream
    ) -> Iterator[ReportRecord]:
        times = model.simulate_hitting_times(request.paths, stream, request.dt)
        # The exit time of (−1, 1) from 0 has mean 1 and the law of 2A₁.
        yield self._mean(request, "mean_exit_time", times, 1.0, "bridge-corrected walk")
        yield self._mean(
            request,
            "laplace_exit_time_b=1",
            np.exp(-0.5 * times),
            1.0 / math.cosh(1.0),
            "bridge-corrected walk",
        )

    def _remainder(
        self, request: RunSimulationRequest, stream: RandomStream
    ) -> Iterator[ReportRecord]:
        steps = request.steps or model.SURVEY_STEPS
        survey = model.remainder_survey(
            request.s_values, request.r_values, request.paths, stream, steps
        )
        base = {"paths": request.paths, "kind": request.kind.value}
        for row in survey.rows:
            yield ReportRecord(
                operation="median_sup_R",
                inputs={**base, "s": row.s},
                value=row.median_r,
                error_estimate=row.median_r_error,
                method=EULER,
                flags=(MC_STANDARD_ERROR,),
                seed=request.seed,
            )
            yield ReportRecord(
                operation="median_sup_R_prime",
                inputs={**base, "s": row.s},
                value=row.median_r_prime,
                error_estimate=row.median_r_prime_error,
                method=EULER,
                flags=(MC_STANDARD_ERROR,),
                seed=request.seed,
            )
            for label, tails in (("tail_R", row.tail_r), ("tail_R_prime", row.tail_r_prime)):
                for r, p in zip(survey.r_values, tails, strict=True):
                    yield ReportRecord(
                        operation=label,
                        inputs={**base, "s": row.s, "R": r},
                        value=p,
                        error_estimate=math.sqrt(p * (1.0 - p) / request.paths),
                        method=EULER,
                        flags=(MC_STANDARD_ERROR,),
                        seed=request.seed,
                    )
        for label, slope, error in (
            ("exponent_R", survey.exponent_r, survey.exponent_r_stderr),
            ("exponent_R_prime", survey.exponent_r_prime, survey.exponent_r_prime_stderr),
        ):
            yield ReportRecord(
                operation=label,
                inputs=base,
                value=slope,
                error_estimate=error,
                method="log-log regression of medians",
                seed=request.seed,
            )
