"""Test run simulation use case."""

from __future__ import annotations

import math
from unittest.mock import Mock

import pytest

from chaos_kernel.adapters.random.philox_stream import PhiloxStream
from chaos_kernel.application.services.model import serial_map
from chaos_kernel.application.use_cases.run_simulation import (
    RunSimulation,
    RunSimulationRequest,
    SimulationKind,
)
from chaos_kernel.domain.exceptions import InsufficientPathsError, InvalidParameterError
from chaos_kernel.domain.value_objects.report_record import MC_STANDARD_ERROR

SEED = 7


@pytest.fixture
def stream_factory() -> Mock:
    """Create stream factory spy."""
    return Mock(side_effect=PhiloxStream)


@pytest.fixture
def block_map() -> Mock:
    """Create block runner spy."""
    return Mock(side_effect=serial_map)


@pytest.fixture
def use_case(stream_factory: Mock, block_map: Mock) -> RunSimulation:
    """Create run simulation use case."""
    return RunSimulation(stream_factory=stream_factory, block_map=block_map)


class TestRunSimulation:
    """Test RunSimulation use case."""

    def test_tangent_summary(
        self, use_case: RunSimulation, stream_factory: Mock, block_map: Mock
    ) -> None:
        """Test means with standard errors and the exact targets."""
        request = RunSimulationRequest(
            kind=SimulationKind.TANGENT, seed=SEED, paths=300, steps=32, laplace_rates=(1.0,)
        )
        records = {r.operation: r for r in use_case.execute(request).records}
        stream_factory.assert_called_once_with(SEED)
        block_map.assert_called_once()
        assert records["mean_x"].extra["exact"] == 0.5
        assert records["laplace_A_b=1"].extra["exact"] == pytest.approx(1 / math.cosh(1.0))
        assert all(MC_STANDARD_ERROR in r.flags and r.seed == SEED for r in records.values())

    def test_reproducible(self, use_case: RunSimulation) -> None:
        """Test that the same seed gives the same records."""
        request = RunSimulationRequest(kind=SimulationKind.DUDLEY, seed=SEED, paths=50, steps=16)
        first = [r.value for r in use_case.execute(request).records]
        second = [r.value for r in use_case.execute(request).records]
        assert first == second
        assert len(first) == 5

    def test_dudley_path(self, use_case: RunSimulation) -> None:
        """Test one record per state of a single path."""
        request = RunSimulationRequest(
            kind=SimulationKind.DUDLEY_PATH, seed=SEED, s=0.5, paths=1, steps=10
        )
        records = list(use_case.execute(request).records)
        assert len(records) == 11
        assert records[-1].inputs["t"] == pytest.approx(0.5)
        assert all(r.extra["mass_shell"] == pytest.approx(1.0) for r in records)

    def test_hitting(self, use_case: RunSimulation) -> None:
        """Test the exit-time summaries."""
        request = RunSimulationRequest(kind=SimulationKind.HITTING, seed=SEED, paths=200)
        records = list(use_case.execute(request).records)
        assert [r.operation for r in records] == ["mean_exit_time", "laplace_exit_time_b=1"]

    def test_remainder_needs_paths(self, use_case: RunSimulation) -> None:
        """Test that the remainder survey refuses small ensembles when run."""
        request = RunSimulationRequest(kind=SimulationKind.REMAINDER, seed=SEED, paths=10)
        with pytest.raises(InsufficientPathsError):
            list(use_case.execute(request).records)

    def test_invalid_request(self, use_case: RunSimulation) -> None:
        """Test eager validation of paths and horizon."""
        with pytest.raises(InvalidParameterError):
            use_case.execute(RunSimulationRequest(kind=SimulationKind.TANGENT, seed=SEED, paths=0))
        with pytest.raises(InvalidParameterError):
            use_case.execute(RunSimulationRequest(kind=SimulationKind.TANGENT, seed=SEED, s=0.0))
