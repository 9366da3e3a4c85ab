"""Test the worker pool."""

from __future__ import annotations

import functools
import operator

import numpy as np
import pytest

from chaos_kernel.adapters.random.philox_stream import PhiloxStream
from chaos_kernel.application.services import model
from chaos_kernel.domain.entities.path_config import PathConfig
from chaos_kernel.workers.pool import WorkerPool


class TestWorkerPool:
    """Test WorkerPool."""

    def test_inline_pool(self) -> None:
        """Test ordered results without processes."""
        with WorkerPool() as pool:
            assert pool.map(abs, [-1, 2, -3]) == [1, 2, 3]
            assert pool.starmap(operator.add, [(1, 2), (3, 4)]) == [3, 7]

    def test_process_pool_keeps_order(self) -> None:
        """Test input order with two processes."""
        with WorkerPool(2) as pool:
            assert pool.workers == 2
            assert pool.map(functools.partial(pow, 2), range(8)) == [2**k for k in range(8)]
            assert pool.starmap(operator.mul, []) == []

    def test_worker_count_checked(self) -> None:
        """Test that at least one worker is needed."""
        with pytest.raises(ValueError, match="at least 1"):
            WorkerPool(0)

    def test_stop_is_idempotent(self) -> None:
        """Test repeated start and stop."""
        pool = WorkerPool(2)
        pool.start()
        pool.start()
        pool.stop()
        pool.stop()

    @pytest.mark.slow
    def test_tangent_paths_independent_of_workers(self, stream: PhiloxStream) -> None:
        """Test identical ensembles for one and two workers."""
        cfg = PathConfig(s_final=1.0, steps=16, seed=stream.seed)
        serial = model.simulate_tangent(cfg, 600, stream)
        with WorkerPool(2) as pool:
            parallel = model.simulate_tangent(cfg, 600, stream, pool.starmap)
        np.testing.assert_array_equal(serial.a, parallel.a)
        np.testing.assert_array_equal(serial.zeta, parallel.zeta)
