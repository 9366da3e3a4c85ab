"""Pytest configuration and fixtures for integration tests."""

from __future__ import annotations

import pytest

from chaos_kernel.adapters.random.philox_stream import PhiloxStream
from chaos_kernel.application.services.acceptance import SuiteOptions
from chaos_kernel.workers.pool import WorkerPool

SUITE_SEED = 20240101


@pytest.fixture(scope="session")
def pool() -> object:
    """Two-process worker pool shared by the suites."""
    with WorkerPool(2) as workers:
        yield workers


@pytest.fixture
def options(pool: WorkerPool) -> SuiteOptions:
    """Full-size suite options on the shared pool."""
    return SuiteOptions(stream=PhiloxStream(SUITE_SEED), block_map=pool.starmap)
