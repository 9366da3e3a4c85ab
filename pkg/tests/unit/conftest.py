"""Pytest configuration and fixtures for unit tests."""

from __future__ import annotations

import pytest

from chaos_kernel.adapters.random.philox_stream import PhiloxStream
from chaos_kernel.domain.entities.chaos_point import ChaosPoint
from chaos_kernel.domain.entities.marginal_point import MarginalPoint
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome
from chaos_kernel.domain.value_objects.report_record import ReportRecord

TEST_SEED = 12345


@pytest.fixture
def stream() -> PhiloxStream:
    """Provide a seeded counter-based random stream."""
    return PhiloxStream(TEST_SEED)


@pytest.fixture
def chaos_point() -> ChaosPoint:
    """Provide a generic point with moderate coordinates."""
    return ChaosPoint(w=0.1, beta=0.2, x=0.3, zeta=0.3, z=0.4)


@pytest.fixture
def marginal_point() -> MarginalPoint:
    """Provide the Gaussian coordinates of the inversion check."""
    return MarginalPoint(w=0.1, beta=0.2, zeta=0.3, z=0.4)


@pytest.fixture
def records() -> list[ReportRecord]:
    """Provide a mix of quadrature, Monte Carlo and check records."""
    return [
        ReportRecord(
            operation="q_exact",
            inputs={"w": 0.1, "beta": 0.2, "x": 0.3, "zeta": 0.3, "z": 0.4, "s": 1.0},
            value=0.0123,
            error_estimate=1e-9,
            method="quadrature",
            flags=("consistent_with_zero",),
            extra={"truncation": 12.5, "panels": 64.0},
        ),
        ReportRecord(
            operation="mean_x",
            inputs={"s": 1.0, "paths": 1000, "kind": "tangent"},
            value=0.501,
            error_estimate=0.004,
            method="exact-gaussian-plus-trapezoid",
            flags=("mc_standard_error",),
            seed=TEST_SEED,
            extra={"exact": 0.5, "z_score": 0.25},
        ),
        ReportRecord(
            operation="sh2cos2_zero",
            inputs={"n": 0},
            value=0.785,
            value_imag=0.785,
            error_estimate=1e-15,
            method="closed_form",
        ),
        ReportRecord.from_check(
            CheckOutcome(name="10 root sequences", measured=3e-14, threshold=1e-12),
            seed=TEST_SEED,
        ),
    ]
