"""Test run validation use case."""

from __future__ import annotations

from unittest.mock import Mock

import pytest

from chaos_kernel.adapters.random.philox_stream import PhiloxStream
from chaos_kernel.application.use_cases.run_validation import (
    RunValidation,
    RunValidationRequest,
)
from chaos_kernel.domain.exceptions import InvalidParameterError


@pytest.fixture
def stream_factory() -> Mock:
    """Create stream factory spy."""
    return Mock(side_effect=PhiloxStream)


@pytest.fixture
def use_case(stream_factory: Mock) -> RunValidation:
    """Create run validation use case."""
    return RunValidation(stream_factory=stream_factory)


class TestRunValidation:
    """Test RunValidation use case."""

    def test_selected_suites(self, use_case: RunValidation, stream_factory: Mock) -> None:
        """Test one passing record per requested suite."""
        request = RunValidationRequest(seed=3, quick=True, suites=("10", "1"))
        records = list(use_case.execute(request).records)
        stream_factory.assert_called_once_with(3)
        assert [r.operation for r in records] == ["10 root sequences", "1 laplace identity"]
        assert all(r.verdict == "PASS" for r in records)
        assert all(r.seed == 3 for r in records)

    def test_unknown_suite(self, use_case: RunValidation) -> None:
        """Test that unknown keys are refused before any suite runs."""
        with pytest.raises(InvalidParameterError):
            use_case.execute(RunValidationRequest(seed=3, suites=("99",)))
