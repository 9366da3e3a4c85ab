"""Run validation use case."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field

from chaos_kernel.application.ports.random_stream import RandomStream
from chaos_kernel.application.services import acceptance, model
from chaos_kernel.domain.value_objects.report_record import ReportRecord

logger = logging.getLogger(__name__)


@dataclass
class RunValidationRequest:
    """Request to run validation suites."""

    seed: int
    quick: bool = False
    suites: Sequence[str] = field(default_factory=tuple)


@dataclass
class RunValidationResponse:
    """Response with one record per suite, produced as each suite finishes."""

    records: Iterator[ReportRecord]


class RunValidation:
    """Use case for the acceptance suites."""

    def __init__(
        self,
        stream_factory: Callable[[int], RandomStream],
        block_map: model.BlockMap = model.serial_map,
    ) -> None:
        """Initialize use case with a random stream factory and a block runner."""
        self._stream_factory = stream_factory
        self._block_map = block_map

    def execute(self, request: RunValidationRequest) -> RunValidationResponse:
        """Execute the validation use case.

        Raises:
            InvalidParameterError: If an unknown suite key is requested
        """
        suites = acceptance.select_suites(request.suites)
        options = acceptance.SuiteOptions(
            stream=self._stream_factory(request.seed),
            quick=request.quick,
            block_map=self._block_map,
        )
        return RunValidationResponse(records=self._records(suites, options, request.seed))

    def _records(
        self,
        suites: list[acceptance.Suite],
        options: acceptance.SuiteOptions,
        seed: int,
    ) -> Iterator[ReportRecord]:
        for suite in suites:
            outcome = acceptance.run_suite(suite, options)
            yield ReportRecord.from_check(outcome, seed)
