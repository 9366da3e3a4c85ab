"""Report writer port."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Protocol, TextIO

from chaos_kernel.domain.value_objects.report_record import ReportRecord


class ReportWriter(Protocol):
    """Serializes report records in one output format."""

    def write(self, command: str, records: Sequence[ReportRecord], sink: TextIO) -> None:
        """Write a complete report.

        Args:
            command: CLI subcommand that produced the records
            records: Records in emission order
            sink: Text stream to write to
        """
        ...

    def stream(self, command: str, records: Iterable[ReportRecord], sink: TextIO) -> int:
        """Write records one by one as they are produced, flushing after each.

        Returns:
            Number of records written
        """
        ...
