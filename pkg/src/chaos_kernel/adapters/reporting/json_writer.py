"""JSON report writer."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import TextIO

from chaos_kernel import __version__
from chaos_kernel.adapters.reporting.schema import RecordSchema, ReportSchema, StreamRecordSchema
from chaos_kernel.domain.value_objects.report_record import ReportRecord


class JsonReportWriter:
    """JSON implementation of report writer.

    Complete reports are one document; streamed reports are JSON Lines, one
    self-describing record per line.
    """

    def __init__(self, indent: int | None = 2) -> None:
        """Initialize writer with the document indentation."""
        self._indent = indent

    def write(self, command: str, records: Sequence[ReportRecord], sink: TextIO) -> None:
        """Write a complete report as one JSON document."""
        report = ReportSchema(
            version=__version__,
            command=command,
            records=[RecordSchema.from_record(r) for r in records],
        )
        sink.write(report.model_dump_json(indent=self._indent))
        sink.write("\n")

    def stream(self, command: str, records: Iterable[ReportRecord], sink: TextIO) -> int:
        """Write one JSON object per line as records arrive."""
        count = 0
        for record in records:
            line = StreamRecordSchema(
                **RecordSchema.from_record(record).model_dump(),
                version=__version__,
                command=command,
            )
            sink.write(line.model_dump_json())
            sink.write("\n")
            sink.flush()
            count += 1
        return count


def parse_report(text: str) -> tuple[str, list[ReportRecord]]:
    """Command and records of a complete JSON report."""
    report = ReportSchema.model_validate_json(text)
    return report.command, [r.to_record() for r in report.records]


def parse_stream(lines: Iterable[str]) -> list[ReportRecord]:
    """Records of a JSON Lines report, skipping blank lines."""
    return [
        StreamRecordSchema.model_validate_json(line).to_record() for line in lines if line.strip()
    ]
