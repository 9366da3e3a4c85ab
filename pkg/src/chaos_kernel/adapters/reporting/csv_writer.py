"""CSV report writer."""

from __future__ import annotations

import csv
import json
from collections.abc import Iterable, Sequence
from typing import Final, TextIO

from chaos_kernel import __version__
from chaos_kernel.adapters.reporting.schema import SCHEMA_VERSION
from chaos_kernel.domain.value_objects.report_record import ReportRecord

COLUMNS: Final = (
    "schema_version",
    "version",
    "command",
    "operation",
    "inputs",
    "value",
    "value_imag",
    "error_estimate",
    "method",
    "flags",
    "seed",
    "threshold",
    "verdict",
    "detail",
    "extra",
)


def _row(command: str, record: ReportRecord) -> list[str]:
    def opt(value: float | int | str | None) -> str:
        return "" if value is None else repr(value) if isinstance(value, float) else str(value)

    return [
        str(SCHEMA_VERSION),
        __version__,
        command,
        record.operation,
        json.dumps(dict(record.inputs), sort_keys=True),
        repr(record.value),
        opt(record.value_imag),
        repr(record.error_estimate),
        record.method,
        "|".join(record.flags),
        opt(record.seed),
        opt(record.threshold),
        opt(record.verdict),
        record.detail,
        json.dumps(dict(record.extra), sort_keys=True),
    ]


class CsvReportWriter:
    """CSV implementation of report writer.

    Every row has one cell per header column; ``inputs`` and ``extra`` are
    JSON objects and ``flags`` is pipe-separated.
    """

    def write(self, command: str, records: Sequence[ReportRecord], sink: TextIO) -> None:
        """Write the header and all rows."""
        self.stream(command, records, sink)

    def stream(self, command: str, records: Iterable[ReportRecord], sink: TextIO) -> int:
        """Write the header, then one flushed row per record."""
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(COLUMNS)
        count = 0
        for record in records:
            writer.writerow(_row(command, record))
            sink.flush()
            count += 1
        return count
