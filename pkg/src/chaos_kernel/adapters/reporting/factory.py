"""Report writer selection."""

from __future__ import annotations

from chaos_kernel.adapters.reporting.csv_writer import CsvReportWriter
from chaos_kernel.adapters.reporting.human_writer import HumanReportWriter
from chaos_kernel.adapters.reporting.json_writer import JsonReportWriter
from chaos_kernel.application.ports.report_writer import ReportWriter
from chaos_kernel.domain.value_objects.output_format import OutputFormat


def writer_for(output_format: OutputFormat) -> ReportWriter:
    """Writer for an output format."""
    writers: dict[OutputFormat, type[ReportWriter]] = {
        OutputFormat.JSON: JsonReportWriter,
        OutputFormat.CSV: CsvReportWriter,
        OutputFormat.HUMAN: HumanReportWriter,
    }
    return writers[output_format]()
