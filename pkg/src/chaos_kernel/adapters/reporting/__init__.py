"""Report writer adapters."""

from __future__ import annotations

from chaos_kernel.adapters.reporting.csv_writer import CsvReportWriter
from chaos_kernel.adapters.reporting.factory import writer_for
from chaos_kernel.adapters.reporting.human_writer import HumanReportWriter
from chaos_kernel.adapters.reporting.json_writer import JsonReportWriter

__all__ = ["CsvReportWriter", "HumanReportWriter", "JsonReportWriter", "writer_for"]
