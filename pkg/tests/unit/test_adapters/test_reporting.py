"""Test report writers."""

from __future__ import annotations

import csv
import io
import json

import pytest

from chaos_kernel import __version__
from chaos_kernel.adapters.reporting import (
    CsvReportWriter,
    HumanReportWriter,
    JsonReportWriter,
    writer_for,
)
from chaos_kernel.adapters.reporting.csv_writer import COLUMNS
from chaos_kernel.adapters.reporting.human_writer import format_record
from chaos_kernel.adapters.reporting.json_writer import parse_report, parse_stream
from chaos_kernel.adapters.reporting.schema import SCHEMA_VERSION
from chaos_kernel.domain.value_objects.output_format import OutputFormat
from chaos_kernel.domain.value_objects.report_record import ReportRecord


class TestJsonReportWriter:
    """Test JsonReportWriter."""

    def test_document_round_trip(self, records: list[ReportRecord]) -> None:
        """Test that a complete report parses back to the same records."""
        sink = io.StringIO()
        JsonReportWriter().write("density", records, sink)
        command, parsed = parse_report(sink.getvalue())
        assert command == "density"
        assert parsed == records

    def test_document_header(self, records: list[ReportRecord]) -> None:
        """Test schema and library versions in the document."""
        sink = io.StringIO()
        JsonReportWriter(indent=None).write("roots", records, sink)
        document = json.loads(sink.getvalue())
        assert document["schema_version"] == SCHEMA_VERSION
        assert document["version"] == __version__
        assert document["records"][2]["value_imag"] == 0.785
        assert document["records"][3]["verdict"] == "PASS"

    def test_stream_is_json_lines(self, records: list[ReportRecord]) -> None:
        """Test one self-describing object per line."""
        sink = io.StringIO()
        count = JsonReportWriter().stream("simulate", iter(records), sink)
        lines = sink.getvalue().splitlines()
        assert count == len(lines) == len(records)
        assert all(json.loads(line)["command"] == "simulate" for line in lines)
        assert parse_stream([*lines, ""]) == records


class TestCsvReportWriter:
    """Test CsvReportWriter."""

    def test_rectangular_rows(self, records: list[ReportRecord]) -> None:
        """Test a header and one full row per record."""
        sink = io.StringIO()
        CsvReportWriter().write("export", records, sink)
        rows = list(csv.reader(io.StringIO(sink.getvalue())))
        assert tuple(rows[0]) == COLUMNS
        assert len(rows) == len(records) + 1
        assert all(len(row) == len(COLUMNS) for row in rows)

    def test_cells(self, records: list[ReportRecord]) -> None:
        """Test JSON objects, pipe-joined flags and empty optional cells."""
        sink = io.StringIO()
        CsvReportWriter().stream("export", records, sink)
        rows = list(csv.DictReader(io.StringIO(sink.getvalue())))
        first = rows[0]
        assert json.loads(first["inputs"])["x"] == 0.3
        assert first["flags"] == "consistent_with_zero"
        assert first["seed"] == ""
        assert float(first["value"]) == records[0].value
        assert rows[3]["verdict"] == "PASS"


class TestHumanReportWriter:
    """Test HumanReportWriter."""

    def test_value_line(self, records: list[ReportRecord]) -> None:
        """Test inputs, error, units and flags on one line."""
        line = format_record(records[0])
        assert line.startswith("q_exact(w=0.1 beta=0.2 x=0.3")
        assert "± 1e-09" in line
        assert "[per unit volume" in line
        assert "flags=consistent_with_zero" in line

    def test_complex_value(self, records: list[ReportRecord]) -> None:
        """Test the imaginary part after the real part."""
        assert "= 0.785+0.785i" in format_record(records[2])

    def test_check_line(self, records: list[ReportRecord]) -> None:
        """Test that checks lead with their verdict."""
        assert format_record(records[3]).startswith("PASS  10 root sequences: measured 3e-14")

    def test_titled_block(self, records: list[ReportRecord]) -> None:
        """Test the command title and one line per record."""
        sink = io.StringIO()
        HumanReportWriter().write("validate", records, sink)
        lines = sink.getvalue().splitlines()
        assert lines[0] == "# validate"
        assert len(lines) == len(records) + 1


class TestWriterFor:
    """Test writer_for."""

    @pytest.mark.parametrize(
        ("output_format", "expected"),
        [
            (OutputFormat.JSON, JsonReportWriter),
            (OutputFormat.CSV, CsvReportWriter),
            (OutputFormat.HUMAN, HumanReportWriter),
        ],
    )
    def test_selection(self, output_format: OutputFormat, expected: type) -> None:
        """Test one writer per format."""
        assert isinstance(writer_for(output_format), expected)
