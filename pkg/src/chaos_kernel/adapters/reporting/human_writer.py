"""Human-readable report writer."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Final, TextIO

from chaos_kernel.domain.value_objects.report_record import ReportRecord

UNITS: Final = {
    "q_exact": "per unit volume of (w, β, x, ζ, z)",
    "q_asymptotic": "per unit volume of (w, β, x, ζ, z)",
    "alpha": "per unit of chaos",
    "alpha_cdf": "probability",
    "alpha_laplace": "dimensionless",
    "tan_fixed_point": "radians",
}


def format_record(record: ReportRecord) -> str:
    """One line: operation, inputs, value with its error, method, flags and units."""
    inputs = " ".join(
        f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}" for k, v in record.inputs.items()
    )
    value = f"{record.value:.12g}"
    if record.value_imag is not None:
        value += f"{record.value_imag:+.12g}i"
    if record.verdict is not None:
        line = f"{record.verdict}  {record.operation}: measured {record.value:.3g}"
        if record.threshold is not None:
            line += f" vs threshold {record.threshold:.3g}"
        return f"{line}  {record.detail}".rstrip()
    line = f"{record.operation}({inputs}) = {value} ± {record.error_estimate:.2g}"
    unit = UNITS.get(record.operation)
    if unit:
        line += f" [{unit}]"
    line += f"  method={record.method}"
    if record.flags:
        line += f"  flags={','.join(record.flags)}"
    if record.seed is not None:
        line += f"  seed={record.seed}"
    return line


class HumanReportWriter:
    """Plain-text implementation of report writer."""

    def write(self, command: str, records: Sequence[ReportRecord], sink: TextIO) -> None:
        """Write a titled block of record lines."""
        sink.write(f"# {command}\n")
        self.stream(command, records, sink)

    def stream(self, command: str, records: Iterable[ReportRecord], sink: TextIO) -> int:
        """Write one line per record as it arrives."""
        count = 0
        for record in records:
            sink.write(format_record(record) + "\n")
            sink.flush()
            count += 1
        return count
