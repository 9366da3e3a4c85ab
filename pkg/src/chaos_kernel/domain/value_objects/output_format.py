"""Report output format enumeration."""

from __future__ import annotations

from enum import Enum


class OutputFormat(str, Enum):
    """Formats a report can be emitted in."""

    JSON = "json"
    CSV = "csv"
    HUMAN = "human"

    def is_machine_readable(self) -> bool:
        """Check if the format is meant to be parsed."""
        return self in {OutputFormat.JSON, OutputFormat.CSV}
