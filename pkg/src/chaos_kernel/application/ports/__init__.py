"""Application ports - Interfaces for random streams and report output."""

from __future__ import annotations

from chaos_kernel.application.ports.random_stream import RandomStream
from chaos_kernel.application.ports.report_writer import ReportWriter

__all__ = ["RandomStream", "ReportWriter"]
