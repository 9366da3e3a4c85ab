"""Versioned report schema."""

from __future__ import annotations

from typing import Final, Literal

from pydantic import BaseModel, ConfigDict, Field

from chaos_kernel.domain.value_objects.report_record import ReportRecord

SCHEMA_VERSION: Final = 1


class RecordSchema(BaseModel):
    """Schema for one report record."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    operation: str = Field(..., min_length=1, description="Operation that produced the value")
    inputs: dict[str, float | int | str] = Field(default_factory=dict, description="Arguments")
    value: float = Field(..., description="Value, or real part of a complex value")
    value_imag: float | None = Field(None, description="Imaginary part of a complex value")
    error_estimate: float = Field(..., ge=0, description="Error bound or standard error")
    method: str = Field(..., description="Evaluation method")
    flags: list[str] = Field(default_factory=list, description="Regime and quality flags")
    seed: int | None = Field(None, ge=0, description="Root seed of Monte Carlo values")
    threshold: float | None = Field(None, description="Pass threshold of a check")
    verdict: Literal["PASS", "FAIL"] | None = Field(None, description="Outcome of a check")
    detail: str = Field(default="", description="Free-form diagnostics")
    extra: dict[str, float] = Field(default_factory=dict, description="Auxiliary numbers")

    @classmethod
    def from_record(cls, record: ReportRecord) -> RecordSchema:
        """Schema view of a domain record."""
        return cls(
            operation=record.operation,
            inputs=dict(record.inputs),
            value=record.value,
            value_imag=record.value_imag,
            error_estimate=record.error_estimate,
            method=record.method,
            flags=list(record.flags),
            seed=record.seed,
            threshold=record.threshold,
            verdict=record.verdict,
            detail=record.detail,
            extra=dict(record.extra),
        )

    def to_record(self) -> ReportRecord:
        """Domain record of this schema."""
        return ReportRecord(
            operation=self.operation,
            inputs=dict(self.inputs),
            value=self.value,
            error_estimate=self.error_estimate,
            method=self.method,
            flags=tuple(self.flags),
            seed=self.seed,
            value_imag=self.value_imag,
            threshold=self.threshold,
            verdict=self.verdict,
            detail=self.detail,
            extra=dict(self.extra),
        )


class StreamRecordSchema(RecordSchema):
    """Schema for one line of a streamed (JSON Lines) report."""

    schema_version: int = Field(default=SCHEMA_VERSION, description="Report schema version")
    version: str = Field(..., description="Library version")
    command: str = Field(..., description="CLI subcommand")


class ReportSchema(BaseModel):
    """Schema for a complete report."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    schema_version: int = Field(default=SCHEMA_VERSION, description="Report schema version")
    version: str = Field(..., description="Library version")
    command: str = Field(..., description="CLI subcommand")
    records: list[RecordSchema] = Field(default_factory=list, description="Emitted records")
