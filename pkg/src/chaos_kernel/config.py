"""Configuration using pydantic-settings."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Literal

from pydantic import Field
from pydantic_settings import BaseSettings, JsonConfigSettingsSource, SettingsConfigDict

from chaos_kernel.domain.value_objects.output_format import OutputFormat

CONFIG_FILE_ENV = "CHAOSKERNEL_CONFIG_FILE"


class Settings(BaseSettings):
    """Library and CLI settings."""

    model_config = SettingsConfigDict(
        env_prefix="CHAOSKERNEL_",
        case_sensitive=False,
        extra="ignore",
    )

    # Quadrature
    transform_tol: float = Field(default=1e-10, gt=0)
    density_tol: float = Field(default=1e-8, gt=0)
    alpha_tol: float = Field(default=1e-12, gt=0)
    max_panels: int = Field(default=20_000, ge=16)
    quad_attempts: int = Field(default=3, ge=1)
    oscillation_budget: float = Field(default=1e4, gt=0)

    # Series / asymptotics
    series_threshold: float = Field(default=0.15, gt=0)
    mu_threshold: float = Field(default=10.0, gt=0)
    epsilon: float = Field(default=0.5, gt=0)

    # Monte Carlo
    seed: int = Field(default=20240101, ge=0, lt=2**64)
    workers: int = Field(default=1, ge=1)
    steps_per_unit_time: int = Field(default=4096, ge=1)
    blowup_guard: float = Field(default=300.0, gt=0)

    # Output
    output_format: OutputFormat = OutputFormat.JSON
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"


def load_settings(config_file: Path | None = None, **overrides: Any) -> Settings:
    """Build settings with precedence flags > environment > JSON file > defaults.

    Args:
        config_file: Optional JSON file; falls back to ``$CHAOSKERNEL_CONFIG_FILE``
        **overrides: Values given on the command line (``None`` entries are ignored)

    Returns:
        Validated settings

    Raises:
        pydantic.ValidationError: If any source holds an invalid value
    """
    flags = {key: value for key, value in overrides.items() if value is not None}
    env_file = os.environ.get(CONFIG_FILE_ENV)
    path = config_file or (Path(env_file) if env_file else None)
    base = Settings(**flags)
    if path is None:
        return base
    file_values = JsonConfigSettingsSource(Settings, json_file=path)()
    # Fields already set by flags or environment win over the file.
    below = {k: v for k, v in file_values.items() if k not in base.model_fields_set}
    return Settings(**below, **flags)
