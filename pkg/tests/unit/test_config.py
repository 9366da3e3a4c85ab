"""Test settings precedence."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from chaos_kernel.config import CONFIG_FILE_ENV, Settings, load_settings
from chaos_kernel.domain.value_objects.output_format import OutputFormat


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep settings from the calling shell out of the tests."""
    for name in ("CHAOSKERNEL_SEED", "CHAOSKERNEL_WORKERS", "CHAOSKERNEL_DENSITY_TOL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.delenv(CONFIG_FILE_ENV, raising=False)


@pytest.fixture
def config_file(tmp_path: Path) -> Path:
    """Write a JSON settings file."""
    path = tmp_path / "chaos-kernel.json"
    path.write_text(json.dumps({"seed": 11, "workers": 3, "density_tol": 1e-6}))
    return path


class TestSettings:
    """Test Settings."""

    def test_default_values(self) -> None:
        """Test default configuration values."""
        settings = Settings()
        assert settings.density_tol == 1e-8
        assert settings.series_threshold == 0.15
        assert settings.workers == 1
        assert settings.output_format is OutputFormat.JSON

    def test_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test values read from prefixed variables."""
        monkeypatch.setenv("CHAOSKERNEL_SEED", "42")
        monkeypatch.setenv("CHAOSKERNEL_OUTPUT_FORMAT", "csv")
        settings = Settings()
        assert settings.seed == 42
        assert settings.output_format is OutputFormat.CSV

    def test_validation(self) -> None:
        """Test that out-of-range values are refused."""
        with pytest.raises(ValidationError):
            Settings(workers=0)
        with pytest.raises(ValidationError):
            Settings(seed=2**64)


class TestLoadSettings:
    """Test load_settings."""

    def test_file_values(self, config_file: Path) -> None:
        """Test that the file fills unset fields."""
        settings = load_settings(config_file)
        assert settings.seed == 11
        assert settings.workers == 3
        assert settings.density_tol == 1e-6

    def test_flags_beat_environment_beat_file(
        self, config_file: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test precedence flags > environment > file > defaults."""
        monkeypatch.setenv("CHAOSKERNEL_WORKERS", "2")
        settings = load_settings(config_file, seed=5, density_tol=None)
        assert settings.seed == 5
        assert settings.workers == 2
        assert settings.density_tol == 1e-6
        assert settings.alpha_tol == 1e-12

    def test_file_from_environment(
        self, config_file: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test the file named by the environment."""
        monkeypatch.setenv(CONFIG_FILE_ENV, str(config_file))
        assert load_settings().seed == 11

    def test_invalid_file_value(self, tmp_path: Path) -> None:
        """Test that an invalid file value is refused."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"max_panels": 1}))
        with pytest.raises(ValidationError):
            load_settings(path)
