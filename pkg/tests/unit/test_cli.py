"""Test the command-line entry point."""

from __future__ import annotations

import json

import pytest

from chaos_kernel.application.services import acceptance
from chaos_kernel.cli.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main
from chaos_kernel.domain.value_objects.check_outcome import CheckOutcome


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep settings from the calling shell out of the tests."""
    for name in ("CHAOSKERNEL_SEED", "CHAOSKERNEL_OUTPUT_FORMAT", "CHAOSKERNEL_CONFIG_FILE"):
        monkeypatch.delenv(name, raising=False)


class TestParser:
    """Test build_parser."""

    def test_point_needs_five_coordinates(self) -> None:
        """Test that a short point is a usage error."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["density", "--point", "1,2,3"])

    def test_sweeps_and_complex_exponents(self) -> None:
        """Test comma-separated floats and complex λ."""
        args = build_parser().parse_args(["transform", "phi", "--lam", "1+2j"])
        assert args.lam == 1 + 2j
        args = build_parser().parse_args(["alpha", "--x", "0.5, 1,2"])
        assert args.x == (0.5, 1.0, 2.0)


class TestMain:
    """Test main exit codes and output."""

    def test_roots_json_document(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test a complete JSON report on stdout."""
        code = main(["--format", "json", "roots", "--tan-fixed-points", "3"])
        assert code == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["command"] == "roots"
        assert len(document["records"]) == 3
        assert document["records"][0]["value"] == pytest.approx(4.493409457909064)

    def test_transform_human(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the human format of one transform value."""
        code = main(["--format", "human", "transform", "flt_z", "--b", "1"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("# transform")

    def test_validate_streams_json_lines(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test one line per suite with its verdict."""
        code = main(["--seed", "5", "validate", "--quick", "--suite", "10"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1
        record = json.loads(lines[0])
        assert record["verdict"] == "PASS"
        assert record["seed"] == 5

    def test_failed_check_exit_code(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that a failing suite gives exit code 1."""
        failing = acceptance.Suite(
            "10", "root sequences", lambda _: CheckOutcome("x", measured=1.0, threshold=0.0)
        )
        monkeypatch.setattr(acceptance, "SUITES", (failing,))
        assert main(["validate", "--suite", "10"]) == EXIT_FAILURE
        assert json.loads(capsys.readouterr().out)["verdict"] == "FAIL"

    def test_invalid_parameter_is_usage_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test exit code 2 with the operation named on stderr."""
        code = main(["export", "alpha", "--start", "0", "--stop", "1"])
        assert code == EXIT_USAGE
        assert capsys.readouterr().err.startswith("error: export:")

    def test_numeric_failure_exit_code(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test exit code 1 when the small-time equivalent is undefined."""
        code = main(["density", "--point", "0,0,1,0,0", "--asymptotic"])
        assert code == EXIT_FAILURE
        assert "AsymptoticUndefinedError" in capsys.readouterr().err

    def test_bad_arguments(self) -> None:
        """Test argparse errors and --version."""
        assert main(["nonsense"]) == EXIT_USAGE
        assert main(["--version"]) == EXIT_OK

    def test_invalid_setting(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that an invalid tolerance is reported as a configuration error."""
        assert main(["--density-tol", "-1", "roots"]) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("error: config:")

    def test_seed_from_environment(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Test that the environment supplies the seed."""
        monkeypatch.setenv("CHAOSKERNEL_SEED", "99")
        assert main(["simulate", "hitting", "--paths", "20"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert all(json.loads(line)["seed"] == 99 for line in lines)
