"""Tests for the limit command group."""

import json
import sys
from pathlib import Path

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from click.testing import CliRunner

from app.commands.limit import limit


def invoke(*args):
    runner = CliRunner()
    return runner.invoke(limit, list(args))


def test_limit_eps():
    """theta_3 of the averaged transpositions tends to eps_1."""
    result = invoke("eps", "--i", "1", "--m", "1", "--r", "3")

    assert result.exit_code == 0
    assert "eps{1}" in result.output
    report = json.loads(result.output)
    assert report["passed"]
    assert report["extra"]["certificate"]["type"] == "exactFit"


def test_limit_eps_bad_index():
    """i > m has no meaning; the computation fails with exit 1."""
    result = invoke("eps", "--i", "2", "--m", "1", "--r", "3")

    assert result.exit_code == 1
    assert "1 <= i <= m" in result.output


def test_limit_stable():
    result = invoke("stable", "--element", "(1,2)", "--r", "3")

    assert result.exit_code == 0
    assert json.loads(result.output)["rows"][0]["limit"] == "1 * (1,2)"


def test_limit_alpha_eigenvalue():
    """The limit acts on T^(1)_2 by h*_1 = 2."""
    result = invoke("alpha", "--k", "1", "--r", "2", "--lambda", "[1]")

    assert result.exit_code == 0
    row = json.loads(result.output)["rows"][0]
    assert row["eigenvalue"] == row["hstar"] == "2"


def test_limit_window():
    result = invoke("window", "--family", "delta(2)", "--top", "3", "--xi")

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert [row["r"] for row in report["rows"]] == [1, 2, 3]
    assert set(report["extra"]["xi"]) == {"2", "3", "4"}


def test_limit_window_unknown_family():
    result = invoke("window", "--family", "w(2)", "--top", "3")
    assert result.exit_code == 2


def test_limit_pipeline():
    """For k = 1 on (1) every eigenvalue is exactly h*_1 = 2."""
    result = invoke("pipeline", "--k", "1", "--lambda", "[1]", "--schedule", "8,12,18")

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert [row["exact"] for row in report["rows"]] == ["2", "2", "2"]
    assert report["extra"]["target"] == "2"
    assert report["params"]["schedule"] == [8, 12, 18]


def test_limit_pipeline_bad_schedule():
    """Schedules must increase."""
    result = invoke("pipeline", "--k", "1", "--lambda", "[1]", "--schedule", "12,8")

    assert result.exit_code == 2
    assert "strictly increasing" in result.output


def test_limit_pipeline_bad_lambda():
    result = invoke("pipeline", "--k", "1", "--lambda", "[1,2]")
    assert result.exit_code == 2


def test_limit_compress():
    """Compressed averages approach eps_1 on T^(1) at rate 1/N."""
    result = invoke(
        "compress", "--family", "eps(1,1)", "--lambda", "[1]", "--r", "2", "--schedule", "6,8,10"
    )

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert [row["n"] for row in report["rows"]] == [6, 8, 10]
    values = [row["value"] for row in report["rows"]]
    assert values == sorted(values, reverse=True)
