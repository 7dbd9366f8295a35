"""Tests for the eigentable command."""

import json
import sys
from pathlib import Path

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from click.testing import CliRunner

from app.commands.eigentable import eigentable


def test_eigentable_single_k():
    """Every irreducible of S(6) is checked against p#_3."""
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "6", "--k", "3"])

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["passed"]
    assert len(report["rows"]) == 11
    assert report["params"] == {"n": 6, "k": 3, "model": "sym", "group": "trivial"}


def test_eigentable_rook_model():
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "3", "--model", "rook", "--k", "2"])

    assert result.exit_code == 0
    assert json.loads(result.output)["command"] == "eigentable"


def test_eigentable_csv():
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "3", "--k", "1", "--format", "csv"])

    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "lambda,k,eigenvalue,psharp,match"
    assert len(lines) == 4


def test_eigentable_wreath_text():
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "2", "--group", "Z2", "--format", "text"])

    assert result.exit_code == 0
    assert result.output.startswith("eigentable: passed")


def test_eigentable_writes_report(tmp_path):
    out = tmp_path / "table.json"
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "3", "--out", str(out)])

    assert result.exit_code == 0
    assert json.loads(out.read_text())["passed"]


def test_eigentable_unknown_group():
    """An unknown group is a usage error."""
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "3", "--group", "Q8"])

    assert result.exit_code == 2
    assert "error:" in result.output


def test_eigentable_over_bounds():
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "12", "--k", "2"])

    assert result.exit_code == 2
    assert "max_sym_n" in result.output


def test_eigentable_single_character():
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "2", "--group", "S3", "--k", "2", "--psi", "2"])

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert {row["psi"] for row in report["rows"]} == {2}


def test_eigentable_psi_needs_sym_model():
    runner = CliRunner()
    result = runner.invoke(eigentable, ["--n", "2", "--group", "Z2", "--model", "rook", "--psi", "1"])

    assert result.exit_code == 2
    assert "--psi" in result.output
