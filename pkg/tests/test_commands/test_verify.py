"""Tests for the verify-hecke and verify-central commands."""

import json
import sys
from pathlib import Path

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from click.testing import CliRunner

from app.commands.verify_central import verify_central
from app.commands.verify_hecke import verify_hecke


def test_verify_hecke():
    runner = CliRunner()
    result = runner.invoke(verify_hecke, ["--n", "3"])

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["passed"]
    assert report["counterexample"] is None


def test_verify_hecke_wreath():
    runner = CliRunner()
    result = runner.invoke(verify_hecke, ["--n", "2", "--group", "Z2", "--format", "text"])

    assert result.exit_code == 0
    assert "group: Z2" in result.output


def test_verify_central():
    runner = CliRunner()
    result = runner.invoke(verify_central, ["--n", "3", "--k", "2"])

    assert result.exit_code == 0
    assert json.loads(result.output)["params"]["k"] == 2

