"""Tests for the dim-identity, charval and sstar-table commands."""

import json
import sys
from pathlib import Path

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from click.testing import CliRunner

from app.commands.charval import charval
from app.commands.dim_identity import dim_identity
from app.commands.sstar_table import sstar_table


def test_dim_identity():
    runner = CliRunner()
    result = runner.invoke(dim_identity, ["--n", "3"])

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["extra"]["left"] == report["extra"]["right"] == 34


def test_dim_identity_s3():
    runner = CliRunner()
    result = runner.invoke(dim_identity, ["--n", "2", "--group", "S3", "--format", "csv"])

    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "ell,irreducibles,matrices,match"


def test_charval_single_class():
    runner = CliRunner()
    result = runner.invoke(charval, ["--lambda", "[2,1]", "--rho", "[3]"])

    assert result.exit_code == 0
    rows = json.loads(result.output)["rows"]
    assert len(rows) == 1
    assert rows[0]["value"] == -1


def test_charval_bad_partition():
    runner = CliRunner()
    result = runner.invoke(charval, ["--lambda", "two"])
    assert result.exit_code == 2


def test_sstar_table():
    runner = CliRunner()
    result = runner.invoke(sstar_table, ["--n", "3", "--format", "text"])

    assert result.exit_code == 0
    assert result.output.startswith("sstar-table: passed")
