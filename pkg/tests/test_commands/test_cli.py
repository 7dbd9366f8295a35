"""Tests for the top-level command group."""

import json
import sys
from pathlib import Path

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

import pytest
from click.testing import CliRunner

from app import __version__
from app.cli import cli, command_aliases
from app.config import DeskBounds, get_bounds, set_bounds
from app.errors import BoundExceededError, ConfigError, FitError, ParseError, VGAlgError
from app.utils.command_utils import exit_code_for, make_config, parse_schedule


@pytest.fixture(autouse=True)
def restore_bounds():
    saved = get_bounds()
    yield
    set_bounds(saved)


def test_help_without_command():
    runner = CliRunner()
    result = runner.invoke(cli, [])

    assert result.exit_code == 0
    assert "eigentable" in result.output


def test_version():
    runner = CliRunner()
    result = runner.invoke(cli, ["--version"])

    assert result.exit_code == 0
    assert __version__ in result.output


@pytest.mark.parametrize("alias", ["et", "di"])
def test_aliases(alias):
    """Short aliases dispatch to the full commands."""
    runner = CliRunner()
    result = runner.invoke(cli, [alias, "--n", "2"])

    assert result.exit_code == 0
    assert json.loads(result.output)["passed"]


def test_every_alias_resolves():
    for name, aliases in command_aliases.items():
        for alias in aliases:
            assert cli.get_command(None, alias) is cli.get_command(None, name)


def test_limit_alias():
    runner = CliRunner()
    result = runner.invoke(cli, ["lim", "eps", "--i", "1", "--m", "1", "--r", "2"])

    assert result.exit_code == 0
    assert "eps{1}" in result.output


def test_config_file_applies_bounds(tmp_path):
    """Bounds from --config reach the computations."""
    path = tmp_path / "bounds.json"
    path.write_text(json.dumps({"max_sym_n": 2}))
    runner = CliRunner()
    result = runner.invoke(cli, ["--config", str(path), "eigentable", "--n", "3"])

    assert result.exit_code == 2
    assert "max_sym_n" in result.output


def test_invalid_config_file(tmp_path):
    path = tmp_path / "bounds.json"
    path.write_text('{"max_sym_n": -')
    runner = CliRunner()
    result = runner.invoke(cli, ["--config", str(path), "eigentable", "--n", "3"])

    assert result.exit_code == 2
    assert "error:" in result.output


@pytest.mark.parametrize(
    "error, code",
    [
        (ConfigError("x"), 2),
        (ParseError("x"), 2),
        (BoundExceededError("x"), 2),
        (FitError("x"), 1),
        (VGAlgError("x"), 1),
    ],
)
def test_exit_codes(error, code):
    assert exit_code_for(error) == code


def test_tolerance_only_for_float_commands():
    """--tol is refused where nothing is computed in floating point."""
    with pytest.raises(ConfigError, match="--tol"):
        make_config("eigentable", {}, tol=0.1)
    assert make_config("limit pipeline", {}, tol=0.1).tol == 0.1
    assert make_config("limit eps", {"mode": "cauchyFloat"}, tol=0.1).echo() == {
        "mode": "cauchyFloat",
        "tol": 0.1,
    }


def test_parse_schedule():
    assert parse_schedule("8, 12,18") == [8, 12, 18]
    assert parse_schedule(None) is None
    with pytest.raises(ParseError):
        parse_schedule("8;12")
