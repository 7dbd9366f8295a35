"""Tests for desk-scale bounds."""

import json

import pytest

from app.config import CONFIG_ENV, DeskBounds, load_bounds
from app.errors import BoundExceededError, ConfigError


def test_defaults(monkeypatch, tmp_path):
    """Without a file or environment variable the defaults apply."""
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    monkeypatch.chdir(tmp_path)
    assert load_bounds() == DeskBounds()


def test_load_from_environment(monkeypatch, tmp_path):
    path = tmp_path / "bounds.json"
    path.write_text(json.dumps({"max_sym_n": 5}))
    monkeypatch.setenv(CONFIG_ENV, str(path))

    assert load_bounds().max_sym_n == 5


def test_load_from_working_directory(monkeypatch, tmp_path):
    monkeypatch.delenv(CONFIG_ENV, raising=False)
    monkeypatch.chdir(tmp_path)
    (tmp_path / ".vgalg.json").write_text(json.dumps({"max_rep_dim": 100}))

    assert load_bounds().max_rep_dim == 100


@pytest.mark.parametrize(
    "content",
    ['{"max_sym_n": "many"}', '{"unknown_bound": 3}', "not json"],
)
def test_invalid_config(tmp_path, content):
    path = tmp_path / "bounds.json"
    path.write_text(content)
    with pytest.raises(ConfigError):
        load_bounds(path)


def test_missing_config(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        load_bounds(tmp_path / "absent.json")


def test_check():
    bounds = DeskBounds(max_sym_n=4)
    bounds.check("max_sym_n", 4)
    with pytest.raises(BoundExceededError, match="max_sym_n=4"):
        bounds.check("max_sym_n", 5)
