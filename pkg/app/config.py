"""Desk-scale bounds and their loading."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from pydantic import BaseModel, ConfigDict, ValidationError

from app.errors import BoundExceededError, ConfigError

logger = logging.getLogger(__name__)

CONFIG_ENV = "VGALG_CONFIG"
CONFIG_FILE = ".vgalg.json"


class DeskBounds(BaseModel):
    """Upper limits for exhaustive enumeration and exact linear algebra."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    max_sym_n: int = 8
    max_gamma_n: int = 8
    max_group_elements: int = 10**6
    max_centralizer_n: int = 5
    max_rep_dim: int = 4096
    max_character_n: int = 60
    max_psharp_degree: int = 8

    def check(self, name: str, value: int) -> None:
        """Raise BoundExceededError when ``value`` exceeds the bound ``name``.

        Args:
            name: Field name of the bound, e.g. ``max_sym_n``.
            value: The requested size.

        Raises:
            BoundExceededError: If the value is larger than the bound.
        """
        limit = getattr(self, name)
        if value > limit:
            raise BoundExceededError(f"{name}={limit} exceeded (requested {value})")


def load_bounds(path: str | Path | None = None) -> DeskBounds:
    """Load bounds from ``path``, the environment, or the working directory.

    Args:
        path: Explicit JSON file. If None, ``$VGALG_CONFIG`` and then
            ``./.vgalg.json`` are tried before falling back to defaults.

    Returns:
        The validated bounds.

    Raises:
        ConfigError: If the file cannot be read or fails validation.
    """
    if path is None:
        env = os.environ.get(CONFIG_ENV)
        if env:
            path = env
        elif Path(CONFIG_FILE).exists():
            path = CONFIG_FILE
    if path is None:
        return DeskBounds()

    try:
        with open(path) as f:
            data = json.load(f)
        loaded = DeskBounds.model_validate(data)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    except ValidationError as e:
        raise ConfigError(f"invalid config {path}: {e}") from e
    logger.debug("loaded bounds from %s", path)
    return loaded


bounds = DeskBounds()


def set_bounds(new_bounds: DeskBounds) -> None:
    """Replace the process-wide bounds."""
    global bounds
    bounds = new_bounds


def get_bounds() -> DeskBounds:
    """Get the process-wide bounds."""
    return bounds
