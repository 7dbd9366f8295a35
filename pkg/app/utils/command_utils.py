"""Shared plumbing for the command-line interface."""

from __future__ import annotations

import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import click
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from app.errors import (
    BoundExceededError,
    ConfigError,
    GroupTableError,
    ParseError,
    PartitionError,
    VGAlgError,
)
from app.groups import FiniteGroupTable, resolve_group
from app.partitions import Multipartition, Partition, parse_multipartition, parse_partition
from app.suites import SuiteResult
from app.utils.report import Format, Report, emit

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

# Global command name (default to 'vgalg')
_command_name = "vgalg"

# Commands whose results depend on a float tolerance
FLOAT_COMMANDS = {"limit compress", "limit pipeline"}


def get_command_name() -> str:
    """Get the current command name."""
    return _command_name


def set_command_name(name: str) -> None:
    """Set the command name for error messages."""
    global _command_name
    _command_name = name


class RunConfig(BaseModel):
    """Parameter echo of one run; embedded in its report."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: str
    params: dict[str, Any] = {}
    schedule: list[int] | None = None
    tol: float | None = None
    format: Format = "json"
    out: Path | None = None

    @field_validator("schedule")
    @classmethod
    def _increasing(cls, value: list[int] | None) -> list[int] | None:
        if value is not None:
            if not value or any(n < 1 for n in value):
                raise ValueError("schedule must be a nonempty list of positive sizes")
            if sorted(set(value)) != value:
                raise ValueError("schedule must be strictly increasing")
        return value

    @model_validator(mode="after")
    def _tolerance_only_for_float_modes(self) -> "RunConfig":
        if self.tol is None:
            return self
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.command not in FLOAT_COMMANDS and self.params.get("mode") != "cauchyFloat":
            raise ValueError(f"--tol has no meaning for {self.command}")
        return self

    def echo(self) -> dict[str, Any]:
        data = {k: v for k, v in self.params.items() if v is not None}
        if self.schedule is not None:
            data["schedule"] = self.schedule
        if self.tol is not None:
            data["tol"] = self.tol
        return data


def make_config(command: str, params: dict[str, Any], **kwargs: Any) -> RunConfig:
    """Validate a run configuration.

    Raises:
        ConfigError: If validation fails.
    """
    try:
        return RunConfig(command=command, params=params, **kwargs)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise ConfigError(f"{command}: {messages}") from None


def exit_code_for(error: VGAlgError) -> int:
    """2 for configuration and usage problems, 1 for failed computations."""
    if isinstance(error, (ConfigError, BoundExceededError, GroupTableError, PartitionError)):
        return 2
    return 1


def run(
    command: str,
    params: dict[str, Any],
    produce: Callable[[RunConfig], SuiteResult | Report],
    **kwargs: Any,
) -> None:
    """Validate, compute, emit the report, and exit with its status."""
    ctx = click.get_current_context()
    try:
        if isinstance(kwargs.get("schedule"), str):
            kwargs["schedule"] = parse_schedule(kwargs["schedule"])
        config = make_config(command, params, **kwargs)
        outcome = produce(config)
    except VGAlgError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(exit_code_for(e))
        return
    if isinstance(outcome, SuiteResult):
        report = Report(
            command=command,
            params=config.echo(),
            passed=outcome.passed,
            rows=outcome.rows,
            counterexample=outcome.counterexample,
            extra=outcome.extra,
        )
    else:
        report = outcome
    logger.info("%s %s", command, "passed" if report.passed else "failed")
    emit(report, config.format, config.out)
    ctx.exit(report.exit_code)


# -- option helpers ---------------------------------------------------------------


def output_options(f: F) -> F:
    f = click.option(
        "--out", type=click.Path(dir_okay=False), default=None, help="Write the report to this file"
    )(f)
    f = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv", "text"]),
        default="json",
        show_default=True,
        help="Report format",
    )(f)
    return f


def group_option(f: F) -> F:
    return click.option(
        "--group",
        "group_spec",
        default="trivial",
        show_default=True,
        help="Built-in group name or path to a group JSON file",
    )(f)


def parse_schedule(text: str | None) -> list[int] | None:
    """``"8,12,18"`` -> [8, 12, 18].

    Raises:
        ParseError: On anything but comma-separated integers.
    """
    if text is None:
        return None
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ParseError(f"cannot parse schedule {text!r}") from None


def parse_target(
    lam: str | None, mlam: str | None, group: FiniteGroupTable
) -> Partition | Multipartition:
    """The --lambda or --mlambda argument; multipartitions need a group.

    Raises:
        ConfigError: If neither or both are given.
    """
    if (lam is None) == (mlam is None):
        raise ConfigError("give exactly one of --lambda and --mlambda")
    if lam is not None:
        if not group.is_trivial:
            raise ConfigError(f"--lambda indexes trivial-group models; use --mlambda with {group.name}")
        return parse_partition(lam)
    return parse_multipartition(mlam, group)  # type: ignore[arg-type]


def load_group(spec: str) -> FiniteGroupTable:
    return resolve_group(spec)
