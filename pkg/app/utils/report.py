"""Run reports: JSON, CSV or text, written atomically."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Literal

import click
from pydantic import BaseModel, Field

from app import __version__

Format = Literal["json", "csv", "text"]


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class Report(BaseModel):
    """Everything a run produced, with the parameter echo that reproduces it."""

    command: str
    version: str = __version__
    params: dict[str, Any] = Field(default_factory=dict)
    passed: bool = True
    rows: list[dict[str, Any]] = Field(default_factory=list)
    counterexample: dict[str, Any] | None = None
    extra: dict[str, Any] = Field(default_factory=dict)
    timestamp: str = Field(default_factory=_now)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    def canonical_json(self) -> str:
        """JSON without the timestamp, keys sorted; equal runs give equal text."""
        data = self.model_dump(mode="json", exclude={"timestamp"})
        return json.dumps(data, sort_keys=True, indent=2)

    def to_csv(self) -> str:
        if not self.rows:
            return ""
        header: list[str] = []
        for row in self.rows:
            header.extend(k for k in row if k not in header)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command}: {'passed' if self.passed else 'FAILED'}"]
        for row in self.rows:
            lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
        for key, value in self.extra.items():
            lines.append(f"{key}: {value}")
        if self.counterexample is not None:
            lines.append(f"counterexample: {json.dumps(self.counterexample, default=str)}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: Format) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        return self.to_json() + "\n"


def write_atomic(path: str | Path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same directory."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(report: Report, fmt: Format = "json", out: str | Path | None = None) -> None:
    """Send the rendered report to ``out``, or to stdout without one."""
    text = report.render(fmt)
    if out is None:
        click.echo(text, nl=False)
    else:
        write_atomic(out, text)
