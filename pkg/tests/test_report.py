"""Tests for run reports."""

import csv
import io
import json

from app.utils.report import Report, write_atomic


def make_report(**kwargs):
    return Report(
        command="eigentable",
        params={"n": 3},
        rows=[{"lambda": "[3]", "match": True}, {"lambda": "[2,1]", "match": True, "k": 2}],
        **kwargs,
    )


def test_csv_collects_every_column():
    """The header is the union of keys; cells with commas are quoted."""
    text = make_report().to_csv()
    rows = list(csv.DictReader(io.StringIO(text)))

    assert text.splitlines()[0] == "lambda,match,k"
    assert rows[0] == {"lambda": "[3]", "match": "True", "k": ""}
    assert rows[1] == {"lambda": "[2,1]", "match": "True", "k": "2"}


def test_csv_without_rows():
    assert Report(command="x").to_csv() == ""


def test_text_marks_failures():
    report = make_report(passed=False, counterexample={"lambda": "[2,1]"})
    text = report.to_text()

    assert text.startswith("eigentable: FAILED")
    assert "counterexample:" in text
    assert report.exit_code == 1


def test_canonical_json_ignores_timestamp():
    """Equal runs give byte-identical canonical JSON."""
    a = make_report(timestamp="2020-01-01T00:00:00+00:00")
    b = make_report(timestamp="2021-06-01T12:00:00+00:00")

    assert a.canonical_json() == b.canonical_json()
    assert "timestamp" not in json.loads(a.canonical_json())


def test_render_json():
    data = json.loads(make_report().render("json"))
    assert data["command"] == "eigentable"
    assert data["params"] == {"n": 3}


def test_write_atomic(tmp_path):
    target = tmp_path / "out" / "report.json"
    write_atomic(target, "first")
    write_atomic(target, "second")

    assert target.read_text() == "second"
    assert [p.name for p in target.parent.iterdir()] == ["report.json"]
