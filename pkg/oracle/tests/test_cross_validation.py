"""Acceptance criterion 8: the production engine agrees with the golden
fixtures through its public CLI surface."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from zrc_oracle.generate import default_points_spec, generate, render

FIXTURE_REL_TOL = 1e-12
ZERO_ABS_TOL = 1e-9


@pytest.fixture(scope="session")
def fixture_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("fixtures") / "golden.json"
    path.write_text(render(generate(default_points_spec())), encoding="utf-8")
    return path


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "zrc.cli", *argv],
        capture_output=True,
        text=True,
    )


def test_criterion_8_fixture_cross_validation(fixture_file):
    proc = run_cli("verdict", "--fixtures", str(fixture_file), "--format", "json")
    assert proc.returncode == 0, proc.stderr
    payload = json.loads(proc.stdout)
    fx = payload["fixtures"]
    ok = (
        fx is not None
        and fx["passed"]
        and fx["checked"] >= 25
        and fx["max_rel"] <= FIXTURE_REL_TOL
        and not fx["failures"]
    )
    status = "PASS" if ok else "FAIL"
    print(
        f"[{status}] criterion 8: engine matches {fx['checked']} golden fixtures, "
        f"max rel diff {fx['max_rel']:.3e} (zero point checked at {ZERO_ABS_TOL:g} abs)"
    )
    assert ok, fx


def test_missing_file_degrades_gracefully(tmp_path):
    proc = run_cli("verdict", "EQ610", "--fixtures", str(tmp_path / "absent.json"))
    assert proc.returncode == 0
    assert "comparison skipped" in proc.stdout


def test_committed_default_fixture_is_current(fixture_file):
    committed = Path(__file__).resolve().parents[1] / "fixtures" / "default_fixtures.json"
    assert committed.exists()
    assert committed.read_text(encoding="utf-8") == fixture_file.read_text(
        encoding="utf-8"
    )
