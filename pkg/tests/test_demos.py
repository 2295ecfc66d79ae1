"""The narrative scripts in demos/ run to completion."""

import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).resolve().parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=[p.name for p in DEMOS])
def test_demo_runs(script):
    subprocess.run([sys.executable, str(script)], check=True, capture_output=True, timeout=120)
