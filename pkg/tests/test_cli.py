"""Command-line interface."""

import json
import subprocess
import sys

import pytest

from braidcoh.cli import main, parse_coeff


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_examples(capsys):
    assert run(capsys, "compute", "b3", "2", "8", "int")[:2] == (0, "Z + Z/8\n")
    assert run(capsys, "compute", "sl2z", "0", "0", "int")[1] == "Z\n"
    assert run(capsys, "compute", "z4", "2", "8")[1] == "Z/2 + Z/2 + Z/4\n"
    assert run(capsys, "compute", "sl2z", "2", "8", "mod:2")[1] == "F_2^3\n"


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "compute", "--group", "b3", "--coh-degree", "2", "--degree", "8",
                       "--json")
    assert code == 0
    assert json.loads(out) == {"group": "b3", "i": 2, "n": 8, "free_rank": 1, "torsion": ["8"]}
    code, out, _ = run(capsys, "compute", "b3", "2", "12", "--json")
    assert json.loads(out)["torsion"] == ["4", "5", "9"]


def test_compute_b3_above_dimension_two(capsys):
    code, out, err = run(capsys, "compute", "b3", "3", "8")
    assert code == 0 and out == "0\n" and "dimension 2" in err


@pytest.mark.parametrize("argv", [
    ["compute", "b3", "2", "7"],
    ["compute", "z5", "1", "4"],
    ["compute", "b3", "2", "8", "mod:4"],
    ["compute", "b3", "x", "8"],
    ["compute", "b3"],
    ["verify", "nosuch"],
    ["verify", "dickson", "--jobs", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_coeff():
    assert parse_coeff("int") == 0
    assert parse_coeff("mod:3") == 3


def test_series_output(capsys):
    code, out, _ = run(capsys, "series", "z2-even", "8")
    assert code == 0 and out == "0\t1\n4\t3\n8\t5\n"
    code, out, _ = run(capsys, "series", "b3-free", "28")
    assert out.splitlines()[-3:] == ["20\t3", "24\t1", "28\t3"]
    code, out, _ = run(capsys, "series", "b3-free", "--max-degree", "8", "--json")
    assert json.loads(out) == {"series": "b3-free", "coefficients": [[4, 1], [8, 1]]}


def test_series_unknown_name(capsys):
    code, _, err = run(capsys, "series", "bogus")
    assert code == 2 and "b3-free" in err


def test_verify_pass_and_report_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "cyclic-tables", "--max-degree", "12",
                       "--output", str(path))
    assert code == 0 and "0 failed" in out
    report = json.loads(path.read_text())
    assert set(report) == {"suite", "cases", "passed", "failed"}
    assert report["failed"] == 0 and report["passed"] == len(report["cases"])
    assert set(report["cases"][0]) == {"group", "i", "n", "coeff", "expected", "computed", "status"}


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "b3-h2", "--max-degree", "10")
    assert code == 1 and "FAIL b3 i=2 n=2" in out


def test_verify_independent_of_jobs(capsys):
    _, serial, _ = run(capsys, "verify", "sl2z-h1", "--max-degree", "24", "--json")
    _, parallel, _ = run(capsys, "verify", "sl2z-h1", "--max-degree", "24", "--json", "--jobs", "3")
    assert json.loads(serial)["cases"] == json.loads(parallel)["cases"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "braidcoh", "compute", "sl2z", "1", "4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "Z + Z/2\n"
