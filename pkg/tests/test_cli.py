import csv
import io
import json
import subprocess
import sys

import pytest

from qrspin.cli import main
from qrspin.report import Report


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_compute_examples(capsys):
    code, out = run(capsys, "compute", "--g", "0", "--q", "1", "--r", "1", "--mu", "2",
                    "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["items"][0]["actual"] == "1/2"
    code, out = run(capsys, "compute", "--g", "0", "--q", "1", "--r", "2", "--mu", "1,1",
                    "--format", "json")
    assert json.loads(out)["items"][0]["actual"] == "1"
    code, out = run(capsys, "compute", "--g", "0", "--q", "1", "--r", "2", "--mu", "2",
                    "--format", "json")
    data = json.loads(out)
    assert data["items"][0]["actual"] == "0" and data["params"]["reason"] == "b non-integral"


def test_invalid_input_exit_code(capsys):
    code, out = run(capsys, "compute", "--g", "0", "--mu", "0,1", "--format", "json")
    assert code == 2 and json.loads(out)["status"] == "invalid-input"
    code, _ = run(capsys, "check", "nonsense")
    assert code == 2
    code, _ = run(capsys, "check", "polynomiality", "--g", "1", "--n", "1", "--q", "2",
                  "--r", "2", "--residues", "0")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["check", "f02", "--q", "1", "--r", "2", "--max", "10"],
    ["check", "bergman", "--q", "2", "--r", "1", "--order", "8"],
    ["check", "f01", "--q", "2", "--r", "2", "--n", "3"],
    ["check", "residue", "--q", "1", "--r", "1", "--m-max", "2", "--max-u", "2"],
    ["check", "hurw-aop", "--q", "1", "--r", "2", "--max-size", "3", "--max-u", "3"],
    ["check", "polynomiality", "--g", "1", "--n", "1", "--q", "2", "--r", "1"],
])
def test_check_suites_pass(capsys, argv):
    code, out = run(capsys, *argv, "--threads", "1", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_tr_evidence_exit_zero(capsys):
    code, out = run(capsys, "check", "tr", "--g", "1", "--n", "1", "--q", "1", "--r", "2",
                    "--mu-max", "4", "--prec", "256", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "evidence"
    assert float(data["params"]["max_rel_error"]) < 1e-15


def test_table_matches_compute(capsys):
    code, out = run(capsys, "table", "--g", "0", "--q", "1", "--r", "2", "--mu-max", "3",
                    "--format", "csv", "--threads", "1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows
    profiles = [tuple(int(x) for x in row["key"].split(",")) for row in rows]
    assert profiles == sorted(profiles)
    for row in rows[:3]:
        _, single = run(capsys, "compute", "--g", "0", "--q", "1", "--r", "2",
                        "--mu", row["key"], "--format", "json")
        assert json.loads(single)["items"][0]["actual"] == row["actual"]


def test_json_round_trip_and_determinism(capsys):
    argv = ["check", "f02", "--q", "2", "--r", "2", "--max", "8", "--format", "json",
            "--no-timing", "--threads", "1"]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second
    assert Report.from_json(first).to_json() + "\n" == first
    _, tr_out = run(capsys, "check", "tr", "--g", "0", "--n", "3", "--q", "1", "--r", "2",
                    "--mu-max", "2", "--format", "json", "--no-timing")
    assert Report.from_json(tr_out).to_json() + "\n" == tr_out


def test_csv_header(capsys):
    _, out = run(capsys, "check", "f01", "--q", "1", "--r", "1", "--n", "2", "--format", "csv")
    assert out.splitlines()[0] == "key,expected,actual,status"


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "qrspin", "compute", "--g", "0", "--mu", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "1/2" in out.stdout
