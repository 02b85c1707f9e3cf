import csv
import io
import json
import subprocess
import sys

import pytest

from sigmix import data_path
from sigmix.cli import main


def path(name):
    return str(data_path(name))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_optimize_json(capsys):
    code, out, _ = run(capsys, "optimize", path("basic_case.json"),
                       "--solver", "exact", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["quality"] == 32 and doc["counts"] == [1, 0, 3]
    assert doc["status"] == "proven-optimal"
    assert "wall_time" not in doc


def test_optimize_table_greedy(capsys):
    code, out, _ = run(capsys, "optimize", path("basic_case.json"),
                       "--solver", "greedy", "--format", "table")
    assert code == 0
    fields = dict(line.split(None, 1) for line in out.splitlines())
    assert fields["quality"] == "32" and fields["status"] == "heuristic"


def test_optimize_csv_and_timing(capsys):
    code, out, _ = run(capsys, "optimize", path("four_types.json"),
                       "--format", "csv", "--emit-timing")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 2
    assert len(rows[0]) == len(rows[1])
    assert rows[0][-1] == "wall_time_s"
    assert float(rows[1][rows[0].index("quality")]) == 312


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, "sweep", path("energy_sweep_base.json"),
                       "--mode", "energy-linear", "--factors", "5,10,20,30,40",
                       "--solver", "exact", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert [r["quality"] for r in rows] == ["120", "100", "50", "33", "25"]


def test_sweep_json_time(capsys):
    code, out, _ = run(capsys, "sweep", path("time_sweep_base.json"),
                       "--mode", "time-inverse", "--factors", "25,50,100,150,200",
                       "--format", "json")
    assert [c["quality"] for c in json.loads(out)["cases"]] == [32, 30, 20, 10, 10]


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", path("basic_case.json"), path("four_types.json"),
                       "--solvers", "exact,greedy", "--trials", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 12
    assert {r["solver"] for r in rows} == {"exact", "greedy"}


def test_bench_table_default_trials(capsys):
    code, out, _ = run(capsys, "bench", path("basic_case.json"), "--solvers", "greedy")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 1 + 20 + 1 and lines[-1].split()[0] == "Avg"
    assert lines[0].split() == ["Trial", "basic_case", "greedy"]


def test_plan(capsys):
    code, out, _ = run(capsys, "plan", path("energy_epochs.json"), "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert [e["solution"]["quality"] for e in doc] == [120, 100, 50, 33, 25]
    code, out, _ = run(capsys, "plan", path("energy_epochs.json"))
    assert code == 0 and "[E=5Q]" in out


def test_validation_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"types": [{"id": 1, "quality": 1, "energy": 0, "time": 1}],'
                   ' "energy_budget": 1, "time_budget": 1}')
    code, out, err = run(capsys, "optimize", str(bad))
    assert code == 1 and out == "" and "energy" in err
    code, _, err = run(capsys, "optimize", str(tmp_path / "missing.json"))
    assert code == 1


def test_solver_error_exit_2(capsys):
    code, out, err = run(capsys, "optimize", path("seven_types.json"), "--solver", "oracle")
    assert code == 2 and out == "" and "limit" in err
    code, _, _ = run(capsys, "plan", path("energy_epochs.json"), "--solver", "oracle")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["frobnicate"], ["optimize", "x.json", "--solver", "simplex"],
    ["optimize", "x.json", "--colour"], [], ["bench", "x.json", "--trials", "0"],
    ["sweep", "x.json", "--mode", "energy-linear", "--factors", "a,b"],
])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1
    assert "usage" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sigmix", "optimize", path("basic_case.json"),
         "--format", "json"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["quality"] == 32


def test_json_output_round_trips(capsys):
    _, out, _ = run(capsys, "optimize", path("seven_types.json"), "--format", "json")
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out
