"""Command-line interface: flags, output schemas, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from polyrank.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# ------------------------------------------------------------ subcommands

def test_rank_command(capsys):
    doc = run_json(capsys, "rank", "--poly", "x1*x3 + x2*x3^2", "--vars", "x1,x2,x3",
                   "--method", "exact")
    assert doc["overall"] == 2
    assert doc["spec_version"] == "1"
    assert doc["per_variable"] == {"x1": 2, "x2": 2, "x3": 2}


def test_special_command(capsys):
    doc = run_json(capsys, "special", "--poly", "x1*x2*x3", "--vars", "x1,x2,x3")
    assert doc["verdict"] == "special"


def test_moment_points_command(capsys):
    doc = run_json(capsys, "moment", "--d", "2", "--points", "0,1,2,3")
    assert doc["count"] == 2
    assert doc["theoretical_exponent"] == "3/2"


def test_moment_summary_command(capsys):
    doc = run_json(capsys, "moment", "--d", "3", "--summary")
    assert doc["rank_ok"] and doc["factorization_ok"]


def test_reduce_command(capsys):
    doc = run_json(capsys, "reduce", "--poly", "x1*x2 + x3 + x4", "--vars", "x1,x2,x3,x4",
                   "--pivot", "x1", "--seed", "3")
    assert doc["certified_rank"] == 2
    assert doc["kept"] == ["x2", "x3"]
    assert set(doc["fixed"]) == {"x4"}


def test_reduce_with_grid_sets(capsys):
    doc = run_json(capsys, "reduce", "--poly", "x1*x2 + x3 + x4", "--vars", "x1,x2,x3,x4",
                   "--pivot", "x1", "--sets", "interval:6")
    assert doc["certified_rank"] == 2
    assert 1 <= int(doc["fixed"]["x4"]) <= 6


def test_expand_command_json(capsys):
    doc = run_json(capsys, "expand", "--poly", "x1+x2+x3", "--vars", "x1,x2,x3",
                   "--n", "10,20,40", "--sets", "interval", "--workers", "1")
    assert doc["rank"] == 1
    assert doc["generator"] == "interval"


def test_expand_command_csv(capsys):
    code, out, err = run_cli(capsys, "expand", "--poly", "x1+x2+x3", "--vars", "x1,x2,x3",
                             "--n", "4,8,16", "--sets", "interval", "--output", "csv",
                             "--workers", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,image_size,elapsed_ms"
    assert [line.split(",")[:2] for line in lines[1:]] == [["4", "10"], ["8", "22"], ["16", "46"]]


def test_expand_degenerate_demo(capsys):
    doc = run_json(capsys, "expand", "--degenerate", "2", "--n", "5")
    assert doc["equal"] is True
    assert doc["sumset_size"] == 9


def test_incidence_command(capsys):
    doc = run_json(capsys, "incidence", "--poly", "x1*x2 + x3", "--vars", "x1,x2,x3",
                   "--sets", "1,2,3|1,2,3|1,2,3")
    assert doc["S"] == 27
    assert doc["S0"] == 0
    assert doc["curves"] == 9
    assert doc["incidences"] == 27
    assert doc["checks"]["all_ok"] is True


# ------------------------------------------------------------ error handling

def test_parse_error_is_computational(capsys):
    code, out, err = run_cli(capsys, "rank", "--poly", "x1 +", "--vars", "x1,x2")
    assert code == 1
    assert "error" in err
    assert out == ""


def test_usage_error_is_2(capsys):
    code, _, _ = run_cli(capsys, "rank", "--poly", "x1")  # missing --vars
    assert code == 2
    code, _, _ = run_cli(capsys, "definitely-not-a-command")
    assert code == 2


def test_precondition_violation_is_1(capsys):
    code, out, err = run_cli(capsys, "reduce", "--poly", "x1*x2 + x3", "--vars", "x1,x2,x3",
                             "--pivot", "x1")
    assert code == 1
    assert "no reduction" in err


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("POLYRANK_BUDGET", "10")
    code, out, err = run_cli(capsys, "expand", "--poly", "x1+x2+x3", "--vars", "x1,x2,x3",
                             "--n", "4,8,16", "--sets", "interval", "--workers", "1")
    assert code == 1
    assert "budget" in err.lower()
    monkeypatch.setenv("POLYRANK_BUDGET", "notanumber")
    code, _, err = run_cli(capsys, "expand", "--poly", "x1+x2+x3", "--vars", "x1,x2,x3",
                           "--n", "4,8,16", "--sets", "interval", "--workers", "1")
    assert code == 1


def test_explicit_budget_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("POLYRANK_BUDGET", "10")
    doc = run_json(capsys, "expand", "--poly", "x1+x2+x3", "--vars", "x1,x2,x3",
                   "--n", "4,8,16", "--sets", "interval", "--budget", "100000",
                   "--workers", "1")
    assert doc["rank"] == 1


# ------------------------------------------------------------ determinism

DETERMINISTIC_COMMANDS = [
    ("rank", "--poly", "x1*x3 + x2*x3^2", "--vars", "x1,x2,x3"),
    ("rank", "--poly", "x1*x3 + x2*x3^2", "--vars", "x1,x2,x3", "--method", "exact"),
    ("special", "--poly", "(x1 + x2^2 + x3^3)^2", "--vars", "x1,x2,x3"),
    ("reduce", "--poly", "x1*x2 + x3 + x4", "--vars", "x1,x2,x3,x4", "--pivot", "x1",
     "--seed", "11"),
    ("expand", "--poly", "x1*x2 + x3", "--vars", "x1,x2,x3", "--n", "4,6,8",
     "--sets", "random_int", "--workers", "1"),
    ("incidence", "--poly", "x1*x2 + x3", "--vars", "x1,x2,x3", "--sets", "interval:3"),
    ("moment", "--d", "2", "--points", "0,1,2,3"),
    ("moment", "--d", "2", "--n", "6,9,12", "--sets", "random_int", "--seed", "4"),
]


@pytest.mark.parametrize("argv", DETERMINISTIC_COMMANDS, ids=lambda a: a[0])
def test_repeated_runs_identical(capsys, argv):
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    json.loads(out1)  # every report is one valid JSON document


def test_module_entry_point_matches_programmatic(capsys):
    argv = ["rank", "--poly", "x1*x2 + x3", "--vars", "x1,x2,x3", "--seed", "5"]
    _, programmatic, _ = run_cli(capsys, *argv)
    proc = subprocess.run(
        [sys.executable, "-m", "polyrank", *argv],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == programmatic
