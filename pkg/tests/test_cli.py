"""CLI behaviour and golden outputs.

Regenerate goldens with ``WALKSYM_UPDATE_GOLDEN=1 pytest tests/test_cli.py``
and review the diff before committing.
"""
import csv
import io
import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

from walksym.cli import main
from walksym.graph import parse_graph6

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"
UPDATE = os.environ.get("WALKSYM_UPDATE_GOLDEN") == "1"

SMALL = str(DATA / "small.g6")
MIXED = str(DATA / "mixed.g6")

CASES = {
    "analyze_k3": ["analyze", "Bw"],
    "analyze_k3_json": ["analyze", "Bw", "--json"],
    "analyze_p3_tmax": ["analyze", "Bg", "--tmax", "4"],
    "analyze_file": ["analyze", SMALL],
    "gen_cycle4": ["gen", "cycle", "4"],
    "gen_petersen": ["gen", "petersen"],
    "gen_k23": ["gen", "complete_bipartite", "2", "3"],
    "enumerate_3": ["enumerate", "3"],
    "enumerate_5": ["enumerate", "5"],
    "scan_small": ["scan", SMALL, "--filter", "reversible ∧ ¬regular", "--filter", "walk_regular", "--jobs", "2"],
    "scan_mixed": ["scan", MIXED, "--filter", "regular"],
    "spectrum_small": ["spectrum", SMALL],
    "simulate_k3": ["simulate", "Bw", "--vertex", "0", "--steps", "2", "--trials", "100000", "--seed", "42"],
    "simulate_p3_json": ["simulate", "Bg", "--vertex", "1", "--steps", "2", "--trials", "1000", "--seed", "5", "--json"],
    "hitting_p3": ["hitting", "Bg"],
    "hitting_star_json": ["hitting", "Bo", "--json"],
    "resistance_c4": ["resistance", "Cl"],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, err = run(CASES[name])
    assert code == 0, err
    path = GOLDEN / f"{name}.txt"
    if UPDATE:
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")


@pytest.mark.parametrize("name", sorted(CASES))
def test_deterministic(name):
    assert run(CASES[name]) == run(CASES[name])


def test_analyze_k3_reports_r_pi():
    _, out, _ = run(["analyze", "Bw", "--json"])
    d = json.loads(out)
    assert d["reversible"] is True and d["r_pi"] == "4/9"


def test_gen_cycle():
    assert run(["gen", "cycle", "4"])[1] == "Cl\n"


def test_enumerate_3():
    lines = run(["enumerate", "3"])[1].split()
    assert len(lines) == 2
    assert sorted(parse_graph6(s).m for s in lines) == [2, 3]


def test_json_rationals_round_trip():
    _, out, _ = run(["analyze", SMALL, "--json"])
    for line in out.splitlines():
        d = json.loads(line)
        for q in d["r_d"]:
            assert str(Fraction(q)) == q
        if d["r_pi"] is not None:
            assert str(Fraction(d["r_pi"])) == d["r_pi"]


def test_scan_out_file(tmp_path):
    target = tmp_path / "summary.json"
    code, out, _ = run(["scan", SMALL, "--filter", "reversible", "--out", str(target)])
    assert code == 0 and out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["total"] == 12


def test_scan_jobs_identical(tmp_path):
    a = run(["scan", SMALL, "--filter", "regular", "--jobs", "1"])[1]
    b = run(["scan", SMALL, "--filter", "regular", "--jobs", "8"])[1]
    assert a == b


def test_spectrum_csv(tmp_path):
    target = tmp_path / "spectrum.csv"
    assert run(["spectrum", SMALL, "--csv", str(target)])[0] == 0
    rows = list(csv.DictReader(target.open(newline="")))
    assert rows[0].keys() == {"value_num", "value_den", "witness_graph6"}
    values = [Fraction(int(r["value_num"]), int(r["value_den"])) for r in rows]
    assert values == sorted(values)


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["gen"], ["analyze"], ["simulate", "Bw", "--vertex", "0"], ["enumerate", "x"],
     ["scan", SMALL, "--jobs", "0"]],
)
def test_usage_errors_exit_1(argv):
    code, out, err = run(argv)
    assert code == 1
    assert "usage" in err and "subcommands:" in err


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["analyze", "B!"], "body byte"),
        (["analyze", str(DATA / "bad.g6")], "line 2"),
        (["scan", str(DATA / "bad.g6")], "line 2"),
        (["enumerate", "8"], "n <= 7"),
        (["gen", "cycle", "2"], "n >= 3"),
        (["analyze", "C@"], "connected"),
        (["hitting", "@"], "two vertices"),
        (["spectrum", str(DATA / "missing.g6")], "missing.g6"),
        (["simulate", "Bw", "--vertex", "9", "--steps", "2", "--trials", "10", "--seed", "1"], "out of range"),
    ],
)
def test_data_errors_exit_2(argv, fragment):
    code, out, err = run(argv)
    assert code == 2
    assert fragment in err
