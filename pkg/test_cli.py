"""
Tests for the command line

This module tests:
1. Exit statuses for pass, fail, unknown and error
2. Text and JSON reports
3. Usage errors
4. Byte-identical reports for repeated seeded runs
5. The exit-code contract over every command
"""

import json
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

import main

ROOT = Path(__file__).parent
PLANAR_FILE = str(ROOT / "data" / "assemblies" / "planar.yaml")
TRIVIAL = str(ROOT / "data" / "magmas" / "trivial.yaml")
NONMODEST = str(ROOT / "data" / "magmas" / "nonmodest.yaml")


@pytest.fixture(autouse=True)
def production(monkeypatch):
    monkeypatch.delenv("WORKBENCH_ENV", raising=False)
    monkeypatch.delenv("WORKBENCH_SEED", raising=False)


def run(capsys, *argv):
    status = main.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


# ----------------------------------------------------------------------------
# Terms
# ----------------------------------------------------------------------------

def test_parse_valid_term(capsys):
    status, out, _ = run(capsys, "parse", r"\x. x")
    assert status == 0
    assert "parse: PASS - valid in planar" in out
    assert "seed=0" in out


def test_parse_discipline_violation(capsys):
    status, out, _ = run(capsys, "parse", r"\x y. y x")
    assert status == 1
    assert "violation" in out
    assert run(capsys, "parse", r"\x y. y x", "--discipline", "linear")[0] == 0


def test_syntax_error_is_an_error_report(capsys):
    status, out, _ = run(capsys, "parse", "(")
    assert status == 3
    assert "parse: ERROR" in out


def test_fuel_exhaustion_is_unknown(capsys):
    status, out, _ = run(capsys, "normalize", r"(\x. x x) (\x. x x)",
                         "--discipline", "ordinary", "--fuel", "50")
    assert status == 2
    assert "fuel=50" in out


def test_eq_json_report(capsys):
    status, out, _ = run(capsys, "eq", r"\x y. x y", r"\x. x", "--eta", "--json")
    assert status == 0
    report = json.loads(out)
    assert report["command"] == "eq"
    assert report["verdict"] == "pass"
    assert report["verdicts"] == [{"check": "eq", "verdict": "Equal"}]
    assert "wall_time_ms" not in report

    assert run(capsys, "eq", r"\x y. x y", r"\x. x")[0] == 1


def test_same_inputs_same_digest(capsys):
    first = json.loads(run(capsys, "parse", r"\x. x", "--json")[1])
    second = json.loads(run(capsys, "parse", r"\x. x", "--json", "--timing")[1])
    assert first["inputs_digest"] == second["inputs_digest"]
    assert "wall_time_ms" in second


def test_same_seed_same_bytes(capsys):
    argv = ("normalize", r"(\x. x) ((\y. y) (\z. z))", "--strategy", "random", "--seed", "7", "--json")
    first, second = run(capsys, *argv)[1], run(capsys, *argv)[1]
    assert first == second

    other = json.loads(run(capsys, *argv[:-2], "--seed", "8", "--json")[1])
    assert other["data"]["normal_form"] == json.loads(first)["data"]["normal_form"]
    assert other["seed"] == 8


def test_sampled_axioms_repeat_exactly(capsys):
    argv = ("axioms", "I", "B", "--model", "magma", "--magma", TRIVIAL,
            "--mode", "sampled", "--samples", "20", "--seed", "3")
    first, second = run(capsys, *argv), run(capsys, *argv)
    assert first[0] == 0
    assert first[1] == second[1]

    def outcomes(seed):
        report = json.loads(run(capsys, *argv[:-1], seed, "--json")[1])
        return [(item["axiom"], item["verdict"]) for item in report["verdicts"]]

    assert outcomes("3") == outcomes("4")


def test_seed_only_changes_the_footer(capsys):
    one = run(capsys, "parse", r"\x. x", "--seed", "1")[1].splitlines()
    two = run(capsys, "parse", r"\x. x", "--seed", "2")[1].splitlines()
    assert one[:-1] == two[:-1]
    assert one[-1].startswith("seed=1") and two[-1].startswith("seed=2")


# ----------------------------------------------------------------------------
# Other plugins
# ----------------------------------------------------------------------------

def test_abstract_command(capsys):
    status, out, _ = run(capsys, "abstract", "x y", "x", "y", "--basis", "bci")
    assert status == 0
    assert "abstract: PASS" in out


def test_abstract_unknown_variable(capsys):
    assert run(capsys, "abstract", "x y", "z", "--basis", "bci")[0] == 3


def test_tree_eval(capsys):
    status, out, _ = run(capsys, "tree-eval", "I {0}", "--equals", "{0}", "--bound", "4")
    assert status == 0
    assert "tree_bound=4" in out
    assert run(capsys, "tree-eval", "I {0}", "--member", "1", "--bound", "4")[0] == 1


def test_te_identity_contains_non_unit_trees(capsys):
    status, _, _ = run(capsys, "tree-eval", "I", "--variant", "te", "--member", "1 <- 1", "--bound", "4")
    assert status == 0


def test_check_map(capsys):
    assert run(capsys, "check-map", PLANAR_FILE, "collapse")[0] == 0


def test_separation_suite(capsys):
    status, out, _ = run(capsys, "separation-suite")
    assert status == 0
    assert "8/8 candidates refuted" in out


# ----------------------------------------------------------------------------
# Usage errors
# ----------------------------------------------------------------------------

def test_unknown_command(capsys):
    status, _, err = run(capsys, "frobnicate")
    assert status == 3
    assert "usage error" in err


def test_bad_flag_value(capsys):
    status, _, err = run(capsys, "parse", r"\x. x", "--discipline", "affine")
    assert status == 3
    assert "usage error" in err


# ----------------------------------------------------------------------------
# Exit codes over the command matrix
# ----------------------------------------------------------------------------

OMEGA = r"(\x. x x) (\x. x x)"

COMMAND_MATRIX = [
    # terms
    (("parse", r"\x y. x y"), 0),
    (("parse", r"\x y. y x"), 1),
    (("parse", "("), 3),
    (("normalize", r"(\x. x) (\y. y)"), 0),
    (("normalize", OMEGA, "--discipline", "ordinary", "--fuel", "10"), 2),
    (("eq", r"(\x y z. x (y z)) (\u. u) (\v. v)", r"\u. u"), 0),
    (("eq", r"\x y. x y", r"\x. x"), 1),
    # translations
    (("abstract", "x y", "x", "y", "--basis", "bci"), 0),
    (("abstract", "x y", "z", "--basis", "bci"), 3),
    (("compile-tensor", r"\x y. x * y"), 0),
    (("compile-tensor", "x"), 3),
    (("cps", r"\x. x"), 0),
    (("cps", r"\<x. x"), 3),
    (("ceq", r"(\x. x) (y y)", "y y"), 0),
    (("ceq", r"\x y. x", r"\x y. y"), 1),
    (("left-inverse", r"\x y z. x (y z)"), 0),
    (("left-inverse", r"\x y. y x"), 3),
    # classification
    (("axioms", "I", "B", "--model", "magma", "--magma", TRIVIAL), 0),
    (("axioms", "I", "--model", "magma", "--magma", NONMODEST), 3),
    (("axioms", "Nope"), 3),
    (("classify", "--model", "magma", "--magma", TRIVIAL), 0),
    # tree models
    (("tree-eval", "I {0}", "--equals", "{0}", "--bound", "4"), 0),
    (("tree-eval", "I {0}", "--member", "1", "--bound", "4"), 1),
    (("tree-eval", "I", "--variant", "te", "--member", "1 <- 1", "--bound", "4"), 0),
    (("te-adjoint", "--group", "cyclic"), 3),
    # assemblies and separation
    (("check-map", PLANAR_FILE, "collapse"), 0),
    (("check-map", PLANAR_FILE, "nothing"), 3),
    (("assembly-suite", PLANAR_FILE), 0),
    (("separation-suite",), 0),
    # usage
    (("frobnicate",), 3),
]


def test_matrix_covers_every_command():
    app = main.Workbench()
    assert app.initialize()
    verbs = {argv[0] for argv, _ in COMMAND_MATRIX}
    assert set(app.dispatcher.get_available_commands()) <= verbs
    app.shutdown()


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.sampled_from(COMMAND_MATRIX))
def test_exit_code_contract(capsys, row):
    argv, expected = row
    status, out, _ = run(capsys, *argv)
    assert status == expected, out
