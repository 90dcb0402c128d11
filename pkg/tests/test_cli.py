import json
import subprocess
import sys
from pathlib import Path

import pytest

from taftgwa.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def d(name):
    return str(DATA / name)


PLANE = ["--algebra", d("plane_algebra.json"), "--taft", d("taft3.json")]
SWEEDLER = ["--algebra", d("sweedler_algebra.json"), "--taft", d("taft2.json")]

# golden name -> argv
GOLDENS = {
    "eval": ["eval", "--algebra", d("plane_algebra.json"), "t^2*u + u*t^2 + v*u"],
    "verify_plane": ["verify", *PLANE, "--spec", d("plane_spec.json")],
    "verify_gamma_one": ["verify", *PLANE, "--spec", d("gamma_one_spec.json")],
    "classify_two_class": ["classify", "--algebra", d("two_class_algebra.json"), "--taft", d("taft3.json")],
    "enumerate_plane": ["enumerate", *PLANE, "--dmax", "4", "--check"],
    "thicken_plane": ["thicken", "--algebra", d("plane_algebra.json"), "--gamma", "z[3]", "--mu", "1",
                      "--n", "3", "--dmax", "4", "--check"],
    "ktact_plane": ["ktact", "--taft", d("taft3.json"), "--gamma", "z[3]", "--dmax", "6"],
    "invariants_plane": ["invariants", *PLANE, "--spec", d("plane_spec.json")],
    "invariants_sweedler": ["invariants", *SWEEDLER, "--spec", d("sweedler_spec.json")],
    "oracle_plane": ["oracle", "--algebra", d("plane_algebra.json"), "--count", "200", "--seed", "7"],
}

STATUS = {name: 0 for name in GOLDENS}
STATUS["verify_gamma_one"] = 1


def run(argv, capsys):
    status = main(argv)
    out = capsys.readouterr()
    return status, out.out, out.err


@pytest.mark.parametrize("name", sorted(GOLDENS))
def test_golden(name, capsys):
    status, out, _ = run(GOLDENS[name], capsys)
    assert status == STATUS[name]
    # paths are not part of any document, so goldens are location independent
    assert out == (GOLDEN / f"{name}.json").read_text()


@pytest.mark.parametrize("name", sorted(GOLDENS))
def test_output_is_deterministic(name, capsys):
    first = run(GOLDENS[name], capsys)[1]
    second = run(GOLDENS[name], capsys)[1]
    assert first == second


def test_every_document_is_versioned(capsys):
    for argv in GOLDENS.values():
        doc = json.loads(run(argv, capsys)[1])
        assert doc["schema_version"] == 1 and doc["command"] == argv[0]


def test_verify_plane_all_pass(capsys):
    status, out, _ = run(GOLDENS["verify_plane"], capsys)
    doc = json.loads(out)
    assert status == 0
    assert all(c["passed"] for c in doc["report"]["checks"])


def test_verify_gamma_one_names_failure(capsys):
    status, out, _ = run(GOLDENS["verify_gamma_one"], capsys)
    doc = json.loads(out)
    failed = {c["name"] for c in doc["report"]["checks"] if not c["passed"]}
    assert status == 1 and "skew_commutation_t" in failed


def test_classify_two_classes(capsys):
    status, out, _ = run(GOLDENS["classify_two_class"], capsys)
    doc = json.loads(out)
    assert status == 0
    assert doc["existence"]["verdict"] is False and doc["existence"]["failed_condition"] == "1"


def test_classify_q_minus_one_routes_to_omega(capsys):
    status, out, _ = run(["classify", *SWEEDLER], capsys)
    doc = json.loads(out)
    assert status == 0 and doc["omega_family_count"] > 0


def test_enumerate_q_minus_one_lists_omega(capsys):
    status, out, _ = run(["enumerate", *SWEEDLER, "--dmax", "2", "--check"], capsys)
    doc = json.loads(out)
    assert status == 0 and doc["omega_families"]
    assert all(f["verified"] for f in doc["omega_families"])


def test_invariants_noncommutative_case_fails(capsys):
    argv = ["invariants", "--algebra", d("order6_algebra.json"), "--taft", d("taft3.json"),
            "--spec", d("noncomm_spec.json"), "--grade-bound", "3", "--t-bound", "9"]
    status, out, _ = run(argv, capsys)
    doc = json.loads(out)
    failed = {c["name"] for c in doc["report"]["checks"] if not c["passed"]}
    assert status == 1 and "commutative" in failed


def test_invariants_unverified_spec(capsys, tmp_path):
    spec = tmp_path / "s.json"
    spec.write_text('{"kind": "eta", "gamma": "z[3]", "mu": -1, "phi": [[2, 1]]}')
    status, out, err = run(["invariants", *PLANE, "--spec", str(spec)], capsys)
    assert status == 1 and out == "" and "x_nilpotent_v" in err


def test_table_output(capsys):
    status, out, _ = run([*GOLDENS["invariants_plane"], "--table"], capsys)
    assert status == 0
    assert "relation_uv_h" in out and "fixed_dim" in out
    assert not out.lstrip().startswith("{")


@pytest.mark.parametrize("argv, needle", [
    (["eval", "--algebra", d("nope.json"), "t"], "cannot read"),
    (["eval", "--algebra", d("broken.json"), "t"], "invalid JSON"),
    (["eval", "--algebra", d("bad_literal_algebra.json"), "t"], "line 1, column 4"),
    (["eval", "--algebra", d("plane_algebra.json"), "t^^2"], "column 3"),
    (["eval", "--algebra", d("plane_algebra.json"), "z[4]*t"], "ambient order"),
    (["thicken", "--algebra", d("plane_algebra.json"), "--gamma", "z[3]", "--mu", "1", "--n", "6"], "order"),
    (["ktact", "--taft", d("taft3.json"), "--gamma", "1"], "gamma"),
    (["verify", "--algebra", d("plane_algebra.json"), "--taft", d("taft3.json"),
      "--spec", d("sweedler_spec.json")], "q = -1"),
])
def test_input_errors_exit_2(argv, needle, capsys):
    status, out, err = run(argv, capsys)
    assert status == 2 and out == ""
    assert needle in err


def test_unknown_command_prints_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "taftgwa", *GOLDENS["verify_gamma_one"]],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert proc.stdout == (GOLDEN / "verify_gamma_one.json").read_text()
