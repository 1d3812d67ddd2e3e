"""Command-line interface: subcommands, output formats, exit-code contract."""

import json
import os

import pytest

from lieform import cli

DATA = os.path.join(os.path.dirname(__file__), "data")
U2 = os.path.join(DATA, "u2.json")
GL2R = os.path.join(DATA, "gl2r.json")
CORRUPTED = os.path.join(DATA, "corrupted.json")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check_algebra_pass(capsys):
    code, out = run(capsys, "check-algebra", U2)
    assert code == 0
    assert "[PASS] antisymmetry and Jacobi identity" in out
    assert "[INFO] dim :: 4" in out


def test_check_algebra_corrupted_fails(capsys):
    code, out = run(capsys, "check-algebra", CORRUPTED)
    assert code == 1
    assert "[FAIL]" in out
    assert "antisymmetry fails" in out


def test_check_lcs(capsys):
    code, out = run(capsys, "check-lcs", U2, "omega_std")
    assert code == 0
    assert "[INFO] Lee form :: (-1) * e0" in out
    assert "Reeb vector :: [0, 1/2, 0, 0]" in out


def test_check_lck_symbolic_skips_definiteness(capsys):
    code, out = run(capsys, "check-lck", U2, "omega_std", "J_ab",
                    "--convention=thm")
    assert code == 0
    assert "[SKIPPED] metric definiteness" in out


def test_check_lck_at_point_reports_signature(capsys):
    code, out = run(capsys, "check-lck", U2, "omega_std", "J_ab",
                    "--convention=thm", "--at",
                    "a=0,b=-1,a1=1,a2=0,a3=0")
    assert code == 0
    assert "metric signature :: (4, 0)" in out


def test_check_lck_on_denominator_locus_fails(capsys):
    code, out = run(capsys, "check-lck", U2, "omega_std", "J_ab",
                    "--at", "a=0,b=0,a1=1,a2=0,a3=0")
    assert code == 1
    assert "DenominatorVanishes" in out


def test_check_vaisman_positive_and_negative(capsys):
    code, out = run(capsys, "check-vaisman", U2, "omega_std", "J_ab")
    assert code == 0
    assert "[PASS] Lee field is parallel (Vaisman)" in out
    code2, out2 = run(capsys, "check-vaisman", GL2R, "omega_general", "J_mu1",
                      "--at", "mu1=1,mu2=0,ah=1,ap=1,am=1")
    assert code2 == 1
    assert "[FAIL] Lee field is parallel (Vaisman)" in out2


def test_cohomology(capsys):
    code, out = run(capsys, "cohomology", U2, "--lambda", "lambda_std",
                    "--degree", "1")
    assert code == 0
    assert "dim H^1 twisted by lambda_std :: 0" in out


def test_construct_orbit(capsys):
    # drive the construction from a hand-written document
    import tempfile
    doc = {
        "parameters": [],
        "algebra": {"dim": 3, "basis": ["e1", "e2", "e3"],
                    "brackets": [{"i": 0, "j": 1, "coeffs": {"e3": "-1"}},
                                 {"i": 1, "j": 2, "coeffs": {"e1": "-1"}},
                                 {"i": 2, "j": 0, "coeffs": {"e2": "-1"}}]},
        "forms": {"phi": "e1"},
    }
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        json.dump(doc, fh)
        path = fh.name
    try:
        code, out = run(capsys, "construct-orbit", path, "--phi", "phi")
    finally:
        os.unlink(path)
    assert code == 0
    assert "orbit is non-conical" in out
    assert "[INFO] omega :: (-1) * D^e1 + (1) * e2^e3" in out
    assert "[INFO] Lee form :: (1) * D" in out


def test_suite_golden_output(capsys):
    code, out = run(capsys, "suite", "reductive_identities")
    assert code == 0
    with open(os.path.join(DATA, "suite_reductive.txt"),
              encoding="utf-8") as fh:
        assert out == fh.read()


def test_catalog_emit_round_trip(capsys):
    code, out = run(capsys, "catalog", "gl2r", "--emit")
    assert code == 0
    with open(GL2R, encoding="utf-8") as fh:
        assert out == fh.read()


def test_catalog_summary_and_unknown(capsys):
    code, out = run(capsys, "catalog", "u2")
    assert code == 0
    assert "[INFO] basis :: e0 e1 e2 e3" in out
    code2, out2 = run(capsys, "catalog", "nope")
    assert code2 == 1
    assert "[FAIL]" in out2


def test_json_format(capsys):
    code, out = run(capsys, "check-algebra", U2, "--format=json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["checks"][0]["verdict"] == "PASS"


def test_missing_file_exit_code(capsys):
    code = cli.main(["check-algebra", "/nonexistent/doc.json"])
    assert code == 2


def test_bad_at_value(capsys):
    code, out = run(capsys, "check-algebra", U2, "--at", "a=zebra")
    assert code == 1
    assert "FAIL" in out


def test_unknown_at_parameter(capsys):
    code, out = run(capsys, "check-algebra", U2, "--at", "q=1")
    assert code == 1
    assert "unknown parameter" in out
