from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from sievelab import harness
from sievelab.cli import main
from sievelab.errors import DomainError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_type_a_literal_fails_with_witness(capsys):
    code, out, err = run(capsys, "verify", "type-a", "--s", "1", "--m", "7")
    assert code == 1
    rows = json.loads(out)
    assert {"check_id", "family", "params", "lhs", "rhs", "status", "witness"} <= set(rows[0])
    bad = [r for r in rows if r["status"] == "fail"]
    assert bad and all(r["params"]["g"].startswith("s") for r in bad)
    assert "FAIL type-a[" in err


def test_type_a_normalized_passes(capsys):
    code, out, _ = run(capsys, "verify", "type-a", "--s", "1", "--m", "7", "--normalize")
    assert code == 0
    assert all(r["status"] == "pass" for r in json.loads(out))


def test_type_a_large_needs_slow(capsys):
    code, _, err = run(capsys, "verify", "type-a", "--s", "3", "--m", "5")
    assert code == 2 and "--slow" in err
    code, _, _ = run(capsys, "verify", "type-a", "--s", "3", "--m", "5", "--slow")
    assert code == 0


def test_exceptional_needs_slow(capsys):
    code, _, err = run(capsys, "verify", "cluster", "--type", "E7")
    assert code == 2
    code, out, _ = run(capsys, "verify", "cluster", "--type", "E7", "--slow")
    assert code == 0
    row = [r for r in json.loads(out) if r["family"] == "cluster-reflection"][0]
    assert {row["params"]["tau_plus"], row["params"]["tau_minus"]} == {0, 24}


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "verify", "type-a", "--s", "2", "--m", "3")
    assert code == 2 and err.startswith("error:")
    code, _, _ = run(capsys, "roots", "--type", "G2")
    assert code == 2


def test_csv_output(capsys, tmp_path):
    target = tmp_path / "raney.csv"
    code, _, _ = run(capsys, "verify", "raney", "--corrected", "--format", "csv", "-o", str(target))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(target.read_text())))
    assert rows and all(r["status"] == "pass" for r in rows)
    assert rows[0]["params"].startswith("p=")


def test_raney_literal_fails(capsys):
    code, _, err = run(capsys, "verify", "raney")
    assert code == 1 and "raney-recurrence-2[" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "dyck", "--normalize"],
        ["verify", "symmetric", "--n", "5"],
        ["verify", "even-dihedral", "--n", "6"],
        ["verify", "binomial", "--n", "5"],
        ["verify", "polygon", "--n", "4"],
        ["verify", "posets"],
        ["verify", "properties", "--trials", "5"],
        ["verify", "cluster", "--type", "I2", "--rank", "5"],
        ["verify", "cluster", "--type", "B", "--rank", "3"],
    ],
)
def test_passing_suites(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 0, err


def test_enumerate_commands(capsys):
    code, out, _ = run(capsys, "enumerate", "dissections", "--n", "6", "--k", "4")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "enumerate", "facets", "--type", "A3")
    assert len(out.splitlines()) == 14
    code, out, _ = run(capsys, "enumerate", "facets", "--type", "D-model", "--rank", "4")
    assert len(out.splitlines()) == 50
    code, out, _ = run(capsys, "enumerate", "ideals", "--poset", "line", "--n", "5")
    assert len(out.splitlines()) == 7
    code, out, _ = run(capsys, "enumerate", "coral", "--p", "2", "--r", "4", "--k", "4")
    assert len(out.splitlines()) == 165
    code, out, _ = run(capsys, "enumerate", "dyck", "--a", "3", "--b", "2")
    assert sorted(out.split()) == sorted(["NNENE", "0", "NNNEE", "1"])


def test_census_and_roots(capsys):
    code, out, _ = run(capsys, "census", "--n", "7", "--k", "3")
    lines = out.strip().splitlines()
    assert lines[0] == "shift,reflected,fixed_count" and lines[1] == "0,0,42"
    code, out, _ = run(capsys, "roots", "--type", "F4")
    assert json.loads(out)["coxeter_number"] == 12


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sievelab", "verify", "polygon", "--n", "3", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("check_id,")


def test_seed_from_env(monkeypatch):
    monkeypatch.delenv("SIEVELAB_SEED", raising=False)
    assert harness.seed_from_env() == harness.DEFAULT_SEED
    monkeypatch.setenv("SIEVELAB_SEED", "7")
    assert harness.seed_from_env() == 7
    first = harness.to_json(harness.verify_properties(3))
    assert first == harness.to_json(harness.verify_properties(3))
    monkeypatch.setenv("SIEVELAB_SEED", "x")
    with pytest.raises(DomainError):
        harness.seed_from_env()


def test_result_rows():
    ok = harness._result("fam", {"a": 1}, 3, 3, {"w": 1})
    assert ok.ok and ok.witness is None and ok.check_id == "fam[a=1]"
    bad = harness._result("fam", {"a": 1}, 3, None, {"coeffs": [0, 1]})
    assert not bad.ok and bad.witness == {"coeffs": [0, 1]}
    assert not harness.all_pass([ok, bad])
