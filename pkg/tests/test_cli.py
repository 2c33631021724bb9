"""Command-line front end."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cartan_commutant.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim(capsys, tmp_path):
    path = tmp_path / "dim.json"
    code, out, _ = run(capsys, "dim", "--n", "5", "--json", str(path))
    assert code == 0
    assert out.strip() == "88 = 4+10+20+30+24"
    doc = json.loads(path.read_text())
    assert doc["linear_dimension"] == 88
    assert doc["by_degree"] == {"1": 4, "2": 10, "3": 20, "4": 30, "5": 24}


def test_basis(capsys, tmp_path):
    path = tmp_path / "basis.json"
    code, out, _ = run(capsys, "basis", "--n", "3", "--json", str(path))
    assert code == 0 and "p(1,3,2)" in out
    assert len(json.loads(path.read_text())["generators"]) == 7


def test_table_sl2_is_abelian(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--n", "2", "--json", str(path))
    assert code == 0 and "all brackets vanish" in out
    doc = json.loads(path.read_text())
    assert doc["entries"] == [] and doc["order"] == 0


def test_table_cfg(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--basis", "cfg")
    assert code == 0 and "order: 2" in out


def test_large_table_needs_flag(capsys):
    code, _, err = run(capsys, "table", "--n", "5")
    assert code == 2 and "--allow-large" in err


def test_verify_family(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, out, _ = run(capsys, "verify", "--n", "3", "--family", "alde1", "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["n"] == 3
    assert {c["status"] for c in doc["identities"]} == {"identical"}
    assert set(doc["identities"][0]) == {"name", "paper_eq", "status", "residual_terms"}


def test_verify_reports_failures_with_status_one(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--family", "listing")
    assert code == 1
    assert "20/22 checks pass" in out


def test_verify_inapplicable_family(capsys):
    code, _, err = run(capsys, "verify", "--n", "3", "--family", "addrels")
    assert code == 2 and "error" in err


def test_casimir(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, out, _ = run(capsys, "casimir", "--n", "2", "--k", "2", "--json", str(path))
    assert code == 0
    assert json.loads(path.read_text())["k"] == 2
    assert run(capsys, "casimir", "--n", "3", "--k", "4")[0] == 2


def test_realize_json(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, _, _ = run(capsys, "realize", "--n", "3", "--float", "--json", str(path))
    doc = json.loads(path.read_text())
    # the sl-level pairs other than the Cartan ones do not survive the realization
    assert code == 1
    assert doc["derived"]["sl_pairs"] == 36
    assert doc["derived"]["max_abs_residual"] < 1e-9
    assert run(capsys, "realize", "--n", "6")[0] == 2


def test_bad_arguments():
    with pytest.raises(SystemExit):
        main(["dim"])
    with pytest.raises(SystemExit):
        main(["dim", "--n", "3", "--threads", "0"])


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "cartan_commutant", "dim", "--n", "4"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "23 = 3+6+8+6"
