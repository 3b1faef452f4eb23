import csv
import json
import subprocess
import sys

import pytest

from rearep.cli import main
from rearep.rmatrix import catalog_uq_sl2, dump_rmatrix
from rearep.tensor import permutation


@pytest.fixture
def sl2_file(tmp_path):
    path = tmp_path / "sl2.json"
    dump_rmatrix(catalog_uq_sl2(), path)
    return str(path)


def test_validate(sl2_file, capsys):
    assert main(["validate", "--rmatrix", sl2_file]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["symmetry_rank"] == 2 and report["valid"]


def test_validate_rejects_flip(tmp_path, capsys):
    path = tmp_path / "p.json"
    dump_rmatrix(permutation(2), path)
    assert main(["validate", "--rmatrix", str(path), "--kmax", "3"]) == 1
    assert json.loads(capsys.readouterr().out)["flags"]["hecke"] is False


def test_decompose(capsys):
    assert main(["decompose", "--rmatrix", "catalog:3", "--k", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sum_dim_times_rank"] == 9
    assert [row["rank"] for row in out["tableaux"]] == [6, 3]


def test_build_then_verify(sl2_file, tmp_path, capsys):
    rep = tmp_path / "rep.json"
    code = main(["build", "--rmatrix", sl2_file, "--type", "B", "--k", "3",
                 "--shape", "(2,1)", "--tableau", "1", "--sl", "--out", str(rep)])
    assert code == 0
    assert "PASS  quadratic relation [mREA]" in capsys.readouterr().err
    stored = json.loads(rep.read_text())
    assert stored["flavor"] == "SL" and stored["module_dim"] == 2
    assert main(["verify", "--rep", str(rep)]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["ok"] and result["commutant_dimension"] == 1


def test_build_r_type_with_renormalization(capsys):
    code = main(["build", "--rmatrix", "catalog:2", "--type", "R", "--k", "2",
                 "--shape", "(2)", "--renorm", "q^2"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["flavor"] == "mREA" and out["verification"]["ok"]


def test_build_rejects_bad_tableau_index():
    with pytest.raises(SystemExit):
        main(["build", "--rmatrix", "catalog:2", "--type", "B", "--k", "2",
              "--shape", "(2)", "--tableau", "3"])


def test_characters_table(tmp_path, capsys):
    out_json, out_csv = tmp_path / "c.json", tmp_path / "c.csv"
    code = main(["characters", "--rmatrix", "catalog:2", "--type", "B", "--k", "3", "--m", "2",
                 "--json", str(out_json), "--csv", str(out_csv)])
    assert code == 0
    rows = list(csv.DictReader(out_csv.open()))
    assert {r["shape"] for r in rows} == {"(3)", "(2,1)"}
    matched = [r for r in rows if r["match"] == "True"]
    assert len(matched) == 3
    assert json.loads(out_json.read_text())["rows"][0]["m"] == 1
    capsys.readouterr()


def test_characters_sl_r_type(capsys):
    assert main(["characters", "--rmatrix", "catalog:3", "--type", "R", "--k", "2",
                 "--m", "2", "--sl"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert all(r["match"] for r in rows)
    assert rows[0]["oracle"] == "0"


def test_equivalence(capsys):
    assert main(["equivalence", "--rmatrix", "catalog:2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["p"] == 2 and out["ok"]


def test_indecomposable(capsys):
    assert main(["indecomposable", "--x", "q", "--y", "2", "--z", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["invariant_complement"] is None and not out["decomposable"]
    # b acts as diag(q x, x / q) with x = q
    assert out["matrices"]["b"] == [["q^2", "0"], ["0", "1"]]


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "rearep", "indecomposable",
                           "--x", "0", "--y", "1", "--z", "1"],
                          capture_output=True, text=True, check=False)
    assert done.returncode == 0
    assert json.loads(done.stdout)["decomposable"] is True
