from __future__ import annotations

import json
import subprocess
import sys

import pytest

from milnorarr import cli
from milnorarr.arrangement import build_gmm, load_arrangement


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_to_file(tmp_path, capsys):
    path = tmp_path / "a.json"
    code, out, _ = run(capsys, "build", "--builder", "gmm", "--m", "2", "--dim", "4", "--out", str(path))
    assert code == 0 and out.strip() == "d=12 d_X=4 m=2"
    assert load_arrangement(path) == build_gmm(2, 4)


@pytest.mark.parametrize("argv,degree", [(["--builder", "g31"], 60), (["--builder", "gm1", "--m", "1", "--dim", "4"], 10)])
def test_build_stdout(capsys, argv, degree):
    code, out, err = run(capsys, "build", *argv)
    assert code == 0
    assert len(json.loads(out)["hyperplanes"]) == degree
    assert err.startswith(f"d={degree} ")


def test_edges_boolean(tmp_path, capsys):
    path = tmp_path / "b.json"
    path.write_text(json.dumps({"ambient_dim": 3, "cyclotomic_order": 1, "hyperplanes": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}))
    code, out, _ = run(capsys, "edges", "--input", str(path))
    data = json.loads(out)
    assert code == 0
    assert [e["multiplicity"] for e in data["codim2"]] == [2, 2, 2]
    assert [e["multiplicity"] for e in data["codim3"]] == [3]
    assert len(data["incidences"]) == 3


def test_edges_text(capsys):
    code, out, _ = run(capsys, "edges", "--builder", "gmm", "--m", "2", "--dim", "4", "--format", "text")
    assert code == 0
    assert "a=3 m=6 profile=6 count=4" in out
    assert "a=4 m=3 profile=1+1+1 count=12" in out


def test_analyze_exit_codes(capsys):
    code, out, _ = run(capsys, "analyze", "--builder", "gmm", "--m", "2", "--dim", "4")
    data = json.loads(out)
    assert code == 0
    by_order = {e["order"]: e for e in data["eigenvalues"]}
    assert by_order[3]["verdict"] == "UpperBound" and by_order[3]["rho"] == 1
    code, _, _ = run(capsys, "analyze", "--builder", "g31", "--orders", "3")
    assert code == 2
    code, out, _ = run(capsys, "analyze", "--builder", "g31", "--orders", "6")
    assert code == 0
    assert {e["verdict"] for e in json.loads(out)["eigenvalues"]} == {"CertifiedZero"}


def test_analyze_gmm25(capsys):
    code, out, _ = run(capsys, "analyze", "--builder", "gmm", "--m", "2", "--dim", "5")
    assert code == 0
    assert {e["verdict"] for e in json.loads(out)["eigenvalues"]} == {"CertifiedZero"}


def test_analyze_assume_with_table(tmp_path, capsys):
    table = tmp_path / "t.json"
    cite = "product with a new linear variable has unipotent H^1"
    table.write_text(json.dumps([
        {"degree": 4, "profile": [3, 1], "order": 2, "status": "zero", "citation": cite},
    ]))
    base = ["analyze", "--builder", "gm1", "--m", "3", "--dim", "4", "--orders", "2"]
    code, _, _ = run(capsys, *base, "--oracle-table", str(table))
    assert code == 2  # the table is ignored without --assume
    code, out, _ = run(capsys, *base, "--oracle-table", str(table), "--assume")
    data = json.loads(out)
    assert code == 0
    assert data["assumptions"]["used"] == [cite]
    assert data["eigenvalues"][0]["certificate"]["conditional"] is True


def test_ade_and_ts(capsys):
    code, out, _ = run(capsys, "ade", "A", "4")
    assert code == 0
    assert json.loads(out) == {"type": "A4", "det_S": 5, "det_recursive": 5, "det_monodromy": 5, "agree": True}
    code, out, _ = run(capsys, "ade", "--type", "E", "--rank", "8")
    assert json.loads(out)["det_S"] == 1
    code, out, _ = run(capsys, "ts", "2", "2", "2", "2")
    data = json.loads(out)
    assert code == 0 and data["closed_form"] == data["brute_force"] == 1 and data["agree"]
    code, out, _ = run(capsys, "ts", "4", "6", "2", "3", "--component", "1", "2", "--tx")
    data = json.loads(out)
    assert data["closed_form"] == data["brute_force"] == (2 - 1) * (2 - 1)


@pytest.mark.parametrize(
    "argv",
    [
        ["build"],
        ["build", "--builder", "gmm"],
        ["edges", "--input", "/nonexistent/file.json"],
        ["analyze", "--builder", "gmm", "--m", "2", "--dim", "4", "--orders", "x"],
        ["analyze", "--builder", "gmm", "--m", "2", "--dim", "4", "--threshold-D", "0"],
        ["ade", "--type", "D", "--rank", "3"],
        ["ts", "1", "2", "3"],
    ],
)
def test_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")


def test_parse_error_context(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"ambient_dim": 2, "cyclotomic_order": 1, "hyperplanes": [[1, [1, 0]]]}')
    code, _, err = run(capsys, "edges", "--input", str(path))
    assert code == 1 and "hyperplanes[0][1]" in err


def test_unwritable_out(capsys):
    code, _, err = run(capsys, "build", "--builder", "g31", "--out", "/nonexistent/dir/x.json")
    assert code == 1


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "milnorarr", "ade", "--type", "D", "--rank", "5", "--format", "text"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.strip() == "D5: det(-S)=4 recursion=4 det(I-T)=4 agree=True"
