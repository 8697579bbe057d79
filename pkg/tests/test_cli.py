from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from skein_tori.cli import main
from skein_tori.surface import builtin


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_analyze_json(capsys):
    code, out = run(["analyze", "--builtin", "polygon:3", "--n", "2", "--order", "4"], capsys)
    assert code == 0
    doc = json.loads(out.out)
    assert doc["schema"] == 1 and doc["ok"]
    assert doc["center"]["rank_kernel"] == 4
    assert doc["center"]["lattice_equality"] == "equal"


def test_analyze_reduced_flags_unasserted(capsys):
    code, out = run(["analyze", "--builtin", "polygon:3", "--n", "2", "--order", "4", "--reduced"], capsys)
    assert code == 0
    doc = json.loads(out.out)
    assert doc["center"]["lattice_equality"] == "not asserted" and "note" in doc


@pytest.mark.parametrize("argv", [
    ["analyze", "--builtin", "torus:3", "--n", "2", "--order", "4"],
    ["analyze", "--builtin", "polygon:3", "--n", "1", "--order", "4"],
    ["analyze", "--builtin", "polygon:3", "--n", "2", "--order", "1"],
    ["analyze", "--n", "2", "--order", "4"],
    ["frobnicate"],
    ["emit-matrices", "--builtin", "polygon:3", "--n", "2", "--format", "csv"],
])
def test_input_errors(argv, capsys):
    code, _ = run(argv, capsys)
    assert code == 2


def test_bad_spec_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out = run(["verify", "--spec", str(path), "--n", "2"], capsys)
    assert code == 2 and "error" in out.err


def test_spec_file(tmp_path, capsys):
    path = tmp_path / "a.json"
    path.write_text(json.dumps(builtin("annulus:1,2").to_spec()))
    code, out = run(["verify", "--spec", str(path), "--n", "2", "3"], capsys)
    assert code == 0
    assert len(json.loads(out.out)["rows"]) == 2


def test_verify_csv(capsys):
    code, out = run(["verify", "--builtin", "polygon:3", "--builtin", "genus:1,1", "--n", "2", "3",
                     "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.out)))
    assert len(rows) == 4 and all(r["ok"] == "True" for r in rows)


def test_batch_output_file(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code, _ = run(["batch", "--builtin", "polygon:3", "--builtin", "annulus:1,1", "--n", "2", "3",
                   "--order", "2", "4", "--format", "csv", "--output", str(out)], capsys)
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 8 and all(r["ok"] == "True" for r in rows)


def test_batch_is_byte_stable_across_threads(tmp_path, monkeypatch, capsys):
    argv = ["batch", "--builtin", "polygon:3", "--builtin", "polygon:4", "--n", "2", "3",
            "--order", "3", "4", "--output"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(argv + [str(a)]) == 0
    monkeypatch.setenv("SKEIN_TORI_THREADS", "3")
    assert main(argv + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_skewnf_and_emit(capsys):
    code, out = run(["skewnf", "--builtin", "genus:1,1", "--n", "2"], capsys)
    assert code == 0
    row = json.loads(out.out)["rows"][0]
    assert all(h == 2 * z for h, z in zip(row["h"], row["z"]))
    code, out = run(["emit-matrices", "--builtin", "polygon:3", "--n", "2"], capsys)
    assert code == 0
    mats = json.loads(out.out)["matrices"]
    assert set(mats) >= {"K", "H", "P", "Q"}


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "skein_tori.cli", "verify", "--builtin", "polygon:3",
                          "--n", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["ok"]
