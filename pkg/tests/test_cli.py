import csv
import io
import json
import subprocess
import sys

import pytest

from hermsig import cli
from hermsig.realform import builtin_group, to_json


def run(*argv):
    out = io.StringIO()
    try:
        code = cli.main(list(argv), out=out)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue()


def sig_json(*argv):
    code, text = run("sig", *argv, "--format", "json")
    assert code == 0
    return json.loads(text)


@pytest.mark.parametrize("n,lam,sig", [("3", "1,0,-1", 2), ("4", "0,0,0,0", 1), ("4", "2,1,-1,-2", 5)])
def test_sig_examples(n, lam, sig):
    obj = sig_json("--builtin", "GL", "--n", n, "--lambda", lam)
    assert obj["sig"] == sig
    assert obj["p"] + obj["q"] == obj["dim"]


def test_sig_text_output():
    code, text = run("sig", "--builtin", "GL(4)", "--lambda", "2,1,-1,-2")
    assert code == 0
    assert "Sig: 5" in text and "{p, q}: {90, 85}" in text and "contributions:" in text


def test_no_form():
    code, text = run("sig", "--builtin", "GL", "--n", "4", "--lambda", "2,1,0,-1")
    assert code == 0
    assert "no invariant Hermitian form" in text and "imaginary" in text


def test_sl_and_lattice_conventions():
    assert sig_json("--builtin", "SL(3)", "--lambda", "1,0,-1")["sig"] == 2
    assert sig_json("--builtin", "Sp(4)", "--lambda", "2,0")["sig"] == 2


def test_spec_file(tmp_path):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"builtin": "GL", "n": 3}))
    assert sig_json("--spec", str(f), "--lambda", "1,0,-1")["sig"] == 2
    custom = tmp_path / "c.json"
    custom.write_text(json.dumps({"custom": to_json(builtin_group("Sp(4)"))}))
    assert sig_json("--spec", str(custom), "--lambda", "2,0")["sig"] == 2


def test_bad_spec_reports_position(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"builtin": "GL",\n "n": }')
    code, _ = run("sig", "--spec", str(f), "--lambda", "0")
    assert code == 2
    assert "bad.json:2:" in capsys.readouterr().err


@pytest.mark.parametrize("argv,code", [
    (["sig", "--builtin", "GL", "--n", "3", "--lambda", "0,1,0"], 2),
    (["sig", "--builtin", "GL", "--n", "3", "--lambda", "1,x,0"], 1),
    (["sig", "--builtin", "GL", "--n", "3", "--lambda", "1,0"], 2),
    (["sig", "--builtin", "Foo(3)", "--lambda", "1"], 2),
    (["sig", "--lambda", "1"], 1),
    (["sig", "--builtin", "GL(3)"], 1),
    (["bogus"], 1),
    ([], 1),
])
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_json_schema_round_trip():
    obj = sig_json("--builtin", "GL(4)", "--lambda", "1,0,0,-1")
    again = json.loads(json.dumps(obj))
    assert again == obj
    for key in ("group", "lambda", "dim", "p", "q", "sig", "r", "contributions", "invariance"):
        assert key in obj
    for c in obj["contributions"]:
        assert set(c) >= {"w", "epsilon", "dim_E"}
    total = sum(c["epsilon"] * c["dim_E"] for c in obj["contributions"])
    assert abs(total) == obj["sig"] * 2 ** obj["r"]


def test_sweep_csv():
    code, text = run("sweep", "--builtin", "GL", "--n", "3", "--sweep=-2:2", "--self-dual")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["lambda"] for r in rows] == ["0 0 0", "1 0 -1", "2 0 -2"]
    assert all(r["bound_ok"] == "true" and r["ratio_ok"] == "true" for r in rows)


def test_sweep_gl2_constant():
    code, text = run("sweep", "--builtin", "GL(2)", "--sweep=-10:10", "--self-dual", "--format", "json")
    rows = json.loads(text)["rows"]
    assert len(rows) == 11 and {r["sig"] for r in rows} == {1}


def test_sweep_probe_and_schema():
    code, text = run("sweep", "--builtin", "GL(4)", "--sweep=0:0", "--probe", "2,1,-1,-2")
    assert code == 0 and "degree=2" in text and "vanishes=true" in text
    code, text = run("sweep", "--schema")
    assert code == 0 and text.startswith("schema: hermsig-sweep/1")
    assert "sig_squared" in text


def test_sweep_cap():
    assert run("sweep", "--builtin", "GL(6)", "--sweep=-9:9", "--cap", "100")[0] == 2


def test_tables():
    code, text = run("tables")
    assert code == 0 and "MISMATCH" not in text
    assert "o{1,4} =>= @{2,3}" in text
    code, text = run("tables", "--format", "json")
    obj = json.loads(text)
    rows = {r["type"]: r for r in obj["restricted_root_systems"]}
    assert rows["E6"]["res"] == "F4" and rows["A5"]["res"] == "C3"
    assert all(f["ok"] for f in obj["folds"])


def test_verify_fast_and_fault():
    code, text = run("verify", "--level", "fast")
    assert code == 0 and "FAIL" not in text
    code, text = run("verify", "--level", "fast", "--inject-fault")
    assert code == 3 and "FAIL" in text
    assert run("--verify", "fast")[0] == 0


def test_deterministic():
    argv = ["sweep", "--builtin", "GL(4)", "--sweep=-2:2", "--self-dual", "--format", "json"]
    assert run(*argv)[1] == run(*argv)[1]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "hermsig.cli", "sig", "--builtin", "GL(3)", "--lambda", "1,0,-1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "Sig: 2" in proc.stdout
