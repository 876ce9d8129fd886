import io
import json
import subprocess
import sys

import pytest

from barytrans.cli import main

TO_KE_TEXT = "(-25,-12);(-5,-6);(25,14)"
P1_TEXT = "(-2,-1);(-1,3);(1,2);(2,-3)"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_to_ke():
    code, out = run("classify", TO_KE_TEXT, "--min-steps", "3")
    assert code == 0
    assert "periodic, type B_infinity" in out
    ke_col = [line.split()[2] for line in out.splitlines()[2:5]]
    assert ke_col == ["False", "True", "True"]


def test_classify_json():
    code, out = run("classify", TO_KE_TEXT, "--json")
    doc = json.loads(out)
    assert doc["verdict"] == {"kind": "periodic", "preperiod": 1, "period": 1}
    assert doc["trajectory"][1]["vertices"] == [[-5, -3], [5, 2], [0, 1]]


def test_classify_strict_reports_terminal():
    code, out = run("classify", "(0,1);(3,-2);(-4,1)")
    assert code == 0 and "strict type B_1" in out and "OriginNotInterior" in out


def test_analyze_p1():
    code, out = run("analyze", P1_TEXT, "--json")
    info = json.loads(out)
    assert code == 0
    assert info["barycenter_zero"] and not info["kahler_einstein"] and not info["symmetric"]
    assert info["gorenstein_index"] == 280


def test_transform():
    code, out = run("transform", TO_KE_TEXT)
    assert code == 0 and out.strip().endswith("(-5,-3);(5,2);(0,1)")
    code, out = run("transform", "-n", "2", "(1,-2);(0,1);(-1,-2)")
    assert code == 0 and "not Fano (DimensionDrop)" in out


def test_orbit():
    code, out = run("orbit", "(2,-1);(-1,2);(-2,1);(1,-2)", "--include-start")
    assert code == 0 and "orbit classes" in out


def test_census_index_one_from_enumerator():
    code, out = run("census", "--from-enumerator", "3", "--index", "1")
    assert code == 0
    body = out.splitlines()[2].replace(" ", "").split("|")
    assert body == ["2", "1", "3", "0", "0", "1", "12", "0", "16", "5"]
    code, out = run("census", "--from-enumerator", "3", "--index", "1", "--format", "csv")
    assert out.splitlines()[1] == "2,1,3,0,0,1,12,0,16,5"


def test_census_from_file_and_store(tmp_path):
    f = tmp_path / "in.txt"
    f.write_text(f"a: {TO_KE_TEXT}\nb: (1,0);(-1,1);(1,-1)\n")
    store = tmp_path / "s.jsonl"
    code, out = run("census", "-i", str(f), "--store", str(store), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["errors"][0][0] == "b"
    assert len(store.read_text().splitlines()) == 1


def test_census_store_from_env(tmp_path, monkeypatch):
    monkeypatch.setenv("BARYTRANS_STORE", str(tmp_path / "env.jsonl"))
    assert run("census", "--from-enumerator", "1")[0] == 0
    assert (tmp_path / "env.jsonl").read_text()


def test_enumerate_formats():
    code, out = run("enumerate", "--box", "2", "--index", "1", "--dedupe", "--format", "json")
    assert code == 0 and len(json.loads(out)) > 0


def test_svg(tmp_path):
    target = tmp_path / "t.svg"
    code, _ = run("svg", "(0,1);(3,-2);(-4,1)", "-o", str(target))
    text = target.read_text()
    assert code == 0 and text.startswith("<svg") and "not Fano" in text


def test_exit_codes():
    assert run("classify", "(1,0);(-1,1);(1,-1)")[0] == 1
    assert run("classify", "(1,0);(0,x)")[0] == 1
    assert run("classify")[0] == 1
    assert run("analyze", "-i", "/nonexistent/file")[0] == 1
    assert run("classify", "(3,-1);(3,1);(1,2);(-3,1);(-3,-1);(-1,-2)", "--max-hull-vertices", "3")[0] == 2
    assert run("census", "--from-enumerator", "1", "--store", "/proc/nope/s.jsonl")[0] == 2
    assert run("svg", "(1,0,0);(0,1,0);(0,0,1);(-1,-1,-1)")[0] == 1


def test_unknown_flag_prints_usage(capsys):
    with pytest.raises(SystemExit) as e:
        main(["classify", "--bogus", TO_KE_TEXT])
    assert e.value.code == 1
    assert "usage:" in capsys.readouterr().err


def test_output_is_deterministic():
    for argv in (["classify", TO_KE_TEXT], ["census", "--from-enumerator", "2"], ["analyze", P1_TEXT]):
        assert run(*argv) == run(*argv)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "barytrans", "analyze", "(1,0);(0,1);(-1,-1)"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "gorenstein_index" in r.stdout
