import json

import pytest

from twistpoly.cli import main


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {"vt": "O1+ O2+ U1+ U2+\n", "unknot": "()\n", "bad": "O1+ O2+ X1+ U2+\n",
                       "trefoil": "O1+ U2+ O3+ U1+ O2+ U3+\n", "barred": "b O1+ b U1+\n"}.items():
        p = tmp_path / f"{name}.code"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_compute(capsys, files):
    assert run(capsys, "compute", "-i", files["unknot"]) == (0, "1\n", "")
    code, out, _ = run(capsys, "compute", "--input", files["vt"], "--normalized")
    assert code == 0 and out.strip() == "A^-4 - A^-10 K1 + A^-6 K1"
    code, out, _ = run(capsys, "compute", "--code", "O1+ U1+")
    assert out.strip() == "-A^3"


def test_compute_flags(capsys, files):
    code, out, _ = run(capsys, "compute", "-i", files["vt"], "--as-set", "--criteria", "--jones")
    assert "AS: {0, 1}" in out and "necessarily-not-colorable" in out and "jones:" in out


def test_bad_input(capsys, files):
    code, _, err = run(capsys, "compute", "-i", files["bad"])
    assert code == 2 and "X1+" in err and "column 9" in err
    code, _, err = run(capsys, "compute", "-i", files["bad"] + ".missing")
    assert code == 2
    assert run(capsys, "cutpoints", "-i", files["barred"])[0] == 2


def test_json_is_deterministic(capsys, files):
    a = run(capsys, "compute", "-i", files["vt"], "--json")[1]
    b = run(capsys, "compute", "-i", files["vt"], "--json")[1]
    assert a == b
    obj = json.loads(a)
    assert obj["writhe"] == 2 and obj["as_set"] == [0, 1]
    assert list(obj)[:4] == ["input", "crossings", "bars", "writhe"]
    assert "seconds" not in obj
    timed = json.loads(run(capsys, "compute", "-i", files["vt"], "--json", "--timing")[1])
    assert "seconds" in timed


def test_enumerate_bars(capsys, files):
    code, out, _ = run(capsys, "enumerate-bars", "-i", files["unknot"], "--max-bars", "1", "--json")
    polys = {g["polynomial"] for g in json.loads(out)["classes"]}
    assert polys == {"1", "M"}
    code, out, _ = run(capsys, "enumerate-bars", "-i", files["vt"], "--max-bars", "0", "--json")
    assert [g["polynomial"] for g in json.loads(out)["classes"]] == ["A^-4 - A^-10 K1 + A^-6 K1"]


def test_coloring_commands(capsys, files):
    code, out, _ = run(capsys, "cutpoints", "-i", files["vt"])
    assert code == 0 and out.startswith("P_d = 2")
    code, out, _ = run(capsys, "colorable", "-i", files["trefoil"])
    assert out.startswith("colorable")
    code, out, _ = run(capsys, "colorable", "-i", files["vt"], "--json")
    assert json.loads(out)["colorable"] is False
    code, out, _ = run(capsys, "framing-connectivity", "-i", files["vt"], "--bound", "3")
    assert code == 0 and out.startswith("connected")


def test_closure(capsys):
    code, out, _ = run(capsys, "closure", "--braid", "s1 s1 s1", "--strands", "2")
    assert code == 0 and out.count("O") == 3
    assert run(capsys, "closure", "--braid", "s3", "--strands", "2")[0] == 2


def test_check(capsys, tmp_path):
    assert run(capsys, "check", "--property", "confluence")[0] == 0
    corpus = tmp_path / "c.txt"
    corpus.write_text("vt: O1+ O2+ U1+ U2+\nkink: O1+ U1+\n")
    code, out, _ = run(capsys, "check", "--property", "invariance", "--corpus", str(corpus),
                       "--steps", "5", "--walks", "4", "--seed", "1")
    assert code == 0 and "pass" in out


def test_check_reports_violation(capsys, monkeypatch):
    from twistpoly import checks

    def broken(corpus, cfg):
        res = checks.CheckResult("confluence", cases=1)
        res.fail("LRb: reaches two values")
        return res

    monkeypatch.setitem(checks.PROPERTIES, "confluence", broken)
    code, out, _ = run(capsys, "check", "--property", "confluence")
    assert code == 1 and "counterexample: LRb" in out
