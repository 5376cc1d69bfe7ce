import json
import subprocess
import sys

import numpy as np
import pytest

from albertdiag.algebra import SPLIT
from albertdiag.cli import main
from albertdiag.jordan import JordanElement, unit_E
from albertdiag.split import counterexample_X0


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    return _run


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_diagonalize_unit(run, tmp_path):
    code, out, _ = run("diagonalize", "--input", write(tmp_path, "e.json", unit_E().to_json()))
    assert code == 0
    assert json.loads(out)["diagonal"] == [1.0, 1.0, 1.0]


def test_diagonalize_split_routed(run, tmp_path):
    code, out, err = run("diagonalize", "-i", write(tmp_path, "s.json", unit_E(SPLIT).to_json()))
    assert code == 3 and out == "" and "split-check" in err


def test_diagonalize_malformed(run, tmp_path):
    bad = unit_E().to_json()
    bad["extra"] = 1
    assert run("diagonalize", "-i", write(tmp_path, "a.json", bad))[0] == 1
    short = unit_E().to_json()
    short["x1"] = [0.0] * 7
    assert run("diagonalize", "-i", write(tmp_path, "b.json", short))[0] == 1
    path = tmp_path / "c.json"
    path.write_text('{"algebra": "compact", "diag": [NaN, 0, 0], "x1": [0,0,0,0,0,0,0,0], '
                    '"x2": [0,0,0,0,0,0,0,0], "x3": [0,0,0,0,0,0,0,0]}')
    assert run("diagonalize", "-i", str(path))[0] == 1
    assert run("diagonalize", "-i", str(tmp_path / "missing.json"))[0] == 1


def test_seeded_random_round_trip(run, tmp_path):
    code, out, _ = run("random", "--seed", "42")
    assert code == 0
    code, transcript, _ = run("diagonalize", "-i", write(tmp_path, "x.json", json.loads(out)))
    assert code == 0
    assert json.loads(transcript)["off_diag_residual"] <= 1e-9
    t_path = tmp_path / "t.json"
    t_path.write_text(transcript)
    code, report, _ = run("verify", "-i", str(t_path))
    assert code == 0 and json.loads(report)["ok"] is True


def test_random_deterministic(run):
    a = run("random", "--seed", "7")[1]
    b = run("random", "--seed", "7")[1]
    assert a == b
    assert a != run("random", "--seed", "8")[1]
    split = json.loads(run("random", "--seed", "7", "--algebra", "split")[1])
    assert split["algebra"] == "split"


def test_random_uses_pcg64(run):
    # 27 uniform draws in order diag, x1, x2, x3 from numpy's PCG64 stream
    data = json.loads(run("random", "--seed", "3")[1])
    draws = np.random.Generator(np.random.PCG64(3)).uniform(-1, 1, 27)
    assert data["diag"] == draws[:3].tolist()
    assert data["x3"] == draws[19:].tolist()


def test_output_is_sorted_json(run, tmp_path):
    out = tmp_path / "o.json"
    assert run("random", "--seed", "1", "--output", str(out))[1] == ""
    text = out.read_text()
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert JordanElement.from_json(data).frobenius() > 0


def test_verify_detects_tamper(run, tmp_path):
    x = json.loads(run("random", "--seed", "5")[1])
    t = json.loads(run("diagonalize", "-i", write(tmp_path, "x.json", x))[1])
    t["diagonal"][0] += 1e-3
    assert run("verify", "-i", write(tmp_path, "t.json", t))[0] == 2


def test_verify_rejects_bad_rotation(run, tmp_path):
    x = json.loads(run("random", "--seed", "5")[1])
    t = json.loads(run("diagonalize", "-i", write(tmp_path, "x.json", x))[1])
    t["steps"].append({"kind": "rot_o3", "T": [1, 0, 0, 0, 1, 0, 0, 0, 1.01]})
    code, _, err = run("verify", "-i", write(tmp_path, "t.json", t))
    assert code == 2 and "generator" in err


def test_verify_malformed(run, tmp_path):
    assert run("verify", "-i", write(tmp_path, "t.json", {"input": {}}))[0] == 1


def test_invariants(run, tmp_path):
    code, out, _ = run("invariants", "-i", write(tmp_path, "e.json", unit_E().to_json()))
    assert code == 0
    assert json.loads(out) == {"trace": 3.0, "inner_square": 3.0, "sigma": 3.0, "det": 1.0}
    out = json.loads(run("invariants", "-i", write(tmp_path, "x0.json", counterexample_X0().to_json()))[1])
    assert out["inner_square"] == -2.0
    out = json.loads(run("invariants", "-i", write(tmp_path, "z.json", JordanElement.zero().to_json()))[1])
    assert out == {"trace": 0.0, "inner_square": 0.0, "sigma": 0.0, "det": 0.0}


def test_split_check(run, tmp_path):
    code, out, _ = run("split-check", "-i", write(tmp_path, "x0.json", counterexample_X0().to_json()))
    assert code == 0
    assert json.loads(out) == {"inner_square": -2.0, "verdict": "obstructed"}
    assert run("split-check", "-i", write(tmp_path, "e.json", unit_E().to_json()))[0] == 3


def test_selftest(run):
    code, out, _ = run("selftest")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_transcript_round_trip_100(run, tmp_path):
    for seed in range(100):
        x = run("random", "--seed", str(seed))[1]
        code, t, _ = run("diagonalize", "-i", write(tmp_path, "x.json", json.loads(x)))
        assert code == 0
        t_path = tmp_path / "t.json"
        t_path.write_text(t)
        assert run("verify", "-i", str(t_path))[0] == 0, seed


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "albertdiag", "random", "--seed", "7"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["algebra"] == "compact"
