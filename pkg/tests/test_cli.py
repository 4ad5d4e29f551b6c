import json
import math

import numpy as np
import pytest

from eqdist.cli import render_json, run
from eqdist.space import PointSet, Space


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound_best_thm14(capsys):
    code, out, _ = _run(capsys, "bound", "--space", "lpsum:blocks=2,3,p=inf",
                        "--s", "1", "--best")
    assert code == 0
    rep = json.loads(out)
    assert rep["value"] == 13 and rep["source"] == "thm1.4"


def test_bound_enumerate_json(capsys):
    code, out, _ = _run(capsys, "bound", "--space", "lp:n=5,p=4")
    assert code == 0
    reps = json.loads(out)
    assert any(r["source"] == "swanepoel-even-p" and r["value"] == 6 for r in reps)


def test_bound_c_flag(capsys):
    code, out, _ = _run(capsys, "bound", "--space", "lp:n=2,p=4", "--c", "2.05")
    assert code == 0
    reps = json.loads(out)
    t12 = [r for r in reps if r["source"] == "thm1.2"]
    assert t12 and t12[0]["value"] == 20


def test_construct_cross_polytope(capsys):
    code, out, _ = _run(capsys, "construct", "cross-polytope", "--n", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["space"] == "lp:n=3,p=1" and len(obj["points"]) == 6


def test_construct_verify_roundtrip(tmp_path, capsys):
    cases = [("cross-polytope", ["--n", "4"]),
             ("lp-simplex", ["--n", "3", "--p", "2.5"]),
             ("euclidean-simplex", ["--n", "4"]),
             ("product", ["--a", "2", "--b", "2"])]
    for kind, flags in cases:
        code, out, _ = _run(capsys, "construct", kind, *flags)
        assert code == 0
        f = tmp_path / f"{kind}.json"
        f.write_text(out)
        code, out, _ = _run(capsys, "verify", "--points", str(f))
        assert code == 0, (kind, out)
        assert json.loads(out)["equilateral"] is True


def test_verify_duplicate_point(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"space": "lp:n=2,p=2",
                             "points": [[0, 0], [0, 0], [1, 0]]}))
    code, out, err = _run(capsys, "verify", "--points", str(f))
    assert code == 2
    assert "zero distance present" in err


def test_verify_non_equilateral(tmp_path, capsys):
    f = tmp_path / "sq.json"
    f.write_text(json.dumps({"space": "lp:n=2,p=2",
                             "points": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
    code, out, _ = _run(capsys, "verify", "--points", str(f))
    assert code == 2
    assert json.loads(out)["equilateral"] is False


def test_certify_cli(tmp_path, capsys):
    code, out, _ = _run(capsys, "construct", "product", "--a", "2", "--b", "1")
    f = tmp_path / "prod.json"
    f.write_text(out)
    code, out, _ = _run(capsys, "certify", "--points", str(f), "--theorem", "thm3")
    assert code == 0
    assert json.loads(out)["passes"] is True
    # a failing certificate exits 2 but still reports
    code, out, _ = _run(capsys, "construct", "cross-polytope", "--n", "2")
    g = tmp_path / "cp.json"
    g.write_text(out)
    code, out, err = _run(capsys, "certify", "--points", str(g), "--theorem", "thm1")
    assert code == 2
    assert json.loads(out)["passes"] is False


def test_certify_flags(tmp_path, capsys):
    f = tmp_path / "pair.json"
    f.write_text(json.dumps({"space": "lp:n=1,p=2", "points": [[0], [1]]}))
    code, out, _ = _run(capsys, "certify", "--points", str(f),
                        "--theorem", "thm2", "--c", "6")
    assert code == 0
    rep = json.loads(out)
    assert rep["passes"] and "degree d=3" in " ".join(rep["notes"])


def test_approx_cli_schema(capsys):
    code, out, _ = _run(capsys, "approx", "--p", "1", "--d", "6")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"p", "d", "coefficients", "measured_error", "jackson_bound"}
    assert len(rep["coefficients"]) == 3
    assert rep["measured_error"] <= rep["jackson_bound"]


def test_search_cli_deterministic(capsys):
    args = ("search", "--space", "lp:n=2,p=2", "--m", "3",
            "--restarts", "4", "--seed", "11", "--target", "1e-8")
    code1, out1, _ = _run(capsys, *args)
    code2, out2, _ = _run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    rep = json.loads(out1)
    assert rep["converged"] is True and rep["residual"] < 1e-8


def test_search_cli_nonconverged(capsys):
    code, out, err = _run(capsys, "search", "--space", "lp:n=2,p=2", "--m", "4",
                          "--restarts", "3", "--seed", "1")
    assert code == 2
    assert json.loads(out)["converged"] is False
    assert "did not converge" in err


def test_input_errors_exit_1(capsys):
    assert _run(capsys, "bound", "--space", "l2:n=3,p=2")[0] == 1
    assert _run(capsys, "bound", "--space", "lp:n=3,p=2", "--nope")[0] == 1
    assert _run(capsys, "verify", "--points", "/no/such/file.json")[0] == 1
    assert _run(capsys, "approx", "--p", "2.5", "--d", "2")[0] == 1
    code, _, err = _run(capsys, "construct", "lp-simplex", "--n", "3")
    assert code == 1 and "lp-simplex needs" in err


def test_formats(capsys):
    code, out, _ = _run(capsys, "bound", "--space", "lp:n=3,p=2", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("side,")
    code, out, _ = _run(capsys, "bound", "--space", "lp:n=3,p=2",
                        "--best", "--format", "text")
    assert code == 0 and "value: 4" in out


def test_eqd_config_env(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "eqd.cfg"
    cfg.write_text("c_absolute = 2.05\n")
    monkeypatch.setenv("EQD_CONFIG", str(cfg))
    code, out, _ = _run(capsys, "bound", "--space", "lp:n=2,p=4")
    assert code == 0
    assert any(r["source"] == "thm1.2" for r in json.loads(out))
    monkeypatch.setenv("EQD_CONFIG", str(tmp_path / "missing.cfg"))
    assert _run(capsys, "bound", "--space", "lp:n=2,p=4")[0] == 1


def test_render_json_17_digits():
    s = render_json({"x": 0.1, "y": 1.0, "z": [1, True, None, "s"]})
    obj = json.loads(s)
    assert obj["x"] == 0.1 and obj["y"] == 1.0
    assert "0.10000000000000001" in s and "1.0" in s


def test_seventeen_digit_roundtrip():
    rng = np.random.default_rng(3)
    vals = list(rng.normal(size=50)) + [1e-300, 1e300, -0.0, 3.0]
    s = render_json({"v": [float(v) for v in vals]})
    back = json.loads(s)["v"]
    assert all(a == b for a, b in zip(back, vals))
