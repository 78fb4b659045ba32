import json

import pytest

from dynmono import format_instance, knapsack
from dynmono.cli import main, run_check

from conftest import path, star


@pytest.fixture
def files(tmp_path):
    p3 = tmp_path / "p3_tau2.json"
    p3.write_text(format_instance(path(3, 2)))
    p3b = tmp_path / "p3_tau1.json"
    p3b.write_text(format_instance(path(3, 1)))
    s5 = tmp_path / "star5_tau1.json"
    s5.write_text(format_instance(star(5, 1)))
    return {"p3": str(p3), "p3_1": str(p3b), "star": str(s5), "dir": tmp_path}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_vacc1_witness(files, capsys):
    code, out, _ = run(capsys, "solve", "vacc1", files["p3"], "--budget", "1", "--witness")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == 3 and rep["witness"] == [1]
    assert rep["problem"] == "vacc1" and rep["certified"] is False and "timing" in rep
    assert out.count("\n") == 1


def test_solve_dyn(files, capsys):
    code, out, _ = run(capsys, "solve", "dyn", files["p3"])
    assert code == 0 and json.loads(out)["value"] == 2
    code, out, _ = run(capsys, "solve", "dyn", files["p3"], "--certify")
    rep = json.loads(out)
    assert rep["witness"] == [0, 2] and rep["certified"] is True


def test_solve_vacc2_witness_certified(files, capsys):
    code, out, _ = run(capsys, "solve", "vacc2", files["star"], "--budget", "1", "--witness", "--certify")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == 4 and rep["witness"] == [0] and rep["certified"] is True


def test_solve_root_and_pretty(files, capsys):
    code, out, _ = run(capsys, "solve", "vacc1", files["p3"], "--budget", "1", "--root", "2", "--certify", "--pretty")
    rep = json.loads(out)
    assert rep["value"] == 3 and rep["certified"] is True and out.count("\n") > 2


def test_solve_infeasible_budget(files, capsys):
    code, out, _ = run(capsys, "solve", "vacc2", files["p3"], "--budget", "4", "--witness")
    rep = json.loads(out)
    assert code == 3 and rep["value"] == "-inf" and "witness" not in rep


def test_solve_budget_from_instance(files, capsys, tmp_path):
    f = tmp_path / "b.json"
    f.write_text(format_instance(path(3, 2).with_budget(1)))
    code, out, _ = run(capsys, "solve", "vacc1", f)
    assert json.loads(out)["value"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "vacc1", "{missing}"],
        ["solve", "vacc1", "{bad}", "--budget", "1"],
        ["solve", "vacc1", "{p3}"],
        ["solve", "vacc1", "{p3}", "--budget", "1", "--root", "7"],
        ["solve", "nonsense", "{p3}"],
        ["hull", "{p3}", "5"],
        ["gen", "4", "--profile", "star"],
        ["check", "--max-n", "30"],
    ],
)
def test_input_errors_exit_2(files, capsys, argv):
    bad = files["dir"] / "bad.json"
    bad.write_text('{"n":3,"edges":[[0,1],[0,2],[1,2]],"tau":[1,1,1]}')
    subs = {"missing": files["dir"] / "nope.json", "bad": bad, "p3": files["p3"]}
    code, _, _ = run(capsys, *[a.format(**subs) for a in argv])
    assert code == 2


def test_hull(files, capsys):
    code, out, _ = run(capsys, "hull", files["p3_1"], "0")
    assert json.loads(out) == {"problem": "hull", "hull": [0, 1, 2], "is_monopoly": True}
    code, out, _ = run(capsys, "hull", files["p3"], "1")
    assert json.loads(out)["hull"] == [1] and not json.loads(out)["is_monopoly"]
    code, out, _ = run(capsys, "hull", files["p3"])
    assert json.loads(out)["hull"] == [] and code == 0


def test_gen_reproducible(capsys, tmp_path):
    _, a, _ = run(capsys, "gen", "12", "--profile", "mixed-inf:0.2", "--seed", "5")
    _, b, _ = run(capsys, "gen", "12", "--profile", "mixed-inf:0.2", "--seed", "5")
    assert a == b and json.loads(a)["n"] == 12
    _, one, _ = run(capsys, "gen", "1")
    assert json.loads(one) == {"n": 1, "edges": [], "tau": [1]}
    out = tmp_path / "g.json"
    run(capsys, "gen", "6", "--budget", "2", "--out", out)
    assert json.loads(out.read_text())["budget"] == 2


def test_check_passes(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "--count", "100", "--max-n", "8", "--seed", "42", "--out", tmp_path / "cx.json")
    assert code == 0
    assert out.strip().endswith("100/100 vacc1 ok, 100/100 vacc2 ok")
    assert not (tmp_path / "cx.json").exists()


def test_check_trivial(capsys):
    code, out, _ = run(capsys, "check", "--count", "1", "--min-n", "1", "--max-n", "1")
    assert code == 0 and "1/1 vacc1 ok, 1/1 vacc2 ok" in out


def test_check_reproducible(capsys):
    _, a, _ = run(capsys, "check", "--count", "20", "--seed", "3")
    _, b, _ = run(capsys, "check", "--count", "20", "--seed", "3")
    assert a == b


def test_check_catches_threshold_mutation(monkeypatch, tmp_path, capsys):
    # clamp the free-children threshold at 1 instead of 0
    def mutated(tau_u, j, k):
        return k + 1 if tau_u == float("inf") else max(int(tau_u) - j, 1)

    monkeypatch.setattr(knapsack, "effective_threshold", mutated)
    cx = tmp_path / "cx.json"
    code = run_check(60, 1, 7, "choice:0,1,2,3,inf", 1, str(cx))
    out = capsys.readouterr().out
    assert code == 1
    assert "solver" in out and "oracle" in out
    assert json.loads(cx.read_text())["n"] >= 1
