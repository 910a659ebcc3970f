import json
import re
import subprocess
import sys
from fractions import Fraction as F
from math import gcd

import pytest

from chiralsmooth.cli import main
from chiralsmooth.lattice import area, weighted_count_bruteforce


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def lattice_sigma(s, q, m, r):
    x, y = (s // m) * r, F(q * r, m)
    return 4 * (area(x, y) - weighted_count_bruteforce(x, y))


def check_verdict_json(v):
    """Independent re-verification of a serialized verdict."""
    forms = [(f["s"], f["q"], f["sign"]) for f in v["forms"]]
    for w in v["witnesses"]:
        m, t1, t2 = map(int, re.fullmatch(r"\((\d+); (\d+), (\d+)\)", w["candidate"]).groups())
        r = w["r"]
        total, orders = F(0), []
        for (s, q, sign), t in zip(forms, (t1, t2)):
            t = r * t % m
            mi = 1 if t == 0 else m // gcd(t, m)
            orders.append(mi)
            if mi > 1:
                total += sign * lattice_sigma(s, q, mi, t // (m // mi))
        cm = m // gcd(r, m)
        bound = 3 + F(cm + 1 - cm // orders[0] - cm // orders[1], cm - 1)
        assert F(w["value"]) == total
        assert F(w["bound"]) == bound
        assert abs(total) > bound
        assert w["context"] == {"m": cm, "m1": orders[0], "m2": orders[1]}
    for e in v["survivor_orbit"]:
        assert abs(F(e["value"])) <= F(e["bound"])


def test_sigma_table(capsys):
    code, out, _ = run(capsys, "sigma", "--s", "17", "--q", "2", "--order", "17")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()[1:]]
    assert len(rows) == 16
    want = ["-13/17", "-35/17", "-49/17", "-55/17", "-53/17", "-43/17", "-25/17", "1/17"]
    assert [r[1] for r in rows[:8]] == want


def test_sigma_single(capsys):
    assert run(capsys, "sigma", "--s", "5", "--q", "2", "--order", "5", "--r", "1")[1] == "-1/5\n"


def test_sigma_json_and_csv(capsys):
    doc = run_json(capsys, "sigma", "--s", "25", "--q", "1", "--order", "5")
    assert doc["command"] == "sigma"
    assert [(d["r"], d["sigma"]) for d in doc["result"]] == [(1, "-7"), (2, "-11"), (3, "-11"), (4, "-7")]
    code, out, _ = run(capsys, "sigma", "--s", "25", "--q", "1", "--order", "5", "--format", "csv", "--decimal", "3")
    assert out.splitlines() == ["r,sigma,approx", "1,-7,-7.000", "2,-11,-11.000", "3,-11,-11.000", "4,-7,-7.000"]


def test_sigma_stats(capsys):
    doc = run_json(capsys, "sigma", "--s", "117", "--q", "20", "--order", "39", "--stats")
    assert doc["result"]["abs_sum_min_max_surjective"] == "64/13"


def test_obstruct_torus9(capsys):
    code, out, _ = run(capsys, "obstruct", "torus2", "9")
    assert code == 0 and "NotObstructed, survivor (3; 1, 0)" in out
    v = run_json(capsys, "obstruct", "torus2", "9")["result"]
    assert v["status"] == "NotObstructed" and v["survivor"] == "(3; 1, 0)"
    assert [e["value"] for e in v["survivor_orbit"]] == ["-3", "-3"]
    check_verdict_json(v)


def test_obstruct_b117(capsys):
    v = run_json(capsys, "obstruct", "twobridge", "117", "20")["result"]
    assert v["status"] == "Obstructed" and v["reason"] == "CassonGordon"
    assert {w["order"] for w in v["witnesses"]} == {13, 39}
    check_verdict_json(v)
    code, out, _ = run(capsys, "obstruct", "twobridge", "117", "20", "--decimal", "4")
    assert "Casson-Gordon at order 13,39" in out and "value_approx" in out


@pytest.mark.parametrize("args", [("pair", "25", "1", "25", "2"), ("twobridge", "17", "2"), ("torus2", "45")])
def test_obstruct_recheck(capsys, args):
    v = run_json(capsys, "obstruct", *args)["result"]
    assert v["status"] == "Obstructed"
    check_verdict_json(v)


def test_obstruct_linking_form(capsys):
    v = run_json(capsys, "obstruct", "torus2", "3")["result"]
    assert (v["reason"], v["prime"]) == ("LinkingForm", 3)


def test_survey(capsys):
    doc = run_json(capsys, "survey", "admissible", "--max", "100")
    assert doc["result"] == [5, 9, 13, 17, 25, 29, 37, 41, 45, 49, 53, 61, 65, 73, 81, 85, 89, 97]
    rows = run_json(capsys, "survey", "torus2", "--max", "199")["result"]
    assert [r["m"] for r in rows if r["verdict"]["status"] == "NotObstructed"] == [5, 9]
    code, out, _ = run(capsys, "survey", "torus2", "--max", "3")
    assert out.splitlines()[1].split()[:3] == ["3", "Obstructed", "LinkingForm"]
    assert len(out.splitlines()) == 2


def test_neighbors(capsys):
    doc = run_json(capsys, "neighbors", "25", "8")
    hit = [n for n in doc["result"]["neighbors"] if n["result"] == "B(25,7)"]
    assert hit and hit[0]["moves"][0] == "[4,-2,2,-1,-5] entry 3: -1→0"
    assert "not a complete one" in doc["result"]["note"]
    code, out, _ = run(capsys, "neighbors", "7", "1")
    assert "[7] entry 0: 7→6" in out
    doc = run_json(capsys, "neighbors", "25", "7", "--widen")
    assert any(n["result"] == "B(25,8)" for n in doc["result"]["neighbors"])


def test_doubled(capsys):
    assert run_json(capsys, "doubled", "--sigma-1-5", "-2", "--sigma-2-5", "-2")["result"] == {"status": "Obstructed"}
    assert run_json(capsys, "doubled", "--sigma-1-5", "-2", "--sigma-2-5", "2")["result"] == {"status": "NotObstructed"}


@pytest.mark.parametrize(
    "argv",
    [
        ["sigma", "--s", "10", "--q", "5", "--order", "5"],
        ["obstruct", "torus2", "8"],
        ["neighbors", "24", "5"],
        ["doubled", "--sigma-1-5", "x", "--sigma-2-5", "0"],
        ["survey", "torus2", "--max", "1"],
        ["sigma", "--s", "5", "--q", "2", "--order", "5", "--decimal", "-1"],
    ],
)
def test_domain_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_subprocess_determinism():
    cmd = [sys.executable, "-m", "chiralsmooth", "obstruct", "pair", "25", "1", "25", "2", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["params"] == {"s1": 25, "q1": 1, "s2": 25, "q2": 2}
    bad = subprocess.run([sys.executable, "-m", "chiralsmooth", "obstruct", "torus2", "4"], capture_output=True)
    assert bad.returncode == 2 and b"error" in bad.stderr


def test_internal_error(capsys, monkeypatch):
    import chiralsmooth.cli as cli

    def boom(*a, **k):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "torus2_obstruct", boom)
    code, out, err = run(capsys, "obstruct", "torus2", "9")
    assert code == 1 and out == "" and "internal error" in err
