import io
import json
import subprocess
import sys

import pytest

from ctdom.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, json.loads(out.getvalue())


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return {
        "c6": write("c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"),
        "star": write("star.txt", "5 4\n0 1\n0 2\n0 3\n0 4\n"),
        "p5": write("p5.json", json.dumps({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]})),
        "iso": write("iso.txt", "3 1\n0 1\n"),
        "bad": write("bad.txt", "3 2\n0 1\n"),
        "sat": write("sat3.cnf", "p 3sat 3 2\n1 2 3 0\n-1 2 -3 0\n"),
        "unsat": write(
            "unsat.cnf",
            "p 3sat 3 8\n" + "".join(f"{a} {b} {c} 0\n" for a in (1, -1) for b in (2, -2) for c in (3, -3)),
        ),
        "one": write("one.cnf", "p 1in3 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0\n"),
        "badf": write("bad.cnf", "p 3sat 3 1\n1 2 0\n"),
    }


def test_ct_both(files):
    code, rep = call("ct", files["c6"], "--kind", "total", "--method", "both")
    assert code == 0
    assert rep["results"]["ct"] == 1 and rep["results"]["agree"]
    assert len(rep["inputsDigest"]) == 64


def test_gamma_star(files):
    code, rep = call("gamma", files["star"], "--kind", "total")
    assert code == 0 and rep["results"]["gamma"] == 2


def test_gamma_json_input(files):
    code, rep = call("gamma", files["p5"], "--kind", "semitotal")
    assert code == 0 and rep["results"]["gamma"] == 2


def test_gadget_full(files):
    code, rep = call("gadget", "build", "--kind", "td2p4", "--formula", files["sat"], "--verify", "full", "--brief")
    assert code == 0
    exact = rep["results"]["bundles"][0]["exact"]
    assert exact["gamma"] == 6 and exact["ct"] == 2


def test_gadget_unsat_full(files):
    code, rep = call("gadget", "build", "--kind", "stdlongpaw", "--formula", files["unsat"], "--verify", "full")
    assert code == 0
    assert not rep["results"]["satisfiable"]
    assert rep["results"]["bundles"][0]["exact"]["gamma"] > 6


def test_gadget_cert_large(files):
    code, rep = call("gadget", "build", "--kind", "tdclawk3", "--formula", files["one"], "--verify", "cert", "--brief")
    assert code == 0
    entry = rep["results"]["bundles"][0]
    assert entry["classCheck"]["holds"] and entry["localClaims"]["violated"] == []


def test_hfree_and_classify(files):
    code, rep = call("hfree", files["c6"], "--pattern", "P4")
    assert code == 0 and not rep["results"]["free"]
    code, rep = call("classify", "--pattern", "P4+2P3", "--kind", "total", "--k", "2")
    assert code == 0 and rep["results"]["verdict"] == "PolynomialTime"


def test_subdivide_check(files):
    code, rep = call("subdivide", files["p5"], "--check")
    assert code == 0
    check = rep["results"]["check"]
    assert check["gammaShift"] and check["transforms"] and check["ctEqual"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (("gamma", "{bad}", "--kind", "total"), 2),
        (("gamma", "{missing}", "--kind", "total"), 2),
        (("gadget", "build", "--kind", "td2p4", "--formula", "{badf}"), 2),
        (("gamma", "{c6}", "--kind", "nonsense"), 2),
        (("gamma", "{iso}", "--kind", "total"), 3),
        (("ct", "{star}", "--kind", "total"), 3),
        (("gadget", "build", "--kind", "stdc3c4", "--formula", "{sat}"), 3),
        (("ct", "{c6}", "--kind", "total", "--method", "both", "--max-nodes", "3"), 5),
    ],
)
def test_exit_codes(files, argv, code, tmp_path):
    files = dict(files, missing=str(tmp_path / "nope.txt"))
    args = [a.format(**files) for a in argv]
    out = io.StringIO()
    assert run(args, stdout=out) == code


def test_disagreement_exit(files, monkeypatch):
    import ctdom.cli as cli
    from ctdom.contraction import CtResult

    monkeypatch.setattr(cli, "ct_bruteforce", lambda G, kind, budget: CtResult(3, 4))
    code, rep = call("ct", files["c6"], "--kind", "total", "--method", "both")
    assert code == 4 and rep["results"]["agree"] is False


def test_deterministic_apart_from_timings(files):
    a = call("selftest", "--suite", "dichotomy", "--seed", "3")[1]
    b = call("selftest", "--suite", "dichotomy", "--seed", "3")[1]
    for r in (a, b):
        r.pop("timings")
        for s in r["results"]["suites"]:
            s.pop("seconds")
    assert a == b and a["seed"] == 3


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "ctdom", "gamma", files["c6"], "--kind", "total"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["gamma"] == 4
