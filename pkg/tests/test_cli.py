import json
import subprocess
import sys

import pytest

from symsimp import audit, cli
from symsimp.audit import AuditReport, Violation
from symsimp.fin import make_map
from symsimp.words import parse, render


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_example(capsys):
    code, out, _ = run(capsys, "eval", "d2 u2", "--at", "2", "--json")
    assert code == 0
    js = json.loads(out)
    assert js["table"] == [0, 1, 2] and js["chain"] == [2, 3, 2]
    assert make_map(js["dom"], js["cod"], js["table"]).table == (0, 1, 2)


def test_factor_example(capsys):
    code, out, _ = run(capsys, "factor", "--map", "0,2,0,0,3", "--cod", "3", "--mode", "qm", "--json")
    assert code == 0
    js = json.loads(out)
    assert js["alpha"] == [1] and js["beta"] == [2, 3]
    assert render(parse(js["word"])) == js["word"]


def test_factor_general_json_has_pi(capsys):
    code, out, _ = run(capsys, "factor", "--map", "1,1,0", "--cod", "1", "--mode", "general", "--json")
    assert code == 0
    js = json.loads(out)
    assert set(js) >= {"alpha", "beta", "pi"}
    parse(js["pi"])


def test_u0_is_exit_1_with_index_message(capsys):
    code, out, err = run(capsys, "eval", "u0", "--at", "2")
    assert code == 1 and out == ""
    assert "IndexError" in err or "not defined" in err


EXIT_CASES = [
    # eval
    (["eval", "t0 t0", "--at", "2"], 0),
    (["eval", "q1", "--at", "2"], 1),
    (["eval", "d1"], 1),
    (["eval", "u3", "--at", "1"], 2),
    (["eval", "", "--at", "-1"], 2),
    # normalize
    (["normalize", "d1 u2"], 0),
    (["normalize", "d1 u"], 1),
    (["normalize", "d0 u1"], 2),
    (["normalize", "u3", "--at", "1"], 2),
    # factor
    (["factor", "--map", "0,1", "--cod", "1"], 0),
    (["factor", "--map", "0,a", "--cod", "1"], 1),
    (["factor", "--map", "0,5", "--cod", "1"], 1),
    (["factor", "--map", "0,1", "--cod", "1", "--mode", "weird"], 1),
    (["factor", "--map", "1,0", "--cod", "1"], 2),
    (["factor", "--map", "1,0", "--cod", "1", "--mode", "monotone"], 2),
    (["factor", "--map", "1,0", "--cod", "1", "--mode", "general"], 0),
    # translate
    (["translate", "u2", "--target", "ds"], 0),
    (["translate", "u2", "--target", "xx"], 1),
    (["translate", "u2 z3''", "--target", "du"], 1),
    # audit
    (["audit", "--family", "moore", "--max-dim", "3"], 0),
    (["audit", "--family", "nope"], 1),
    (["audit", "--family", "moore", "--check", "generation"], 1),
    (["audit", "--check", "push_perm", "--max-n", "3", "--max-len", "2"], 0),
    # count
    (["count", "2", "2"], 0),
    (["count", "2"], 1),
    (["count", "-1", "2"], 1),
    # top level
    ([], 1),
    (["frobnicate"], 1),
]


@pytest.mark.parametrize("argv, code", EXIT_CASES, ids=[" ".join(a) or "<none>" for a, _ in EXIT_CASES])
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    if code:
        assert err and not out


def test_audit_violations_exit_3(capsys, monkeypatch):
    bad = AuditReport("moore", 1, [Violation("forced", (0,), (1,))])
    monkeypatch.setattr(audit, "audit_family", lambda name, max_dim, mutate=None: bad)
    code, out, _ = run(capsys, "audit", "--family", "moore", "--json")
    assert code == 3
    js = json.loads(out)
    assert js["reports"][0]["violations"][0]["lhs"] == [0]


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "3", "2", "--json")
    assert code == 0 and json.loads(out)["count"] == 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symsimp", "count", "2", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "6"
    proc = subprocess.run([sys.executable, "-m", "symsimp", "eval", "u0", "--at", "2"], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == ""
