"""Acceptance criteria, one PASS/FAIL line each (see the terminal summary)."""

import itertools
import json
import time
from math import comb, factorial

from symsimp import audit, cli
from symsimp.factor import push_perm
from symsimp.fin import MultiIndex
from symsimp.relations import RuleInstance, instantiate
from symsimp.words import evaluate, parse, render, translate

REQUIRED_FAMILIES = {
    "cosimplicial", "simplicial", "grandis", "quasi", "moore",
    "conjinsym", "dzzds", "zuuzs", "uus", "replacement", "push_through",
}


def test_criterion_1_relation_soundness(capsys, report_line):
    t0 = time.perf_counter()
    code = cli.main(["audit", "--family", "all", "--max-dim", "8", "--json"])
    elapsed = time.perf_counter() - t0
    reports = json.loads(capsys.readouterr().out)["reports"]
    names = {r["family"] for r in reports}
    checked = sum(r["checked"] for r in reports)
    bad = sum(len(r["violations"]) for r in reports)
    empty = [r["family"] for r in reports if r["checked"] == 0]
    ok = code == 0 and bad == 0 and REQUIRED_FAMILIES <= names and not empty and elapsed < 300
    report_line(1, ok, f"{len(names)} families, {checked} instances, {bad} violations, {elapsed:.1f}s (limit 300s)")
    assert ok


def test_criterion_2_unique_factorization(report_line):
    rep = audit.audit_unique_factorization(5, 5)
    qm_pairs = sum(count_qm_cell for count_qm_cell in
                   (audit.count_qm(n, m) for n in range(6) for m in range(6)))
    ok = rep.passed
    report_line(2, ok, f"qOrd and Ord bijections for n,m <= 5: {rep.instances_checked} pairs "
                       f"({qm_pairs} quasi-monotonic), {len(rep.violations)} violations")
    assert ok


def test_criterion_3_counting(report_line):
    cells = [(n, m) for n in range(7) for m in range(7)]
    bad = [(n, m) for n, m in cells
           if not audit.count_qm(n, m) == audit.count_qm_enumerated(n, m) == comb(n + m, n)]
    brute = audit.count_qm_bruteforce(2, 2)
    ok = not bad and audit.count_qm(2, 2) == 6 == brute
    report_line(3, ok, f"{len(cells) - len(bad)}/{len(cells)} cells agree with enumeration and C(n+m,n); "
                       f"count_qm(2,2)={audit.count_qm(2, 2)}, brute force {brute}")
    assert ok


def test_criterion_4_generation(report_line):
    rep = audit.audit_generation(4, 4)
    n_maps = sum((m + 1) ** (n + 1) for n in range(5) for m in range(5))
    n_perms = sum(factorial(n + 1) for n in range(5))
    ok = rep.passed and rep.instances_checked == n_maps + n_perms
    report_line(4, ok, f"{n_maps} maps via factor_general+translate and {n_perms} permutations via t-words, "
                       f"{len(rep.violations)} violations")
    assert ok


def test_criterion_5_normal_forms(report_line):
    rep = audit.audit_normal_forms(6, 6)
    ok = rep.passed and rep.instances_checked > 0
    report_line(5, ok, f"{rep.instances_checked} d/u words (length <= 6, anchors <= 6): "
                       f"bound, value, idempotence, uniqueness; {len(rep.violations)} violations")
    assert ok


def test_criterion_6_translation(report_line):
    rep = audit.audit_translation(4, 5)
    exact = render(translate("u1", "ds")) == "s0" and render(translate("s0", "du")) == "u1"
    ok = rep.passed and exact
    report_line(6, ok, f"{rep.instances_checked} words (length <= 4, anchors <= 5) both targets, "
                       f"{len(rep.violations)} violations; u1 <-> s0 exact: {exact}")
    assert ok


def _image(pi, n, gamma):
    p = evaluate(pi, n)
    return MultiIndex.of(p(g) for g in gamma)


def test_criterion_7_push_perm(report_line):
    # word equality, pi' fixing 0 and the preimage orientation are checked by the audit
    rep = audit.audit_push_perm(5, 4)
    # the criterion additionally asks for gamma' to be the eval(pi)-image of gamma
    total = differ = 0
    for n in range(1, 6):
        pis = list(audit.t_words(n - 1, 4))
        for k in range(n + 1):
            for g in itertools.combinations(range(1, n + 1), k):
                gamma = MultiIndex(g)
                for pi in pis:
                    total += 1
                    if push_perm(pi, gamma)[0] != _image(pi, n, gamma):
                        differ += 1
    ok = rep.passed and differ == 0
    report_line(7, ok, f"{rep.instances_checked} instances: word equality and pi' fixing 0 hold "
                       f"({len(rep.violations)} violations); gamma' equals the eval(pi)-image in "
                       f"{total - differ}/{total}, the preimage in all")
    assert ok


def _negative_control():
    label = "t_it_{i+1}t_i"

    def mutate(inst):
        if inst.case_label.startswith(label):
            return RuleInstance(inst.lhs, inst.rhs + parse("t0"), inst.anchor_dim, inst.family, inst.case_label)
        return inst

    expected = {str(mutate(i)) for i in instantiate("moore", 6) if i.case_label.startswith(label)}
    rep = audit.audit_family("moore", 6, mutate=mutate)
    return {v.description for v in rep.violations} == expected and len(expected) > 0


CLI_CONTRACT = {
    "eval": [(["eval", "d2 u2", "--at", "2"], 0), (["eval", "u0", "--at", "2"], 1),
             (["eval", "u3", "--at", "1"], 2)],
    "normalize": [(["normalize", "d1 u2"], 0), (["normalize", "x1"], 1), (["normalize", "d0 u1"], 2)],
    "factor": [(["factor", "--map", "0,2,0,0,3", "--cod", "3"], 0),
               (["factor", "--map", "0,9", "--cod", "3"], 1),
               (["factor", "--map", "1,2,0", "--cod", "2"], 2)],
    "translate": [(["translate", "u2", "--target", "ds"], 0), (["translate", "u2"], 1)],
    "audit": [(["audit", "--family", "uus", "--max-dim", "3"], 0), (["audit", "--family", "bogus"], 1)],
    "count": [(["count", "2", "2"], 0), (["count", "two", "2"], 1)],
}


def test_criterion_8_tooling(capsys, report_line, monkeypatch):
    rt = audit.audit_roundtrip(4, 5)
    failures = []
    for sub, cases in CLI_CONTRACT.items():
        for argv, want in cases:
            got = cli.main(argv)
            if got != want:
                failures.append(f"{' '.join(argv)} -> {got}, want {want}")
    # exit 3: feed the CLI a mutated audit
    real = audit.audit_family
    monkeypatch.setattr(audit, "audit_family", lambda name, d, mutate=None: real(
        name, d, mutate=lambda i: RuleInstance(i.lhs, i.rhs + parse("t0"), i.anchor_dim, i.family, i.case_label)))
    if cli.main(["audit", "--family", "moore", "--max-dim", "3"]) != 3:
        failures.append("mutated audit did not exit 3")
    monkeypatch.undo()
    capsys.readouterr()
    neg = _negative_control()
    ok = rt.passed and not failures and neg
    report_line(8, ok, f"round-trip {rt.instances_checked} words, {len(rt.violations)} violations; "
                       f"CLI exit contract {len(failures)} mismatches over {len(CLI_CONTRACT)} subcommands; "
                       f"negative control exact: {neg}")
    assert ok, failures
