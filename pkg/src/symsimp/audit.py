"""
Brute-force oracle: exhaustive desk-scale verification.

Every check returns an :class:`AuditReport` carrying the number of
instances inspected and, for each failure, the value tables of both sides.
Bounds are arguments, not constants.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterator, Optional

import numpy as np

from .factor import (
    factor_general,
    factor_monotone,
    factor_qm,
    perm_to_word,
    push_perm,
)
from .fin import (
    FinMap,
    MultiIndex,
    _generator,
    classify,
    compose,
    index_range,
    invert,
    multi_d,
    multi_u,
)
from .relations import (
    family_names,
    instantiate,
    is_qord_normal,
    normalize_qord,
    step_bound,
)
from .words import (
    DIM_SHIFT,
    Gen,
    Word,
    canonical_spelling,
    evaluate,
    parse,
    render,
    translate,
    try_evaluate,
    u_spelling,
)


@dataclass(frozen=True)
class Violation:
    description: str
    lhs_table: Optional[tuple] = None
    rhs_table: Optional[tuple] = None

    def to_json(self):
        return {
            "instance": self.description,
            "lhs": None if self.lhs_table is None else list(self.lhs_table),
            "rhs": None if self.rhs_table is None else list(self.rhs_table),
        }


@dataclass
class AuditReport:
    family_or_check: str
    instances_checked: int = 0
    violations: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "AuditReport", name: Optional[str] = None) -> "AuditReport":
        return AuditReport(
            name or self.family_or_check,
            self.instances_checked + other.instances_checked,
            self.violations + other.violations,
            self.elapsed + other.elapsed,
        )

    def to_json(self):
        return {
            "family": self.family_or_check,
            "checked": self.instances_checked,
            "violations": [v.to_json() for v in self.violations],
            "elapsed": round(self.elapsed, 6),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.family_or_check}: {status}, {self.instances_checked} checked, {self.elapsed:.2f}s"


class _Timer:
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed = time.perf_counter() - self.t0
        return False


def _table(f):
    return None if f is None else f.table


# -- enumeration and counting ---------------------------------------------------

def enumerate_maps(n: int, m: int) -> Iterator[FinMap]:
    """All ``(m+1)**(n+1)`` functions ``[n] -> [m]``, lexicographic by table."""
    for tab in itertools.product(range(m + 1), repeat=n + 1):
        yield FinMap._trusted(n, m, tab)


def all_tables(n: int, m: int) -> np.ndarray:
    """Array of shape ``((m+1)**(n+1), n+1)`` holding every table, lexicographic."""
    grids = np.indices((m + 1,) * (n + 1), dtype=np.int16)
    return grids.reshape(n + 1, -1).T


def qm_mask(tables: np.ndarray) -> np.ndarray:
    """Vectorized quasi-monotonicity test, one row per map.

    QM2 holds iff every nonzero value exceeds all values to its left (zeros
    never exceed anything, and f(0) = 0 by QM1).
    """
    ok = tables[:, 0] == 0
    running = np.maximum.accumulate(tables, axis=1)
    for q in range(1, tables.shape[1]):
        col = tables[:, q]
        ok &= (col == 0) | (col > running[:, q - 1])
    return ok


def count_qm(n: int, m: int) -> int:
    """Number of quasi-monotonic maps ``[n] -> [m]``: pairs of face / quasi-degeneracy
    index sets of matching rank."""
    return sum(comb(n, r) * comb(m, r) for r in range(min(n, m) + 1))


def count_qm_enumerated(n: int, m: int) -> int:
    return int(qm_mask(all_tables(n, m)).sum())


def count_qm_bruteforce(n: int, m: int) -> int:
    return sum(1 for f in enumerate_maps(n, m) if classify(f).quasi_monotonic)


# -- relation families ------------------------------------------------------------

def check_instances(name: str, instances, mutate: Optional[Callable] = None) -> AuditReport:
    report = AuditReport(name)
    with _Timer(report):
        for inst in instances:
            if mutate is not None:
                inst = mutate(inst)
            lhs = try_evaluate(inst.lhs, inst.anchor_dim)
            rhs = try_evaluate(inst.rhs, inst.anchor_dim)
            report.instances_checked += 1
            if lhs is None or rhs is None or lhs != rhs:
                report.violations.append(Violation(str(inst), _table(lhs), _table(rhs)))
    return report


def audit_family(family: str, max_dim: int, mutate: Optional[Callable] = None) -> AuditReport:
    """Evaluate both sides of every instance of ``family`` up to ``max_dim``.

    ``mutate`` (instance -> instance) is a hook for negative controls.
    """
    insts = instantiate(family, max_dim)
    return check_instances(family, insts, mutate)


def audit_all_families(max_dim: int) -> list:
    return [audit_family(name, max_dim) for name in family_names()]


# -- factorization -------------------------------------------------------------

def _subsets(n):
    for k in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), k)


def audit_unique_factorization(max_n: int, max_m: int) -> AuditReport:
    """Bijection checks for ``(alpha, beta) -> d_alpha u_beta`` (qOrd) and for
    the monotone factorization (Ord), cell by cell over ``n <= max_n, m <= max_m``."""
    report = AuditReport("unique_factorization")
    with _Timer(report):
        for n in range(max_n + 1):
            for m in range(max_m + 1):
                _qm_cell(n, m, report)
                _ord_cell(n, m, report)
    return report


def _qm_cell(n, m, report):
    hit = {}
    for beta in _subsets(n):
        alpha_len = m - (n - len(beta))
        if alpha_len < 0:
            continue
        for alpha in itertools.combinations(range(1, m + 1), alpha_len):
            f = compose(multi_d(m, alpha), multi_u(n, beta))
            report.instances_checked += 1
            desc = f"qm [{n}]->[{m}] alpha={list(alpha)} beta={list(beta)}"
            if not classify(f).quasi_monotonic:
                report.violations.append(Violation(desc + ": not quasi-monotonic", f.table))
            if f.table in hit:
                report.violations.append(Violation(desc + f": collides with {hit[f.table]}", f.table))
            hit[f.table] = (alpha, beta)
            fac = factor_qm(f)
            if (fac.alpha.indices, fac.beta.indices) != (alpha, beta):
                report.violations.append(Violation(desc + ": factor_qm does not invert", f.table))
    for f in enumerate_maps(n, m):
        if classify(f).quasi_monotonic and f.table not in hit:
            report.violations.append(Violation(f"qm [{n}]->[{m}] map not reached", f.table))
    if len(hit) != count_qm(n, m):
        report.violations.append(Violation(f"qm [{n}]->[{m}]: {len(hit)} maps hit, expected {count_qm(n, m)}"))


def _ord_cell(n, m, report):
    hit = {}
    for k in range(n + 1):
        for beta in itertools.combinations(range(n), k):
            alpha_len = m - (n - k)
            if alpha_len < 0:
                continue
            for alpha in itertools.combinations(range(m + 1), alpha_len):
                spelled = Word([Gen("s", j) for j in reversed(beta)] + [Gen("d", i) for i in alpha])
                report.instances_checked += 1
                desc = f"ord [{n}]->[{m}] alpha={list(alpha)} beta={list(beta)}"
                f = try_evaluate(spelled, n)
                if f is None:
                    report.violations.append(Violation(desc + ": spelling does not typecheck"))
                    continue
                if not classify(f).monotonic:
                    report.violations.append(Violation(desc + ": not monotonic", f.table))
                if f.table in hit:
                    report.violations.append(Violation(desc + f": collides with {hit[f.table]}", f.table))
                hit[f.table] = (alpha, beta)
                fac = factor_monotone(f)
                if (fac.alpha, fac.beta) != (alpha, beta):
                    report.violations.append(Violation(desc + ": factor_monotone does not invert", f.table))
    for f in enumerate_maps(n, m):
        if classify(f).monotonic and f.table not in hit:
            report.violations.append(Violation(f"ord [{n}]->[{m}] map not reached", f.table))
    expected = comb(n + m + 1, n + 1)  # monotone maps [n] -> [m]
    if len(hit) != expected:
        report.violations.append(Violation(f"ord [{n}]->[{m}]: {len(hit)} maps hit, expected {expected}"))


def audit_qm_surjections(max_n: int, max_m: int) -> AuditReport:
    """No two distinct quasi-monotonic surjections share a zero set."""
    report = AuditReport("qm_surjections_by_zeros")
    with _Timer(report):
        for n in range(max_n + 1):
            for m in range(max_m + 1):
                seen = {}
                for f in enumerate_maps(n, m):
                    cls = classify(f)
                    if not (cls.quasi_monotonic and cls.surjective):
                        continue
                    report.instances_checked += 1
                    z = f.zeros()
                    if z in seen and seen[z] != f.table:
                        report.violations.append(
                            Violation(f"[{n}]->[{m}] zeros {list(z)} shared", seen[z], f.table))
                    seen[z] = f.table
    return report


# -- generation --------------------------------------------------------------

def audit_generation(max_n: int, max_m: int) -> AuditReport:
    """Every map ``[n] -> [m]`` is the value of a ``{d, u, t}`` word, and every
    permutation of ``[n]`` is the value of a ``t``-word."""
    report = AuditReport("generation")
    with _Timer(report):
        for n in range(max_n + 1):
            for m in range(max_m + 1):
                for f in enumerate_maps(n, m):
                    report.instances_checked += 1
                    ds_word = factor_general(f).spelling()
                    du_word = translate(ds_word, "du")
                    got = try_evaluate(du_word, n)
                    if not du_word.kinds() <= {"d", "u", "t"} or got != f:
                        report.violations.append(
                            Violation(f"[{n}]->[{m}] via {du_word}", _table(got), f.table))
        for n in range(max_n + 1):
            seen = set()
            for perm in itertools.permutations(range(n + 1)):
                p = FinMap._trusted(n, n, perm)
                w = perm_to_word(p)
                got = try_evaluate(w, n)
                report.instances_checked += 1
                if w.kinds() - {"t"} or got != p:
                    report.violations.append(Violation(f"perm {list(perm)} via {w}", _table(got), perm))
                if got is not None:
                    seen.add(got.table)
            if len(seen) != factorial(n + 1):
                report.violations.append(
                    Violation(f"Sym[{n}]: {len(seen)} distinct t-word values, expected {factorial(n + 1)}"))
    return report


# -- permutation push-through ------------------------------------------------------

def t_words(max_index: int, max_len: int, min_index: int = 1):
    """All words in ``t_i`` with ``min_index <= i <= max_index`` of length <= ``max_len``."""
    letters = [Gen("t", i) for i in range(min_index, max_index + 1)]
    for length in range(max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            yield Word(combo)


def audit_push_perm(max_n: int, max_len: int = 4) -> AuditReport:
    """``pi u_gamma = u_gamma' pi'`` for all zero-fixing t-words ``pi``.

    Checks value equality, that ``pi'`` is a t-word fixing 0, and that
    ``gamma'`` is the preimage of ``gamma`` under ``evaluate(pi)``.
    """
    report = AuditReport("push_perm")
    with _Timer(report):
        for n in range(1, max_n + 1):
            pis = list(t_words(n - 1, max_len))
            for gamma in _subsets(n):
                gamma = MultiIndex(gamma)
                for pi in pis:
                    report.instances_checked += 1
                    gamma2, pi2 = push_perm(pi, gamma)
                    lhs = try_evaluate(pi + u_spelling(gamma), n)
                    rhs = try_evaluate(u_spelling(gamma2) + pi2, n)
                    desc = f"n={n} pi='{pi}' gamma={gamma!r} -> gamma'={gamma2!r} pi'='{pi2}'"
                    if lhs is None or lhs != rhs:
                        report.violations.append(Violation(desc, _table(lhs), _table(rhs)))
                        continue
                    p2 = evaluate(pi2, n - len(gamma))
                    if pi2.kinds() - {"t"} or p2.table[0] != 0:
                        report.violations.append(Violation(desc + ": pi' does not fix 0", None, p2.table))
                    p_inv = invert(evaluate(pi, n))
                    if gamma2.indices != tuple(sorted(p_inv.table[g] for g in gamma)):
                        report.violations.append(Violation(desc + ": gamma' is not the preimage of gamma"))
    return report


# -- rewriting -----------------------------------------------------------------

def qord_letters(stage_dim: int):
    """d/u symbols (no d0) valid on an object of dimension ``stage_dim``."""
    out = [Gen("d", i) for i in range(1, stage_dim + 2)]
    out += [Gen("u", i) for i in range(1, stage_dim + 1)]
    return out


def enumerate_words(at_dim: int, max_len: int, letters: Callable) -> Iterator[Word]:
    """Depth-first enumeration of every word of length <= ``max_len`` that
    typechecks at ``at_dim``; ``letters(c)`` lists the symbols valid at dimension ``c``."""
    def walk(prefix, c):
        yield Word(prefix)
        if len(prefix) == max_len:
            return
        for g in letters(c):
            prefix.append(g)
            yield from walk(prefix, c + DIM_SHIFT[g.kind])
            prefix.pop()
    yield from walk([], at_dim)


def _check_normal_form(w_desc, nf, steps, length, f, anchor, report):
    bound = step_bound(length)
    if steps > bound:
        report.violations.append(Violation(f"{w_desc}: {steps} steps exceed bound {bound}"))
    got = try_evaluate(nf, anchor)
    if got != f:
        report.violations.append(Violation(f"{w_desc}: normal form '{nf}' changes the value",
                                           f.table, _table(got)))
        return
    if not is_qord_normal(nf) or normalize_qord(nf) != nf:
        report.violations.append(Violation(f"{w_desc}: '{nf}' is not a fixed point"))
    if nf != canonical_spelling(*_qm_pair(f)):
        report.violations.append(Violation(f"{w_desc}: '{nf}' differs from the factorization spelling",
                                           f.table))


def _qm_pair(f):
    fac = factor_qm(f)
    return fac.alpha, fac.beta


def audit_normal_forms(max_len: int = 6, max_anchor: int = 6) -> AuditReport:
    """Normalization of every d/u word (no d0) of length <= ``max_len`` at anchors <= ``max_anchor``.

    Words are covered through their prefixes: under the leftmost strategy the
    run on ``w + g`` first performs exactly the run on ``w`` (every redex
    inside ``w`` lies left of the last pair), then normalizes ``nf(w) + g``.
    So the state ``(normal form, value, max steps so far)`` of a prefix
    determines every extension, and words sharing a state are checked once.
    ``instances_checked`` counts words, not states.
    """
    report = AuditReport("normal_forms")
    with _Timer(report):
        for anchor in range(max_anchor + 1):
            ident = FinMap._trusted(anchor, anchor, tuple(range(anchor + 1)))
            # state -> (multiplicity, max steps)
            level = {(Word(), ident.table, anchor): (1, 0)}
            report.instances_checked += 1
            for length in range(1, max_len + 1):
                nxt = {}
                for (nf, tab, c), (mult, steps) in level.items():
                    for g in qord_letters(c):
                        gen = _generator(g.kind, c + DIM_SHIFT[g.kind], g.index).table
                        tab2 = tuple(gen[x] for x in tab)
                        nf2, s = normalize_qord(nf + (g,), trace=True)
                        key = (nf2, tab2, c + DIM_SHIFT[g.kind])
                        m0, s0 = nxt.get(key, (0, 0))
                        nxt[key] = (m0 + mult, max(s0, steps + s))
                for (nf, tab, c), (mult, steps) in nxt.items():
                    f = FinMap._trusted(anchor, c, tab)
                    _check_normal_form(f"anchor={anchor} len={length} nf='{nf}'", nf, steps,
                                       length, f, anchor, report)
                    report.instances_checked += mult
                level = nxt
    return report


def audit_normal_forms_direct(max_len: int = 4, max_anchor: int = 6) -> AuditReport:
    """Word-by-word variant of :func:`audit_normal_forms` (slow; small bounds)."""
    report = AuditReport("normal_forms_direct")
    with _Timer(report):
        for anchor in range(max_anchor + 1):
            for w in enumerate_words(anchor, max_len, qord_letters):
                report.instances_checked += 1
                f = evaluate(w, anchor)
                nf, steps = normalize_qord(w, trace=True)
                _check_normal_form(f"anchor={anchor} w='{w}'", nf, steps, len(w), f, anchor, report)
    return report


# -- presentation translation ---------------------------------------------------

@lru_cache(maxsize=None)
def all_letters(stage_dim: int) -> tuple:
    """Every generator symbol valid on an object of dimension ``stage_dim``."""
    out = []
    for kind in ("d", "s", "t", "u", "z", "zinv", "r"):
        n = stage_dim + DIM_SHIFT[kind]
        if n < 0:
            continue
        lo, hi = index_range(kind, n)
        out += [Gen(kind, i) for i in range(lo, hi + 1)]
    return tuple(out)


def audit_translation(max_len: int = 4, max_anchor: int = 5) -> AuditReport:
    """``translate(w, target)`` has the value of ``w`` for both targets, every word.

    Each word is translated in full; the value of the translation is built
    from the value for its prefix after checking that the translation of
    ``w`` is the translation of ``w[:-1]`` followed by that of ``w[-1]``.
    """
    report = AuditReport("translation")
    with _Timer(report):
        for anchor in range(max_anchor + 1):
            ident = tuple(range(anchor + 1))
            _translate_walk([], anchor, ident, {"du": ((), ident), "ds": ((), ident)},
                            max_len, anchor, report)
    return report


def _translate_walk(prefix, c, tab, prev, max_len, anchor, report):
    report.instances_checked += 1
    if len(prefix) == max_len:
        return
    for g in all_letters(c):
        c2 = c + DIM_SHIFT[g.kind]
        gen = _generator(g.kind, c2, g.index).table
        tab2 = tuple(gen[x] for x in tab)
        w = prefix + [g]
        cur = {}
        for target in ("du", "ds"):
            tw = tuple(translate(Word(w), target))
            pw, ptab = prev[target]
            k = len(pw)
            if tw[:k] != pw:
                report.violations.append(Violation(
                    f"anchor={anchor} '{render(w)}' -> {target}: prefix translation not preserved"))
                return
            pf, ok = _piece_value(tw[k:], c, target)
            if pf is None or pf.cod != c2 or not ok:
                report.violations.append(Violation(
                    f"anchor={anchor} '{render(w)}' -> {target} '{render(tw)}' is ill-formed"))
                return
            ttab = tuple(pf.table[x] for x in ptab)
            if ttab != tab2:
                report.violations.append(Violation(
                    f"anchor={anchor} '{render(w)}' -> {target} '{render(tw)}'", tab2, ttab))
                return
            cur[target] = (tw, ttab)
        _translate_walk(w, c2, tab2, cur, max_len, anchor, report)


@lru_cache(maxsize=None)
def _piece_value(piece, c, target):
    return try_evaluate(Word(piece), c), _target_ok(Word(piece), target)


def _target_ok(tw, target):
    allowed = {"d", "u", "t"} if target == "du" else {"d", "s", "t"}
    return tw.kinds() <= allowed


def audit_translation_direct(max_len: int = 3, max_anchor: int = 5) -> AuditReport:
    """Word-by-word variant of :func:`audit_translation` (slow; small bounds)."""
    report = AuditReport("translation_direct")
    with _Timer(report):
        for anchor in range(max_anchor + 1):
            for w in enumerate_words(anchor, max_len, all_letters):
                f = evaluate(w, anchor)
                for target in ("du", "ds"):
                    report.instances_checked += 1
                    tw = translate(w, target)
                    got = try_evaluate(tw, anchor)
                    if got != f or not _target_ok(tw, target):
                        report.violations.append(Violation(
                            f"anchor={anchor} '{w}' -> {target} '{tw}'", f.table, _table(got)))
    return report


# -- parse / render --------------------------------------------------------------

def token_alphabet(max_index: int):
    out = []
    for kind in ("d", "s", "t", "u", "z", "zinv", "r"):
        lo = 1 if kind in ("u", "r") else 0
        out += [Gen(kind, i) for i in range(lo, max_index + 1)]
    return out


def audit_roundtrip(max_len: int = 4, max_index: int = 5) -> AuditReport:
    """``parse(render(w)) == w`` for every word over indices <= ``max_index``."""
    report = AuditReport("parse_render_roundtrip")
    letters = token_alphabet(max_index)
    with _Timer(report):
        for length in range(max_len + 1):
            for combo in itertools.product(letters, repeat=length):
                report.instances_checked += 1
                text = render(combo)
                back = parse(text)
                if tuple(back) != combo:
                    report.violations.append(Violation(f"'{text}' reparsed as '{back}'"))
    return report
