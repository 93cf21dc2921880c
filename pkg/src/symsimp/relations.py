"""
Relation tables as instantiable rule families, and the qOrd rewrite engine.

Each table row is stored as written, as a pair of pipeline words plus the
side condition on its indices.  :func:`instantiate` enumerates every index
tuple and anchor at which both sides typecheck; the audit module then
compares the two sides as concrete functions.

The cosimplicial table is the only one written covariantly (``d_i d_j``
means ``d_i o d_j``); its words are reversed on instantiation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import FinError, ForbiddenSymbol, UnknownFamily
from .fin import MultiIndex
from .words import Gen, Word, parse, typecheck, u_spelling, word


@dataclass(frozen=True)
class RuleFamily:
    name: str
    description: str


@dataclass(frozen=True)
class RuleInstance:
    lhs: Word
    rhs: Word
    anchor_dim: int
    family: str
    case_label: str

    def __str__(self):
        rhs = str(self.rhs) or "id"
        return f"[{self.family}] {self.lhs} = {rhs}  @[{self.anchor_dim}]  ({self.case_label})"


@dataclass(frozen=True)
class _Row:
    label: str
    table: str  # sub-table tag, e.g. "du", "tu", "t0u"
    vars: tuple
    cond: Callable
    sides: Callable  # (*vars) -> (lhs text, rhs text)


def _row(table, label, vars, cond, sides):
    return _Row(label, table, tuple(vars), cond, sides)


IJ = ("i", "j")

_SIMPLICIAL_DD = [
    _row("dd", "d_id_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"d{i} d{j}", f"d{j-1} d{i}")),
    _row("dd", "d_id_j, i>=j", IJ, lambda i, j: i >= j, lambda i, j: (f"d{i} d{j}", f"d{j} d{i+1}")),
]

_TT = [
    _row("tt", "t_it_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"t{i} t{j}", "")),
    _row("tt", "t_it_j, |i-j|>=2", IJ, lambda i, j: abs(i - j) >= 2,
         lambda i, j: (f"t{i} t{j}", f"t{j} t{i}")),
    _row("tt", "t_it_j, |i-j|=1", IJ, lambda i, j: abs(i - j) == 1,
         lambda i, j: (f"t{i} t{j}", f"t{j} t{i} t{j} t{i}")),
]

_DT_TD = [
    _row("dt", "d_it_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"d{i} t{j}", f"t{j-1} d{i}")),
    _row("dt", "d_it_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"d{i} t{j}", f"d{i+1}")),
    _row("dt", "d_it_j, i=j+1", IJ, lambda i, j: i == j + 1, lambda i, j: (f"d{i} t{j}", f"d{i-1}")),
    _row("dt", "d_it_j, i>=j+2", IJ, lambda i, j: i >= j + 2, lambda i, j: (f"d{i} t{j}", f"t{j} d{i}")),
    _row("td", "t_id_j, i<=j-2", IJ, lambda i, j: i <= j - 2, lambda i, j: (f"t{i} d{j}", f"d{j} t{i}")),
    _row("td", "t_id_j, i=j-1", IJ, lambda i, j: i == j - 1,
         lambda i, j: (f"t{i} d{j}", f"d{j} t{i+1} t{i} t{i+1}")),
    _row("td", "t_id_j, i>=j", IJ, lambda i, j: i >= j, lambda i, j: (f"t{i} d{j}", f"d{j} t{i+1}")),
]

_SIMPLICIAL_SS_DS_SD = [
    _row("ss", "s_is_j, i<=j", IJ, lambda i, j: i <= j, lambda i, j: (f"s{i} s{j}", f"s{j+1} s{i}")),
    _row("ss", "s_is_j, i>j", IJ, lambda i, j: i > j, lambda i, j: (f"s{i} s{j}", f"s{j} s{i-1}")),
    _row("ds", "d_is_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"d{i} s{j}", f"s{j-1} d{i}")),
    _row("ds", "d_is_j, i=j or j+1", IJ, lambda i, j: i in (j, j + 1), lambda i, j: (f"d{i} s{j}", "")),
    _row("ds", "d_is_j, i>=j+2", IJ, lambda i, j: i >= j + 2, lambda i, j: (f"d{i} s{j}", f"s{j} d{i-1}")),
    _row("sd", "s_id_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"s{i} d{j}", f"d{j+1} s{i}")),
    _row("sd", "s_id_j, i>=j", IJ, lambda i, j: i >= j, lambda i, j: (f"s{i} d{j}", f"d{j} s{i+1}")),
]

_COSIMPLICIAL = [
    _row("dd", "d_id_j, i<=j", IJ, lambda i, j: i <= j, lambda i, j: (f"d{i} d{j}", f"d{j+1} d{i}")),
    _row("dd", "d_id_j, i>j", IJ, lambda i, j: i > j, lambda i, j: (f"d{i} d{j}", f"d{j} d{i-1}")),
    _row("ds", "d_is_j, i<=j", IJ, lambda i, j: i <= j, lambda i, j: (f"d{i} s{j}", f"s{j+1} d{i}")),
    _row("ds", "d_is_j, i>j", IJ, lambda i, j: i > j, lambda i, j: (f"d{i} s{j}", f"s{j} d{i+1}")),
    _row("sd", "s_id_j, i<=j-2", IJ, lambda i, j: i <= j - 2, lambda i, j: (f"s{i} d{j}", f"d{j-1} s{i}")),
    _row("sd", "s_id_j, i=j-1 or j", IJ, lambda i, j: i in (j - 1, j), lambda i, j: (f"s{i} d{j}", "")),
    _row("sd", "s_id_j, i>=j+1", IJ, lambda i, j: i >= j + 1, lambda i, j: (f"s{i} d{j}", f"d{j} s{i-1}")),
    _row("ss", "s_is_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"s{i} s{j}", f"s{j-1} s{i}")),
    _row("ss", "s_is_j, i>=j", IJ, lambda i, j: i >= j, lambda i, j: (f"s{i} s{j}", f"s{j} s{i+1}")),
]

_GRANDIS_TS_ST = [
    _row("ts", "t_is_j, i<=j-2", IJ, lambda i, j: i <= j - 2, lambda i, j: (f"t{i} s{j}", f"s{j} t{i}")),
    _row("ts", "t_is_j, i=j-1", IJ, lambda i, j: i == j - 1,
         lambda i, j: (f"t{i} s{j}", f"t{i+1} s{j-1} t{i}")),
    _row("ts", "t_is_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"t{i} s{j}", f"s{j}")),
    _row("ts", "t_is_j, i=j+1", IJ, lambda i, j: i == j + 1,
         lambda i, j: (f"t{i} s{j}", f"t{i-1} s{j+1} t{i-1}")),
    _row("ts", "t_is_j, i>=j+2", IJ, lambda i, j: i >= j + 2, lambda i, j: (f"t{i} s{j}", f"s{j} t{i-1}")),
    _row("st", "s_it_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"s{i} t{j}", f"t{j+1} s{i}")),
    _row("st", "s_it_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"s{i} t{j}", f"t{j+1} t{j} s{i+1}")),
    _row("st", "s_it_j, i=j+1", IJ, lambda i, j: i == j + 1,
         lambda i, j: (f"s{i} t{j}", f"t{j} t{j+1} s{i-1}")),
    _row("st", "s_it_j, i>=j+2", IJ, lambda i, j: i >= j + 2, lambda i, j: (f"s{i} t{j}", f"t{j} s{i}")),
]

_UU = [
    _row("uu", "u_iu_j, i<=j", IJ, lambda i, j: i <= j, lambda i, j: (f"u{i} u{j}", f"u{j+1} u{i}")),
    _row("uu", "u_iu_j, i>j", IJ, lambda i, j: i > j, lambda i, j: (f"u{i} u{j}", f"u{j} u{i-1}")),
]

_QUASI = _SIMPLICIAL_DD + [
    _row("du", "d_iu_j, i=0", IJ, lambda i, j: i == 0, lambda i, j: (f"d{i} u{j}", f"z{j-1}")),
    _row("du", "d_iu_j, 0!=i<j", IJ, lambda i, j: 0 != i < j, lambda i, j: (f"d{i} u{j}", f"u{j-1} d{i}")),
    _row("du", "d_iu_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"d{i} u{j}", "")),
    _row("du", "d_iu_j, i>j", IJ, lambda i, j: i > j, lambda i, j: (f"d{i} u{j}", f"u{j} d{i-1}")),
    _row("ud", "u_id_j, i<=j", IJ, lambda i, j: i <= j, lambda i, j: (f"u{i} d{j}", f"d{j+1} u{i}")),
    _row("ud", "u_id_j, i>=j!=0", IJ, lambda i, j: i >= j != 0,
         lambda i, j: (f"u{i} d{j}", f"d{j} u{i+1}")),
    _row("ud", "u_id_j, j=0", IJ, lambda i, j: j == 0, lambda i, j: (f"u{i} d{j}", f"d1 u{i+1} t0")),
] + _UU + _TT + _DT_TD + [
    _row("tu", "t_iu_j, 0!=i<=j-2", IJ, lambda i, j: 0 != i <= j - 2, lambda i, j: (f"t{i} u{j}", f"u{j} t{i}")),
    _row("tu", "t_iu_j, 0!=i=j-1", IJ, lambda i, j: 0 != i == j - 1, lambda i, j: (f"t{i} u{j}", f"u{j-1}")),
    _row("tu", "t_iu_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"t{i} u{j}", f"u{j+1}")),
    _row("tu", "t_iu_j, i>j", IJ, lambda i, j: i > j, lambda i, j: (f"t{i} u{j}", f"u{j} t{i-1}")),
    _row("ut", "u_it_j, i<=j", IJ, lambda i, j: i <= j, lambda i, j: (f"u{i} t{j}", f"t{j+1} u{i}")),
    _row("ut", "u_it_j, i=j+1, j!=0", IJ, lambda i, j: i == j + 1 and j != 0,
         lambda i, j: (f"u{i} t{j}", f"t{j} t{j+1} u{i-1}")),
    _row("ut", "u_it_j, i>=j+2, j!=0", IJ, lambda i, j: i >= j + 2 and j != 0,
         lambda i, j: (f"u{i} t{j}", f"t{j} u{i}")),
    _row("t0u", "t_0u_1", (), lambda: True, lambda: ("t0 u1", "u1")),
    _row("t0u", "t_0u_it_0u_j, 2<=i<=j", IJ, lambda i, j: 2 <= i <= j,
         lambda i, j: (f"t0 u{i} t0 u{j}", f"u{j+1} t0 u{i} t0")),
    _row("t0u", "t_0u_it_0u_j, 2<=j<i", IJ, lambda i, j: 2 <= j < i,
         lambda i, j: (f"t0 u{i} t0 u{j}", f"u{j} t0 u{i-1} t0")),
]

_MOORE = [
    _row("tt", "t_i^2", ("i",), lambda i: True, lambda i: (f"t{i} t{i}", "")),
    _row("tt", "t_it_j, |i-j|>=2", IJ, lambda i, j: abs(i - j) >= 2, lambda i, j: (f"t{i} t{j}", f"t{j} t{i}")),
    _row("tt", "t_it_{i+1}t_i", ("i",), lambda i: True,
         lambda i: (f"t{i} t{i+1} t{i}", f"t{i+1} t{i} t{i+1}")),
]

_CONJINSYM = [
    _row("zz", "z_i'z_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"z{i}' z{j}", f"z{j} t0 z{i+1}'")),
    _row("zz", "z_i'z_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"z{i}' z{j}", "")),
    _row("zz", "z_i'z_j, i>j", IJ, lambda i, j: i > j, lambda i, j: (f"z{i}' z{j}", f"z{j+1} t0 z{i}'")),
    _row("zz", "z_iz_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"z{i} z{j}", f"z{j} z{i+1} t0")),
    _row("zz", "z_j'z_iz_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"z{j}' z{i} z{j}", f"z{i+1} t0")),
]

_DZZDS = [
    _row("tz", "t_iz_j, i<=j-2", IJ, lambda i, j: i <= j - 2, lambda i, j: (f"t{i} z{j}", f"z{j} t{i+1}")),
    _row("tz", "t_iz_j, i=j-1", IJ, lambda i, j: i == j - 1, lambda i, j: (f"t{i} z{j}", f"z{j-1}")),
    _row("tz", "t_iz_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"t{i} z{j}", f"z{j+1}")),
    _row("tz", "t_iz_j, i>=j+1", IJ, lambda i, j: i >= j + 1, lambda i, j: (f"t{i} z{j}", f"z{j} t{i}")),
    _row("zt", "z_i't_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"z{i}' t{j}", f"t{j} z{i}'")),
    _row("zt", "z_i't_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"z{i}' t{j}", f"z{i+1}'")),
    _row("zt", "z_i't_j, i=j+1", IJ, lambda i, j: i == j + 1, lambda i, j: (f"z{i}' t{j}", f"z{i-1}'")),
    _row("zt", "z_i't_j, i>=j+2", IJ, lambda i, j: i >= j + 2, lambda i, j: (f"z{i}' t{j}", f"t{j+1} z{i}'")),
    _row("dz", "d_iz_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"d{i} z{j}", f"z{j-1} d{i+1}")),
    _row("dz", "d_iz_j, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"d{i} z{j}", "d0")),
    _row("dz", "d_iz_j, i>j", IJ, lambda i, j: i > j, lambda i, j: (f"d{i} z{j}", f"z{j} d{i}")),
    _row("zd", "z_i'd_j, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"z{i}' d{j}", f"d{j} z{i}'")),
    _row("zd", "z_i'd_j, i>=j", IJ, lambda i, j: i >= j, lambda i, j: (f"z{i}' d{j}", f"d{j+1} z{i+1}'")),
]

_ZUUZS = [
    _row("zu", "z_j'u_i, i<j", IJ, lambda i, j: i < j, lambda i, j: (f"z{j}' u{i}", f"t0 u{i+1} t0 z{j-1}'")),
    _row("zu", "z_j'u_i, i=j", IJ, lambda i, j: i == j, lambda i, j: (f"z{j}' u{i}", "u1")),
    # z_0 is the identity, so the i>j rows only hold for j >= 1
    _row("zu", "z_j'u_i, i>j>=1", IJ, lambda i, j: i > j >= 1, lambda i, j: (f"z{j}' u{i}", f"t0 u{i} t0 z{j}'")),
    _row("uz", "u_iz_j, i<=j", IJ, lambda i, j: i <= j, lambda i, j: (f"u{i} z{j}", f"z{j+1} t0 u{i+1} t0")),
    _row("uz", "u_iz_j, i>j>=1", IJ, lambda i, j: i > j >= 1, lambda i, j: (f"u{i} z{j}", f"z{j} t0 u{i} t0")),
]

_REPLACEMENT = [
    _row("r", "u_id_i = r_i", ("i",), lambda i: True, lambda i: (f"u{i} d{i}", f"r{i}")),
    _row("r", "d_{i+1}u_i = r_i", ("i",), lambda i: True, lambda i: (f"d{i+1} u{i}", f"r{i}")),
    _row("r", "d_iu_{i+1} = r_i", ("i",), lambda i: True, lambda i: (f"d{i} u{i+1}", f"r{i}")),
    _row("r", "r_i^2 = r_i", ("i",), lambda i: True, lambda i: (f"r{i} r{i}", f"r{i}")),
    _row("r", "r_ir_j = r_jr_i", IJ, lambda i, j: True, lambda i, j: (f"r{i} r{j}", f"r{j} r{i}")),
]

_ROWS = {
    "cosimplicial": _COSIMPLICIAL,
    "simplicial": _SIMPLICIAL_DD + _SIMPLICIAL_SS_DS_SD,
    "grandis": _SIMPLICIAL_DD + _SIMPLICIAL_SS_DS_SD + _TT + _DT_TD + _GRANDIS_TS_ST,
    "quasi": _QUASI,
    "moore": _MOORE,
    "conjinsym": _CONJINSYM,
    "dzzds": _DZZDS,
    "zuuzs": _ZUUZS,
    "uus": _UU,
    "replacement": _REPLACEMENT,
}

_COVARIANT = frozenset({"cosimplicial"})

_FAMILIES = (
    RuleFamily("cosimplicial", "Cosimplicial identities among d_i and s_j, written covariantly."),
    RuleFamily("simplicial", "Simplicial identities among d_i and s_j (the cosimplicial ones reversed)."),
    RuleFamily("grandis", "Grandis's symmetric-simplicial identities in the d/s/t generators."),
    RuleFamily("quasi", "Alternative presentation in the d/u/t generators (faces, quasi-codegeneracies, "
                        "transpositions)."),
    RuleFamily("moore", "Moore presentation of the symmetric group by adjacent transpositions t_i."),
    RuleFamily("conjinsym", "Conjugation identities among the cyclic permutations z_i and their inverses."),
    RuleFamily("dzzds", "Exchange of z_i, z_i' with t_j and d_j."),
    RuleFamily("zuuzs", "Exchange of z_j, z_j' with u_i."),
    RuleFamily("uus", "Exchange identities u_iu_j."),
    RuleFamily("replacement", "Replacement operators r_i: definitions and mutually commuting idempotents."),
    RuleFamily("push_through", "t_i u_gamma = u_{t_i(gamma)} t_{i~gamma} for multi-indices gamma, i >= 1."),
)

# named sub-tables of the quasi and grandis families
RULE_SETS = {
    "R[d,u]": ("quasi", {"du", "ud"}),
    "R[u,u]": ("quasi", {"uu"}),
    "R[t,u]": ("quasi", {"tu", "ut", "t0u"}),
    "R[t+,u]": ("quasi", {"tu", "ut"}),
    "R[t0,u]": ("quasi", {"t0u"}),
    "R[d,s]": ("grandis", {"ds", "sd"}),
    "R[s,s]": ("grandis", {"ss"}),
    "R[t,s]": ("grandis", {"ts", "st"}),
}


def families() -> tuple:
    return _FAMILIES


def family_names() -> tuple:
    return tuple(f.name for f in _FAMILIES)


def _both_typecheck(lhs, rhs, anchor):
    try:
        a = typecheck(lhs, anchor)
        b = typecheck(rhs, anchor)
    except FinError:
        return False
    return a[-1] == b[-1]


def _words(texts, covariant):
    try:
        lhs, rhs = (parse(t) for t in texts)
    except FinError:
        # a template produced a negative or undefined index
        return None
    if covariant:
        lhs, rhs = Word(reversed(lhs)), Word(reversed(rhs))
    return lhs, rhs


def instantiate(family: str, max_dim: int, tables=None) -> list:
    """Every instance of ``family`` whose two sides typecheck at an anchor <= ``max_dim``.

    ``tables`` optionally restricts to sub-table tags (see :data:`RULE_SETS`).
    """
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    if family == "push_through":
        return _push_through_instances(max_dim)
    if family not in _ROWS:
        raise UnknownFamily(f"unknown rule family {family!r}; known: {', '.join(family_names())}")
    covariant = family in _COVARIANT
    out = []
    index_range = range(0, max_dim + 3)
    for row in _ROWS[family]:
        if tables is not None and row.table not in tables:
            continue
        for vals in itertools.product(index_range, repeat=len(row.vars)):
            if not row.cond(*vals):
                continue
            sides = _words(row.sides(*vals), covariant)
            if sides is None:
                continue
            lhs, rhs = sides
            label = row.label
            if vals:
                label += " [" + ", ".join(f"{v}={x}" for v, x in zip(row.vars, vals)) + "]"
            for anchor in range(0, max_dim + 1):
                if _both_typecheck(lhs, rhs, anchor):
                    out.append(RuleInstance(lhs, rhs, anchor, family, label))
    return out


def rule_set(name: str, max_dim: int) -> list:
    """Instances of one of the named sub-tables, e.g. ``rule_set("R[d,u]", 4)``."""
    if name not in RULE_SETS:
        raise UnknownFamily(f"unknown rule set {name!r}; known: {', '.join(RULE_SETS)}")
    fam, tags = RULE_SETS[name]
    return instantiate(fam, max_dim, tables=tags)


def _push_through_instances(max_dim):
    from .factor import push_t_through_u

    out = []
    for n in range(1, max_dim + 1):
        for k in range(n + 1):
            for gamma in itertools.combinations(range(1, n + 1), k):
                gamma = MultiIndex(gamma)
                for i in range(1, n):
                    gamma2, rest = push_t_through_u(i, gamma)
                    lhs = Word([Gen("t", i)]) + u_spelling(gamma)
                    rhs = u_spelling(gamma2) + ([rest] if rest is not None else [])
                    label = f"t_iu_gamma [i={i}, gamma={gamma!r}]"
                    out.append(RuleInstance(lhs, Word(rhs), n, "push_through", label))
    return out


# -- qOrd rewriting -----------------------------------------------------------

def _check_qord(w):
    for g in w:
        if g.kind not in ("d", "u"):
            raise ForbiddenSymbol(f"{g} is outside the d/u alphabet")
        if g.kind == "d" and g.index == 0:
            raise ForbiddenSymbol("d0 is not quasi-monotonic and is rejected by the qOrd rewriter")


def _rewrite_pair(a: Gen, b: Gen):
    """Oriented rule for the adjacent pair ``a b``; ``None`` if it is already in order."""
    i, j = a.index, b.index
    if a.kind == "d" and b.kind == "u":
        if i == j:
            return ()
        if i < j:
            return (Gen("u", j - 1), Gen("d", i))
        return (Gen("u", j), Gen("d", i - 1))
    if a.kind == "u" and b.kind == "u" and i <= j:
        return (Gen("u", j + 1), Gen("u", i))
    if a.kind == "d" and b.kind == "d" and i >= j:
        return (Gen("d", j), Gen("d", i + 1))
    return None


def rewrite_step(w) -> Optional[Word]:
    """Apply one rule at the leftmost redex, or return ``None`` if ``w`` is normal."""
    w = word(w)
    _check_qord(w)
    return _step(w)


def _step(w):
    for p in range(len(w) - 1):
        rep = _rewrite_pair(w[p], w[p + 1])
        if rep is not None:
            return Word(tuple(w[:p]) + rep + tuple(w[p + 2:]))
    return None


def step_bound(w) -> int:
    """Upper bound on rewrite steps for a word (or a word length): every step
    swaps or cancels one adjacent pair of letters and no pair of letters is
    swapped twice."""
    n = w if isinstance(w, int) else len(w)
    return n * (n - 1) // 2


def normalize_qord(w, trace: bool = False):
    """Rewrite a d/u word to its normal form (u-block descending, d-block ascending).

    With ``trace=True`` returns ``(normal_form, steps)``.
    """
    w = word(w)
    _check_qord(w)
    bound = step_bound(w)
    steps = 0
    while True:
        nxt = _step(w)
        if nxt is None:
            break
        w = nxt
        steps += 1
        if steps > bound:
            raise RuntimeError(f"normalization exceeded its step bound {bound}")
    return (w, steps) if trace else w


def is_qord_normal(w) -> bool:
    w = word(w)
    us = [g.index for g in w if g.kind == "u"]
    ds = [g.index for g in w if g.kind == "d"]
    kinds = [g.kind for g in w]
    blocks_ok = kinds == ["u"] * len(us) + ["d"] * len(ds)
    return (blocks_ok and all(a > b for a, b in zip(us, us[1:]))
            and all(a < b for a, b in zip(ds, ds[1:])))
