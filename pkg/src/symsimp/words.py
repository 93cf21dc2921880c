"""
Operator words over the generator alphabet ``d s t u z z' r``.

A word is read as a pipeline: the leftmost symbol acts first on the input,
so the function of ``g1 g2 ... gk`` is ``gk o ... o g1``.  This is the
reading under which the relation tables for the opposite category hold
verbatim.  Words carry no dimension of their own; an *anchor* (the
dimension of the input object) is supplied whenever one is evaluated or
typechecked.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import (
    BadToken,
    InvalidInverse,
    NegativeDim,
    StageIndexError,
    WordIndexError,
)
from .fin import FinMap, MultiIndex, _generator, index_range

# net change of the object dimension across one stage
DIM_SHIFT = {"d": 1, "s": -1, "u": -1, "t": 0, "z": 0, "zinv": 0, "r": 0}

_TOKEN = re.compile(r"([a-z]+)(\d*)('?)\Z")
_LETTERS = frozenset("dstuzr")


@dataclass(frozen=True, slots=True)
class Gen:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in DIM_SHIFT:
            raise BadToken(f"unknown generator kind {self.kind!r}")
        if self.index < 0:
            raise WordIndexError(f"negative index in {self.kind}{self.index}")
        if self.kind in ("u", "r") and self.index == 0:
            raise WordIndexError(f"{self.kind}0 is not defined (indices of {self.kind} start at 1)")

    def __str__(self):
        if self.kind == "zinv":
            return f"z{self.index}'"
        return f"{self.kind}{self.index}"

    def __repr__(self):
        return f"Gen({self!s})"


class Word(tuple):
    """An immutable sequence of :class:`Gen` symbols."""

    __slots__ = ()

    def __new__(cls, symbols: Iterable[Gen] = ()):
        return super().__new__(cls, symbols)

    def __add__(self, other):
        return Word(tuple.__add__(self, tuple(other)))

    def __radd__(self, other):
        return Word(tuple(other) + tuple(self))

    def __getitem__(self, item):
        got = tuple.__getitem__(self, item)
        return Word(got) if isinstance(item, slice) else got

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Word({render(self)!r})"

    def kinds(self) -> frozenset:
        return frozenset(g.kind for g in self)


def word(text_or_symbols="") -> Word:
    """Coerce a string or an iterable of :class:`Gen` into a :class:`Word`."""
    if isinstance(text_or_symbols, Word):
        return text_or_symbols
    if isinstance(text_or_symbols, str):
        return parse(text_or_symbols)
    return Word(text_or_symbols)


def parse(text: str) -> Word:
    symbols = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m or m.group(1) not in _LETTERS:
            raise BadToken(f"bad token {tok!r}: expected a letter from d,s,t,u,z,r followed by an index")
        letter, digits, apos = m.groups()
        if not digits:
            raise BadToken(f"bad token {tok!r}: missing index")
        if apos and letter != "z":
            raise InvalidInverse(f"bad token {tok!r}: only z may carry an inverse mark")
        symbols.append(Gen("zinv" if apos else letter, int(digits)))
    return Word(symbols)


def render(w: Iterable[Gen]) -> str:
    return " ".join(str(g) for g in w)


def _superscript(kind: str, stage_dim: int) -> int:
    # superscript n of the generator acting on an object of dimension stage_dim:
    # d_i^(n) : [n-1] -> [n], s/u^(n) : [n+1] -> [n], endomorphisms keep n
    return stage_dim + DIM_SHIFT[kind]


def stage_valid(g: Gen, stage_dim: int) -> bool:
    n = _superscript(g.kind, stage_dim)
    if n < 0:
        return False
    lo, hi = index_range(g.kind, n)
    return lo <= g.index <= hi


def typecheck(w, at_dim: int) -> tuple:
    """Dimension chain of ``w`` started at ``at_dim``.

    Returns a tuple of ``len(w) + 1`` dimensions.  Raises
    :class:`StageIndexError` at the first symbol whose index is invalid for
    the object it receives.
    """
    w = word(w)
    if at_dim < 0:
        raise NegativeDim(f"anchor dimension must be non-negative, got {at_dim}")
    chain = [at_dim]
    c = at_dim
    for pos, g in enumerate(w):
        if not stage_valid(g, c):
            n = _superscript(g.kind, c)
            lo, hi = index_range(g.kind, n) if n >= 0 else (None, None)
            reason = "no valid index" if n < 0 or lo > hi else f"valid indices {lo}..{hi}"
            raise StageIndexError(pos, g, c, reason)
        c += DIM_SHIFT[g.kind]
        chain.append(c)
    return tuple(chain)


def evaluate(w, at_dim: int) -> FinMap:
    """The concrete function of the pipeline ``w`` on the object ``[at_dim]``."""
    w = word(w)
    chain = typecheck(w, at_dim)
    cur = tuple(range(at_dim + 1))
    for g, c in zip(w, chain):
        tab = _generator(g.kind, _superscript(g.kind, c), g.index).table
        cur = tuple(tab[x] for x in cur)
    return FinMap._trusted(at_dim, chain[-1], cur)


def try_evaluate(w, at_dim: int):
    """Like :func:`evaluate` but returns ``None`` when ``w`` does not typecheck."""
    try:
        return evaluate(w, at_dim)
    except (StageIndexError, NegativeDim):
        return None


def canonical_spelling(alpha, beta) -> Word:
    """Pipeline spelling of ``d_alpha o u_beta``: u-block descending, then d-block ascending."""
    alpha = alpha if isinstance(alpha, MultiIndex) else MultiIndex(tuple(alpha))
    beta = beta if isinstance(beta, MultiIndex) else MultiIndex(tuple(beta))
    us = [Gen("u", i) for i in reversed(beta.indices)]
    ds = [Gen("d", i) for i in alpha.indices]
    return Word(us + ds)


def u_spelling(gamma) -> Word:
    return canonical_spelling((), gamma)


def _z_expansion(g: Gen) -> list:
    if g.kind == "z":
        return [Gen("t", k) for k in range(g.index - 1, -1, -1)]
    return [Gen("t", k) for k in range(g.index)]


def expand_z(w) -> Word:
    """Replace ``z_i`` by ``t_{i-1} ... t_1 t_0`` and ``z_i'`` by ``t_0 t_1 ... t_{i-1}``."""
    out = []
    for g in word(w):
        if g.kind in ("z", "zinv"):
            out.extend(_z_expansion(g))
        else:
            out.append(g)
    return Word(out)


def translate(w, target: str) -> Word:
    """Rewrite between the ``{d, s, t}`` and ``{d, u, t}`` presentations.

    ``target="du"`` replaces each ``s_i`` by ``z_i u_{i+1} z_i'``;
    ``target="ds"`` replaces each ``u_i`` by ``z_{i-1}' s_{i-1} z_{i-1}``.
    Replacement operators ``r_i`` are first spelled ``u_i d_i``, and all
    cyclic permutations in the result are expanded into transpositions.
    """
    if target not in ("du", "ds"):
        raise ValueError(f"target must be 'du' or 'ds', got {target!r}")
    out = []
    for g in word(w):
        out.extend(_translate_symbol(g, target))
    return Word(out)


@lru_cache(maxsize=None)
def _translate_symbol(g: Gen, target: str) -> tuple:
    pieces = [Gen("u", g.index), Gen("d", g.index)] if g.kind == "r" else [g]
    out = []
    for p in pieces:
        if target == "du" and p.kind == "s":
            i = p.index
            out += [Gen("z", i), Gen("u", i + 1), Gen("zinv", i)]
        elif target == "ds" and p.kind == "u":
            i = p.index - 1
            out += [Gen("zinv", i), Gen("s", i), Gen("z", i)]
        else:
            out.append(p)
    return tuple(expand_z(out))
