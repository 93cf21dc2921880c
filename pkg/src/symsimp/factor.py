"""
Unique factorizations and permutation push-through.

* :func:`factor_monotone` -- ``f = d_{i_l}...d_{i_1} s_{j_1}...s_{j_k}`` for monotone ``f``.
* :func:`factor_qm` -- ``f = d_alpha o u_beta`` for quasi-monotonic ``f``.
* :func:`push_t_through_u` / :func:`push_perm` -- move transpositions (op-words
  in ``t_i``, ``i >= 1``) to the right of a quasi-codegeneracy ``u_gamma``.
* :func:`factor_general` -- any map as permutation-then-monotone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    ContainsT0,
    IndexOutOfRange,
    NotAPermutation,
    NotMonotonic,
    NotQuasiMonotonic,
    NotZeroFixing,
    ZeroExcluded,
)
from .fin import FinMap, MultiIndex, classify, compose, invert, multi_d, multi_u
from .words import Gen, Word, canonical_spelling, evaluate, word


@dataclass(frozen=True)
class OrdFactorization:
    """Face indices ``alpha`` (missed values) and degeneracy indices ``beta``
    (points ``j`` with ``f(j) == f(j+1)``); 0 is allowed in both."""

    alpha: tuple
    beta: tuple
    dom: int
    cod: int

    def spelling(self) -> Word:
        # s-block with descending indices, then d-block ascending
        return Word([Gen("s", j) for j in reversed(self.beta)] + [Gen("d", i) for i in self.alpha])

    def recompose(self) -> FinMap:
        return evaluate(self.spelling(), self.dom)


@dataclass(frozen=True)
class QOrdFactorization:
    alpha: MultiIndex
    beta: MultiIndex
    dom: int
    cod: int

    def spelling(self) -> Word:
        return canonical_spelling(self.alpha, self.beta)

    def recompose(self) -> FinMap:
        return compose(multi_d(self.cod, self.alpha), multi_u(self.dom, self.beta))


@dataclass(frozen=True)
class GeneralFactorization:
    alpha: tuple
    beta: tuple
    pi: Word
    dom: int
    cod: int

    def spelling(self) -> Word:
        """A ``{d, s, t}`` word: the permutation first, then the monotone part."""
        mono = OrdFactorization(self.alpha, self.beta, self.dom, self.cod)
        return self.pi + mono.spelling()

    def recompose(self) -> FinMap:
        return evaluate(self.spelling(), self.dom)


def factor_monotone(f: FinMap) -> OrdFactorization:
    if not classify(f).monotonic:
        raise NotMonotonic(f"{f!r} is not monotonic")
    tab = f.table
    beta = tuple(j for j in range(f.dom) if tab[j] == tab[j + 1])
    img = set(tab)
    alpha = tuple(i for i in range(f.cod + 1) if i not in img)
    return OrdFactorization(alpha, beta, f.dom, f.cod)


def factor_qm(f: FinMap) -> QOrdFactorization:
    tab = f.table
    if tab[0] != 0:
        raise NotQuasiMonotonic("QM1", f"{f!r} is not quasi-monotonic: QM1 fails (f(0) = {tab[0]})")
    nonzero = [e for e in tab if e]
    if any(a >= b for a, b in zip(nonzero, nonzero[1:])):
        raise NotQuasiMonotonic(
            "QM2", f"{f!r} is not quasi-monotonic: QM2 fails (not strictly increasing off the zeros)")
    img = set(tab)
    beta = MultiIndex(tuple(p for p in range(1, f.dom + 1) if tab[p] == 0))
    alpha = MultiIndex(tuple(q for q in range(1, f.cod + 1) if q not in img))
    return QOrdFactorization(alpha, beta, f.dom, f.cod)


def t_act(i: int, gamma) -> MultiIndex:
    """Image of ``gamma`` under the transposition ``(i i+1)``, re-sorted."""
    gamma = gamma if isinstance(gamma, MultiIndex) else MultiIndex(tuple(gamma))
    swap = {i: i + 1, i + 1: i}
    moved = [swap.get(g, g) for g in gamma]
    if 0 in moved:
        raise ZeroExcluded(f"t_{i} sends an element of {gamma!r} to 0")
    return MultiIndex.of(moved)


def t_tilde(i: int, gamma) -> Optional[Gen]:
    """Residual transposition left behind when ``t_i`` crosses ``u_gamma``.

    ``None`` stands for the identity (``i`` or ``i+1`` is in ``gamma``);
    otherwise ``t_{i'}`` with ``i' = i - #{j in gamma : j < i}``.
    """
    if i < 1:
        raise IndexOutOfRange(f"t_{i} cannot be pushed through u_gamma (need i >= 1)")
    gamma = gamma if isinstance(gamma, MultiIndex) else MultiIndex(tuple(gamma))
    if i in gamma or i + 1 in gamma:
        return None
    return Gen("t", i - sum(1 for j in gamma if j < i))


def push_t_through_u(i: int, gamma) -> tuple:
    """``t_i u_gamma = u_{t_i(gamma)} t_{i~gamma}`` as the pair ``(t_i(gamma), t_{i~gamma})``."""
    return t_act(i, gamma), t_tilde(i, gamma)


def push_perm(pi, gamma) -> tuple:
    """Rewrite ``pi u_gamma`` as ``u_gamma' pi'`` for a zero-fixing t-word ``pi``.

    The symbols of ``pi`` are pushed across one at a time starting from the
    one adjacent to ``u_gamma``.  ``gamma'`` is the preimage of ``gamma``
    under the permutation ``evaluate(pi)``.
    """
    pi = word(pi)
    gamma = gamma if isinstance(gamma, MultiIndex) else MultiIndex(tuple(gamma))
    for g in pi:
        if g.kind != "t":
            raise NotZeroFixing(f"push_perm expects a word of transpositions, got {g}")
        if g.index == 0:
            raise ContainsT0("t0 cannot be pushed through a quasi-codegeneracy")
    tail = []
    for g in reversed(pi):
        gamma, rest = push_t_through_u(g.index, gamma)
        if rest is not None:
            tail.append(rest)
    tail.reverse()
    return gamma, Word(tail)


def perm_to_word(p: FinMap) -> Word:
    """Adjacent-transposition word evaluating to the permutation ``p`` (bubble sort)."""
    if not classify(p).permutation:
        raise NotAPermutation(f"{p!r} is not a permutation")
    arr = list(p.table)
    swaps = []
    for end in range(len(arr) - 1, 0, -1):
        for k in range(end):
            if arr[k] > arr[k + 1]:
                arr[k], arr[k + 1] = arr[k + 1], arr[k]
                swaps.append(Gen("t", k))
    return Word(swaps)


def factor_general(f: FinMap) -> GeneralFactorization:
    """Split ``f`` as a permutation followed by a monotone map.

    The permutation is the stable sort of the domain by value, so points in
    the same fibre keep their relative order.
    """
    order = sorted(range(f.dom + 1), key=lambda p: (f.table[p], p))
    sigma = FinMap._trusted(f.dom, f.dom, tuple(order))
    g = compose(f, sigma)
    mono = factor_monotone(g)
    pi = perm_to_word(invert(sigma))
    return GeneralFactorization(mono.alpha, mono.beta, pi, f.dom, f.cod)
