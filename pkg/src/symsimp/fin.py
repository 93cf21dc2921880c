"""
Concrete finite functions [n] -> [m] with [n] = {0, 1, ..., n}.

Every symbolic object in the package (words, rule instances, factorizations)
is ultimately checked by turning it into a :class:`FinMap` and comparing
value tables, so this module is kept small and dependency free.

Generator constructors take the *superscript* dimension, e.g.
``generator("d", n, i)`` is the coface ``d_i : [n-1] -> [n]`` and
``generator("u", n, i)`` is the quasi-codegeneracy ``u_i : [n+1] -> [n]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    DimMismatch,
    EntryOutOfRange,
    IndexOutOfRange,
    LengthMismatch,
    NotAPermutation,
)

KINDS = ("d", "s", "t", "u", "z", "zinv", "r")


@dataclass(frozen=True, slots=True)
class FinMap:
    """An immutable function ``[dom] -> [cod]`` stored as its value table."""

    dom: int
    cod: int
    table: tuple

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise EntryOutOfRange(f"dimensions must be non-negative, got dom={self.dom}, cod={self.cod}")
        if len(self.table) != self.dom + 1:
            raise LengthMismatch(
                f"table has {len(self.table)} entries, expected dom+1 = {self.dom + 1}")
        for p, e in enumerate(self.table):
            if not 0 <= e <= self.cod:
                raise EntryOutOfRange(f"f({p}) = {e} lies outside [0, {self.cod}]")

    @classmethod
    def _trusted(cls, dom: int, cod: int, table: tuple) -> "FinMap":
        # skips validation; only for tables produced by composition
        obj = object.__new__(cls)
        object.__setattr__(obj, "dom", dom)
        object.__setattr__(obj, "cod", cod)
        object.__setattr__(obj, "table", table)
        return obj

    def __call__(self, p: int) -> int:
        return self.table[p]

    def __repr__(self):
        return f"FinMap([{self.dom}]->[{self.cod}]: {list(self.table)})"

    def image(self) -> frozenset:
        return frozenset(self.table)

    def zeros(self) -> tuple:
        """Domain points sent to 0, in increasing order."""
        return tuple(p for p, e in enumerate(self.table) if e == 0)


@dataclass(frozen=True, slots=True)
class MultiIndex:
    """A strictly increasing sequence of indices, all >= 1."""

    indices: tuple = ()

    def __post_init__(self):
        idx = tuple(self.indices)
        object.__setattr__(self, "indices", idx)
        for p, i in enumerate(idx):
            if i < 1:
                raise IndexOutOfRange(f"multi-index entries must be >= 1, got {i}")
            if p and idx[p - 1] >= i:
                raise IndexOutOfRange(f"multi-index must be strictly increasing: {list(idx)}")

    @classmethod
    def of(cls, indices: Iterable[int]) -> "MultiIndex":
        """Build from any iterable of distinct indices (sorted for you)."""
        return cls(tuple(sorted(indices)))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i):
        return i in self.indices

    def __repr__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


@dataclass(frozen=True, slots=True)
class MapClass:
    monotonic: bool
    quasi_monotonic: bool
    injective: bool
    surjective: bool
    permutation: bool
    fixes_zero: bool


def make_map(dom_dim: int, cod_dim: int, table: Sequence[int]) -> FinMap:
    return FinMap(dom_dim, cod_dim, tuple(table))


def identity(n: int) -> FinMap:
    if n < 0:
        raise EntryOutOfRange(f"dimension must be non-negative, got {n}")
    return _identity(n)


@lru_cache(maxsize=None)
def _identity(n):
    return FinMap._trusted(n, n, tuple(range(n + 1)))


def compose(outer: FinMap, inner: FinMap) -> FinMap:
    """Return ``outer o inner`` (inner is applied first)."""
    if inner.cod != outer.dom:
        raise DimMismatch(
            f"cannot compose: inner has codomain [{inner.cod}], outer has domain [{outer.dom}]")
    o = outer.table
    return FinMap._trusted(inner.dom, outer.cod, tuple(o[x] for x in inner.table))


def generator(kind: str, n: int, i: int) -> FinMap:
    """The elementary map of the given kind with superscript ``n`` and index ``i``.

    ======  ===============  ==================
    kind    signature        valid indices
    ======  ===============  ==================
    d       [n-1] -> [n]     0 <= i <= n, n >= 1
    s       [n+1] -> [n]     0 <= i <= n
    t       [n] -> [n]       0 <= i <= n-1
    u       [n+1] -> [n]     1 <= i <= n+1
    z,zinv  [n] -> [n]       0 <= i <= n
    r       [n] -> [n]       1 <= i <= n
    ======  ===============  ==================

    ``d_i`` is the monotone injection whose image omits ``i``.
    """
    if kind not in KINDS:
        raise IndexOutOfRange(f"unknown generator kind {kind!r}")
    lo, hi = index_range(kind, n)
    if n < 0 or not lo <= i <= hi:
        if kind == "u" and i == 0:
            raise IndexOutOfRange("u_0 is not defined")
        raise IndexOutOfRange(f"{kind}_{i} is not defined at superscript n={n} (valid: {lo}..{hi})")
    return _generator(kind, n, i)


def index_range(kind: str, n: int) -> tuple:
    """Inclusive (lo, hi) index bounds for ``kind`` at superscript ``n``; empty if lo > hi."""
    if kind == "d":
        return (0, n) if n >= 1 else (0, -1)
    if kind == "s":
        return (0, n)
    if kind == "t":
        return (0, n - 1)
    if kind == "u":
        return (1, n + 1)
    if kind in ("z", "zinv"):
        return (0, n)
    if kind == "r":
        return (1, n)
    raise IndexOutOfRange(f"unknown generator kind {kind!r}")


@lru_cache(maxsize=None)
def _generator(kind, n, i):
    if kind == "d":
        return FinMap._trusted(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))
    if kind == "s":
        return FinMap._trusted(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))
    if kind == "t":
        tab = list(range(n + 1))
        tab[i], tab[i + 1] = i + 1, i
        return FinMap._trusted(n, n, tuple(tab))
    if kind == "u":
        return FinMap._trusted(
            n + 1, n, tuple(0 if k in (0, i) else (k if k < i else k - 1) for k in range(n + 2)))
    if kind == "z":
        return FinMap._trusted(n, n, tuple(k + 1 if k < i else (0 if k == i else k) for k in range(n + 1)))
    if kind == "zinv":
        return invert(_generator("z", n, i))
    # r
    return FinMap._trusted(n, n, tuple(0 if k in (0, i) else k for k in range(n + 1)))


def classify(f: FinMap) -> MapClass:
    tab = f.table
    pairs = list(zip(tab, tab[1:]))
    monotonic = all(a <= b for a, b in pairs)
    nonzero = [e for e in tab if e != 0]
    qm = tab[0] == 0 and all(a < b for a, b in zip(nonzero, nonzero[1:]))
    injective = len(set(tab)) == len(tab)
    surjective = len(set(tab)) == f.cod + 1
    return MapClass(
        monotonic=monotonic,
        quasi_monotonic=qm,
        injective=injective,
        surjective=surjective,
        permutation=injective and surjective,
        fixes_zero=tab[0] == 0,
    )


def invert(f: FinMap) -> FinMap:
    if f.dom != f.cod or len(set(f.table)) != len(f.table):
        raise NotAPermutation(f"{f!r} is not a permutation")
    inv = [0] * len(f.table)
    for p, e in enumerate(f.table):
        inv[e] = p
    return FinMap._trusted(f.dom, f.cod, tuple(inv))


def _as_multi(idx) -> MultiIndex:
    return idx if isinstance(idx, MultiIndex) else MultiIndex(tuple(idx))


def multi_u(n: int, beta) -> FinMap:
    """The quasi-codegeneracy ``u_beta : [n] -> [n - |beta|]``.

    Zeros are exactly ``{0} | beta``; any other point ``p`` goes to
    ``p - #{i in beta : i < p}``.
    """
    beta = _as_multi(beta)
    if beta.indices and beta.indices[-1] > n:
        raise IndexOutOfRange(f"multi-index {beta!r} exceeds dimension {n}")
    members = set(beta.indices)
    tab = []
    below = 0
    for p in range(n + 1):
        if p == 0 or p in members:
            tab.append(0)
            if p:
                below += 1
        else:
            tab.append(p - below)
    return FinMap._trusted(n, n - len(beta), tuple(tab))


def multi_d(n: int, alpha) -> FinMap:
    """The coface ``d_alpha : [n - |alpha|] -> [n]``, the monotone injection missing ``alpha``."""
    alpha = _as_multi(alpha)
    if alpha.indices and alpha.indices[-1] > n:
        raise IndexOutOfRange(f"multi-index {alpha!r} exceeds dimension {n}")
    missing = set(alpha.indices)
    tab = tuple(q for q in range(n + 1) if q not in missing)
    return FinMap._trusted(n - len(alpha), n, tab)
