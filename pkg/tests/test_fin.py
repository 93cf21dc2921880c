import itertools

import pytest

from symsimp.errors import DimMismatch, EntryOutOfRange, IndexOutOfRange, LengthMismatch, NotAPermutation
from symsimp.fin import (
    MultiIndex,
    classify,
    compose,
    generator,
    identity,
    invert,
    make_map,
    multi_d,
    multi_u,
)


def maps(n, m):
    for tab in itertools.product(range(m + 1), repeat=n + 1):
        yield make_map(n, m, tab)


def test_make_map_identity_and_s0():
    assert make_map(2, 2, [0, 1, 2]) == identity(2)
    assert make_map(2, 1, [0, 0, 1]) == generator("s", 1, 0)


def test_make_map_rejects_bad_tables():
    with pytest.raises(EntryOutOfRange):
        make_map(1, 0, [0, 1])
    with pytest.raises(LengthMismatch):
        make_map(2, 2, [0, 1])


def test_compose():
    f = make_map(3, 3, [2, 0, 3, 3])
    assert compose(identity(3), f) == f
    assert compose(generator("s", 2, 0), generator("d", 3, 0)) == identity(2)
    with pytest.raises(DimMismatch):
        compose(make_map(2, 1, [0, 1, 1]), make_map(3, 3, [0, 1, 2, 3]))


@pytest.mark.parametrize("n", range(5))
def test_identity(n):
    assert identity(n).table == tuple(range(n + 1))
    assert compose(identity(n), identity(n)) == identity(n)


def test_generator_tables():
    d = generator("d", 3, 2)
    assert (d.dom, d.cod, d.table) == (2, 3, (0, 1, 3))
    u = generator("u", 2, 2)
    assert (u.dom, u.cod, u.table) == (3, 2, (0, 1, 0, 2))
    assert generator("z", 3, 2).table == (1, 2, 0, 3)
    assert generator("r", 3, 2).table == (0, 1, 0, 3)
    with pytest.raises(IndexOutOfRange):
        generator("u", 2, 0)


@pytest.mark.parametrize("n", range(9))
def test_u1_is_s0_and_z0_is_identity(n):
    assert generator("u", n, 1) == generator("s", n, 0)
    assert generator("z", n, 0) == identity(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_face_misses_its_index(n):
    for i in range(n + 1):
        assert set(range(n + 1)) - generator("d", n, i).image() == {i}


@pytest.mark.parametrize("n", range(1, 9))
def test_replacement_operators_commuting_idempotents(n):
    for i in range(1, n + 1):
        ri = generator("r", n, i)
        assert ri == compose(generator("d", n, i), generator("u", n - 1, i))
        assert compose(ri, ri) == ri
        for j in range(1, n + 1):
            rj = generator("r", n, j)
            assert compose(ri, rj) == compose(rj, ri)


def test_classify_examples():
    c = classify(make_map(3, 2, [0, 1, 0, 2]))
    assert c.quasi_monotonic and c.surjective and not c.monotonic
    c = classify(make_map(2, 2, [1, 2, 0]))
    assert not c.quasi_monotonic and c.permutation and not c.fixes_zero
    c = classify(identity(3))
    assert all([c.monotonic, c.quasi_monotonic, c.injective, c.surjective, c.permutation, c.fixes_zero])


def test_invert():
    assert invert(make_map(2, 2, [1, 2, 0])).table == (2, 0, 1)
    assert invert(identity(4)) == identity(4)
    with pytest.raises(NotAPermutation):
        invert(make_map(2, 2, [0, 0, 1]))


def test_multi_u_examples():
    assert multi_u(3, MultiIndex((1, 3))).table == (0, 0, 1, 0)
    assert multi_u(3, MultiIndex((1, 3))) == compose(generator("u", 1, 1), generator("u", 2, 3))
    assert multi_u(3, MultiIndex()) == identity(3)
    assert multi_u(4, MultiIndex((2, 3))).table == (0, 1, 0, 0, 2)


def test_multi_d_examples():
    assert multi_d(3, MultiIndex((1,))).table == (0, 2, 3)
    assert multi_d(3, MultiIndex()) == identity(3)
    assert multi_d(3, MultiIndex((1, 3))).table == (0, 2)


def test_multi_index_validation():
    with pytest.raises(IndexOutOfRange):
        MultiIndex((0, 1))
    with pytest.raises(IndexOutOfRange):
        MultiIndex((2, 1))
    assert MultiIndex.of([3, 1]).indices == (1, 3)


@pytest.mark.parametrize("n", range(9))
def test_multi_operators_match_elementary_compositions(n):
    for k in range(n + 1):
        for beta in itertools.combinations(range(1, n + 1), k):
            # covariant u_beta = u_{i_1} o ... o u_{i_k}
            f = identity(n)
            dim = n
            for i in reversed(beta):
                f = compose(generator("u", dim - 1, i), f)
                dim -= 1
            assert multi_u(n, beta) == f
        for alpha in itertools.combinations(range(1, n + 1), k):
            dim = n - k
            f = identity(dim)
            for i in alpha:
                dim += 1
                f = compose(generator("d", dim, i), f)
            assert multi_d(n, alpha) == f


def test_composition_associative_and_unital_small():
    dims = range(3)
    homs = {(a, b): list(maps(a, b)) for a in dims for b in dims}
    for a, b, c, d in itertools.product(dims, repeat=4):
        for f in homs[a, b]:
            assert compose(identity(b), f) == f == compose(f, identity(a))
            for g in homs[b, c]:
                gf = compose(g, f)
                for h in homs[c, d]:
                    assert compose(h, gf) == compose(compose(h, g), f)


def test_quasi_monotonic_closed_under_composition():
    dims = range(5)
    qm = {(a, b): [f for f in maps(a, b) if classify(f).quasi_monotonic] for a in dims for b in dims}
    for a, b, c in itertools.product(dims, repeat=3):
        for f in qm[a, b]:
            for g in qm[b, c]:
                assert classify(compose(g, f)).quasi_monotonic
