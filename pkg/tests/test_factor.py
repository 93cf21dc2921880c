import pytest

from symsimp.errors import ContainsT0, IndexOutOfRange, NotMonotonic, NotQuasiMonotonic, NotZeroFixing, ZeroExcluded
from symsimp.factor import (
    factor_general,
    factor_monotone,
    factor_qm,
    perm_to_word,
    push_perm,
    push_t_through_u,
    t_act,
    t_tilde,
)
from symsimp.fin import MultiIndex, identity, make_map
from symsimp.words import Gen, Word, evaluate, parse, render, u_spelling


def M(*xs):
    return MultiIndex(xs)


def test_factor_monotone():
    fac = factor_monotone(make_map(2, 1, [0, 0, 1]))
    assert (fac.alpha, fac.beta) == ((), (0,))
    fac = factor_monotone(identity(3))
    assert (fac.alpha, fac.beta) == ((), ())
    fac = factor_monotone(make_map(1, 2, [0, 2]))
    assert (fac.alpha, fac.beta) == ((1,), ())
    assert fac.recompose() == make_map(1, 2, [0, 2])
    with pytest.raises(NotMonotonic):
        factor_monotone(make_map(1, 1, [1, 0]))


def test_factor_qm():
    f = make_map(4, 3, [0, 2, 0, 0, 3])
    fac = factor_qm(f)
    assert fac.alpha == M(1) and fac.beta == M(2, 3)
    assert fac.recompose() == f
    assert render(fac.spelling()) == "u3 u2 d1"
    fac = factor_qm(identity(4))
    assert fac.alpha == M() and fac.beta == M()
    with pytest.raises(NotQuasiMonotonic) as err:
        factor_qm(make_map(2, 2, [1, 2, 0]))
    assert err.value.failed == "QM1"
    with pytest.raises(NotQuasiMonotonic) as err:
        factor_qm(make_map(2, 2, [0, 2, 1]))
    assert err.value.failed == "QM2"


def test_t_act():
    assert t_act(2, M(1, 3)) == M(1, 2)
    assert t_act(1, M(2)) == M(1)
    assert t_act(5, M(1, 2)) == M(1, 2)
    with pytest.raises(ZeroExcluded):
        t_act(0, M(1))


def test_t_tilde():
    assert t_tilde(3, M(2, 5)) == Gen("t", 2)
    assert t_tilde(2, M(1, 3)) is None
    assert t_tilde(4, M()) == Gen("t", 4)
    with pytest.raises(IndexOutOfRange):
        t_tilde(0, M(1))


def test_push_t_through_u():
    assert push_t_through_u(2, M(1, 3)) == (M(1, 2), None)
    assert evaluate("t2 u3 u1", 3).table == (0, 0, 0, 1) == evaluate("u2 u1", 3).table
    assert push_t_through_u(1, M(2)) == (M(1), None)
    assert evaluate("t1 u2", 2) == evaluate("u1", 2)
    assert push_t_through_u(1, M(3)) == (M(3), Gen("t", 1))
    assert evaluate("t1 u3", 3) == evaluate("u3 t1", 3)


def test_push_perm_single_and_empty():
    assert push_perm("t1", M(2)) == (M(1), Word())
    assert push_perm("", M(1, 3)) == (M(1, 3), Word())


def test_push_perm_two_step_fold():
    # t2 t1 sends 2 to 3 under the pipeline, so the zero set {0, 3} of u3 pulls back to {0, 2}
    gamma, rest = push_perm("t2 t1", M(3))
    assert gamma == M(2) and render(rest) == "t1"
    assert evaluate("t2 t1 u3", 3) == evaluate(u_spelling(gamma) + rest, 3)
    # the value ({1}, empty) would not satisfy the word equality
    assert evaluate("t2 t1 u3", 3) != evaluate("u1", 3)


def test_push_perm_rejects():
    with pytest.raises(ContainsT0):
        push_perm("t1 t0", M(1))
    with pytest.raises(NotZeroFixing):
        push_perm("z2", M(1))


def test_factor_general():
    f = make_map(2, 2, [0, 0, 2])
    fac = factor_general(f)
    assert fac.pi == Word()
    mono = factor_monotone(f)
    assert (fac.alpha, fac.beta) == (mono.alpha, mono.beta)

    fac = factor_general(make_map(1, 1, [1, 0]))
    assert render(fac.pi) == "t0" and fac.alpha == () and fac.beta == ()

    f = make_map(2, 1, [1, 1, 0])
    fac = factor_general(f)
    assert fac.beta == (1,) and fac.alpha == ()
    # stable sort: 2 comes first, then 0 and 1 in order
    assert evaluate(fac.pi, 2).table == (1, 2, 0)
    assert fac.recompose() == f


def test_perm_to_word():
    assert perm_to_word(identity(3)) == Word()
    assert render(perm_to_word(make_map(2, 2, [1, 0, 2]))) == "t0"
    w = perm_to_word(make_map(2, 2, [1, 2, 0]))
    assert len(w) == 2 and evaluate(w, 2).table == (1, 2, 0)
    assert parse(render(w)) == w
