import itertools
import random

import pytest

from rough_crdsa import (TP_H, TernaryPartition, TernaryPartitionAlgebra, alpha, alpha_inv,
                         build_tp_algebra, check_all, is_crdsa, tp_join, tp_join_all, tp_leq,
                         tp_meet, tp_meet_all, tp_plus, tp_star, vec_plus, vec_star)
from rough_crdsa.ternary import enumerate_tp, tp_bottom, tp_top

J4 = frozenset("wxyz")


def T(ones, zeros):
    return TernaryPartition(frozenset(ones), frozenset(zeros))


def test_disjointness_enforced():
    with pytest.raises(ValueError, match="overlap"):
        T("a", "ab")
    assert T("a", "b").middle("abc") == {"c"}


def test_join_meet_examples():
    assert tp_join(T("wx", "yz"), TP_H) == T("wx", "")
    J = "ab"
    for a in enumerate_tp(J):
        assert tp_join(a, tp_bottom(J)) == a
        assert tp_meet(tp_top(J), a) == a


def test_leq_examples():
    J = "ab"
    for a in enumerate_tp(J):
        assert tp_leq(tp_bottom(J), a) and tp_leq(a, tp_top(J))
    assert tp_leq(TP_H, T("j", ""))
    assert not tp_leq(T("j", ""), T("", "j"))


@pytest.mark.parametrize("n", range(4))
def test_leq_agrees_with_meet_order(n):
    elems = enumerate_tp(range(n))
    for a, b in itertools.product(elems, repeat=2):
        assert tp_leq(a, b) == (tp_meet(a, b) == a)


def test_star_plus_examples():
    J = "ab"
    assert tp_star(TP_H, J) == tp_bottom(J)
    assert tp_star(tp_bottom(J), J) == tp_top(J)
    assert tp_plus(tp_top(J), J) == tp_bottom(J)
    assert tp_star(T("wx", "yz"), J4) == T("yz", "wx")


@pytest.mark.parametrize("n", range(4))
def test_star_plus_conjugate_through_alpha(n):
    J = tuple(range(n))
    for a in enumerate_tp(J):
        assert alpha(tp_star(a, J), J) == vec_star(alpha(a, J))
        assert alpha(tp_plus(a, J), J) == vec_plus(alpha(a, J))
        assert alpha_inv(alpha(a, J), J) == a


def test_enumeration_order_and_size():
    elems = enumerate_tp("ab")
    assert len(elems) == len(set(elems)) == 9
    assert elems[0] == tp_bottom("ab") and elems[-1] == tp_top("ab")
    assert elems[4] == TP_H
    assert enumerate_tp(()) == [TP_H]


def test_small_algebras():
    one = build_tp_algebra(())
    assert len(one) == 1 and one.zero == one.one == TP_H
    chain = build_tp_algebra(["j"])
    assert chain.carrier == (T("", "j"), TP_H, T("j", ""))
    assert all(chain.leq(a, b) for a, b in zip(chain.carrier, chain.carrier[1:]))
    # Hasse diagram of TP over two indices: 12 covering pairs
    A = build_tp_algebra("ab")
    covers = 0
    for a, b in itertools.permutations(A.carrier, 2):
        if A.leq(a, b) and not any(c not in (a, b) and A.leq(a, c) and A.leq(c, b)
                                   for c in A.carrier):
            covers += 1
    assert covers == 12


@pytest.mark.parametrize("n", range(4))
def test_full_suite(n):
    A = build_tp_algebra(range(n))
    assert all(r.holds for r in check_all(A)), [r.lines() for r in check_all(A) if not r.holds]
    assert is_crdsa(A) == (True, TP_H)


def test_lazy_view():
    V = TernaryPartitionAlgebra("abcdefghij")
    assert len(V) == 3 ** 10
    assert T("a", "b") in V and T("q", "") not in V
    assert V.star(TP_H) == V.zero and V.plus(TP_H) == V.one
    with pytest.raises(ValueError):
        TernaryPartitionAlgebra("aa")


def test_join_meet_all_examples():
    J = "ef"
    Z = enumerate_tp(J)
    assert tp_join_all(Z) == tp_top(J)
    assert tp_meet_all(Z) == tp_bottom(J)
    assert tp_join_all([T("", "e"), T("e", "")]) == T("e", "")
    assert tp_join_all([], J) == tp_bottom(J)
    assert tp_meet_all([], J) == tp_top(J)
    with pytest.raises(ValueError):
        tp_join_all([])
    with pytest.raises(ValueError):
        tp_meet_all([])


def test_join_meet_all_equal_folds():
    rng = random.Random(0)
    elems = enumerate_tp("abc")
    for _ in range(100):
        Z = rng.sample(elems, rng.randint(1, len(elems)))
        j, m = Z[0], Z[0]
        for z in Z[1:]:
            j, m = tp_join(j, z), tp_meet(m, z)
        assert tp_join_all(Z) == j
        assert tp_meet_all(Z) == m
