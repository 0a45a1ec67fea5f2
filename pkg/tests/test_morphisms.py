import pytest

from rough_crdsa import (C3, AlgebraMap, ApproximationSpace, NotCRDSAError, RoughPair,
                         TernaryPartition, alpha, alpha_inv, alpha_map, build_c3_power,
                         build_doubling_space, build_prsa, class_collapse, embed_prsa_into_c3u,
                         generate_subalgebra, is_embedding, is_homomorphism, is_isomorphism,
                         parse_vector, phi, phi_map, render_vector, roundtrip_doubling)
from rough_crdsa.morphisms import alpha_inv_map
from rough_crdsa.ternary import TP_H, enumerate_tp

WXYZ = ("w", "x", "y", "z")
U4 = frozenset(WXYZ)
TABLE_C3U = {"0000", "hh00", "00hh", "hhhh", "1100", "0011", "11hh", "hh11", "1111"}


def P(lo, up):
    return RoughPair(frozenset(lo), frozenset(up))


def T(ones, zeros):
    return TernaryPartition(frozenset(ones), frozenset(zeros))


def test_alpha_examples():
    assert alpha(TP_H, "ab") == (C3.H, C3.H)
    assert render_vector(alpha(T("wx", ""), WXYZ)) == "11hh"
    assert render_vector(alpha(T("yz", "wx"), WXYZ)) == "0011"
    assert alpha_inv(parse_vector("10h"), "abc") == T("a", "b")
    with pytest.raises(ValueError):
        alpha_inv(parse_vector("10"), "abc")


@pytest.mark.parametrize("n", range(4))
def test_alpha_mutually_inverse_isomorphisms(n):
    J = tuple(range(n))
    fwd, back = alpha_map(J), alpha_inv_map(J)
    assert is_isomorphism(fwd).holds
    assert is_isomorphism(back).holds
    for a in enumerate_tp(J):
        assert back(fwd(a)) == a


def test_phi_examples(worked):
    assert phi(P("", ""), worked) == T("", U4)
    assert phi(P("", U4), worked) == TP_H
    assert phi(P("wx", U4), worked) == T("wx", "")


def test_phi_is_embedding(worked):
    assert is_embedding(phi_map(worked)).holds


def test_phi_on_singleton_class_space():
    S = ApproximationSpace.from_blocks(["a", "bc", "de"])
    m = phi_map(S)
    rep = is_embedding(m, ops=("meet", "join"), check_core=False)
    assert rep.holds, rep.lines()
    assert len(set(m.images())) == len(m.source)


def test_embedding_reproduces_table_column(worked):
    m = embed_prsa_into_c3u(worked)
    assert {render_vector(v) for v in m.images()} == TABLE_C3U
    assert m(P(U4, U4)) == (C3.ONE,) * 4
    assert is_embedding(m).holds
    # phi then alpha, pointwise
    for p in m.source.carrier:
        assert m(p) == alpha(phi(p, worked), WXYZ)


def test_embedding_image_is_closed(worked):
    m = embed_prsa_into_c3u(worked)
    C = build_c3_power(4, max_size=81)
    image = set(m.images())
    assert set(generate_subalgebra(C, image).carrier) == image


def test_embedding_requires_crdsa():
    S = ApproximationSpace.from_blocks(["a", "bc"])
    with pytest.raises(NotCRDSAError):
        embed_prsa_into_c3u(S)
    with pytest.raises(NotCRDSAError):
        class_collapse(S)
    m = class_collapse(S, strict=False)
    assert is_homomorphism(m, check_core=False).holds


def test_class_collapse(worked):
    m = class_collapse(worked)
    assert render_vector(m(P("", U4))) == "hh"
    assert render_vector(m(P("wx", U4))) == "1h"
    assert is_isomorphism(m).holds
    assert len(set(m.images())) == 9


@pytest.mark.parametrize("blocks", [["ab"], ["ab", "cde"], ["abc", "de", "fg"],
                                    ["ab", "cd", "ef", "gh"]])
def test_class_collapse_bijective(blocks):
    S = ApproximationSpace.from_blocks(blocks)
    assert is_isomorphism(class_collapse(S)).holds


def test_constant_map_to_zero_fails(worked):
    R = build_prsa(worked)
    C = build_c3_power(2)
    m = AlgebraMap(R, C, {p: C.zero for p in R.carrier}, "const")
    rep = is_homomorphism(m)
    assert not rep.holds
    failed = {part.law_name for part in rep.parts if not part.holds}
    assert "preserves_one" in failed
    assert "preserves_star" in failed


def test_wrong_map_reports_witness(worked):
    # swap the images of two atoms of the target: still a bijection, no longer a homomorphism
    m = class_collapse(worked)
    a, b = P("", "wx"), P("", "yz")
    assignment = dict(m.assignment)
    assignment[a], assignment[b] = assignment[b], assignment[a]
    bad = AlgebraMap(m.source, m.target, assignment, "swapped")
    rep = is_isomorphism(bad)
    assert not rep.holds
    assert any(p.counterexample for p in rep.parts if not p.holds)


def test_map_must_be_total(worked):
    R = build_prsa(worked)
    C = build_c3_power(2)
    with pytest.raises(ValueError, match="undefined"):
        AlgebraMap(R, C, {}, "empty")
    with pytest.raises(ValueError, match="outside"):
        AlgebraMap(R, C, {p: "nope" for p in R.carrier})


def test_not_surjective(worked):
    m = embed_prsa_into_c3u(worked)
    rep = is_isomorphism(m)
    assert not rep.holds
    assert [p.law_name for p in rep.parts if not p.holds] == ["surjective"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_roundtrip_doubling(n):
    rep = roundtrip_doubling([f"j{i}" for i in range(n)])
    assert rep.holds, rep.lines()
    if n <= 2:
        assert any("brute-force" in p.law_name for p in rep.parts)


def test_doubling_matches_worked_space_up_to_renaming(worked):
    S = build_doubling_space(["j0", "j1"])
    rename = dict(zip(S.universe, worked.universe))
    renamed = ApproximationSpace(tuple(rename[u] for u in S.universe),
                                 tuple(tuple(rename[u] for u in b) for b in S.blocks))
    assert renamed == worked
