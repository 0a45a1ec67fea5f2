"""Explicit maps between the algebras and homomorphism verification.

``alpha``: TP_J -> C3^J (1 on ones, 0 on zeros, h elsewhere).
``phi``: rough pair -> ternary partition ``(lower, U \\ upper)`` of U.
``class_collapse``: rough pair -> C3^E, one coordinate per block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

import numpy as np

from . import _kernels
from .algebra import (FiniteAlgebra, LawReport, center, crdsa_isomorphic_by_center,
                      is_isomorphic_bruteforce)
from .chain import C3, DEFAULT_POWER_BOUND, PointwiseC3, build_c3_power
from .space import (BOUNDARY, INSIDE, ApproximationSpace, RoughPair, build_doubling_space,
                    build_prsa, is_crdsa_space)
from .ternary import TernaryPartition, TernaryPartitionAlgebra, build_tp_algebra


class NotCRDSAError(ValueError):
    """The space has a singleton block, so R_θ has no core element."""


@dataclass(frozen=True)
class AlgebraMap:
    """A total map from a finite algebra's carrier into another algebra."""

    source: FiniteAlgebra
    target: Any
    assignment: Mapping
    name: str = ""

    def __post_init__(self):
        for a in self.source.carrier:
            if a not in self.assignment:
                raise ValueError(f"{self.name or 'map'} is undefined at {a!r}")
            if self.assignment[a] not in self.target:
                raise ValueError(f"{self.name or 'map'} sends {a!r} outside the target")

    def __call__(self, a):
        return self.assignment[a]

    def images(self) -> list:
        return [self.assignment[a] for a in self.source.carrier]


def alpha(tp: TernaryPartition, J: Sequence) -> tuple:
    return tuple(C3.ONE if j in tp.ones else C3.ZERO if j in tp.zeros else C3.H for j in J)


def alpha_inv(v: Sequence[C3], J: Sequence) -> TernaryPartition:
    if len(v) != len(J):
        raise ValueError(f"vector of length {len(v)} over an index set of size {len(J)}")
    return TernaryPartition(frozenset(j for j, c in zip(J, v) if c == C3.ONE),
                            frozenset(j for j, c in zip(J, v) if c == C3.ZERO))


def phi(p: RoughPair, S: ApproximationSpace) -> TernaryPartition:
    return TernaryPartition(p.lower, frozenset(S.universe) - p.upper)


def alpha_map(J: Sequence) -> AlgebraMap:
    J = tuple(J)
    tp = build_tp_algebra(J)
    c3 = build_c3_power(J)
    return AlgebraMap(tp, c3, {a: alpha(a, J) for a in tp.carrier}, "α")


def alpha_inv_map(J: Sequence) -> AlgebraMap:
    J = tuple(J)
    tp = build_tp_algebra(J)
    c3 = build_c3_power(J)
    return AlgebraMap(c3, tp, {v: alpha_inv(v, J) for v in c3.carrier}, "α⁻¹")


def _prsa(S, prsa):
    return prsa if prsa is not None else build_prsa(S)


def phi_map(S: ApproximationSpace, prsa: FiniteAlgebra | None = None) -> AlgebraMap:
    R = _prsa(S, prsa)
    return AlgebraMap(R, TernaryPartitionAlgebra(S.universe), {p: phi(p, S) for p in R.carrier}, "φ")


def embed_prsa_into_c3u(S: ApproximationSpace, prsa: FiniteAlgebra | None = None,
                        strict: bool = True) -> AlgebraMap:
    """R_θ -> TP_U -> C3^U, i.e. ``alpha(phi(p))`` with coordinates in universe order."""
    if strict and not is_crdsa_space(S):
        raise NotCRDSAError("R_θ is a CRDSA only when every block has at least two elements")
    R = _prsa(S, prsa)
    return AlgebraMap(R, PointwiseC3(S.universe),
                      {p: alpha(phi(p, S), S.universe) for p in R.carrier}, "φ∘α")


def collapse_vector(S: ApproximationSpace, p: RoughPair) -> tuple:
    """Block-indexed C3 vector: 1 if the block is inside, 0 if outside, h on the boundary."""
    return tuple(C3.ONE if st == INSIDE else C3.H if st == BOUNDARY else C3.ZERO
                 for st in S.statuses(p))


def class_collapse(S: ApproximationSpace, prsa: FiniteAlgebra | None = None,
                   strict: bool = True) -> AlgebraMap:
    if strict and not is_crdsa_space(S):
        raise NotCRDSAError("R_θ is a CRDSA only when every block has at least two elements")
    R = _prsa(S, prsa)
    k = len(S.blocks)
    target = build_c3_power(k) if 3 ** k <= DEFAULT_POWER_BOUND else PointwiseC3(k)
    return AlgebraMap(R, target, {p: collapse_vector(S, p) for p in R.carrier}, "collapse")


def _constants(m: AlgebraMap, check_core: bool) -> list[LawReport]:
    src, tgt = m.source, m.target
    out = []
    pairs = [("preserves_zero", src.zero, tgt.zero), ("preserves_one", src.one, tgt.one)]
    if check_core and src.core_h is not None:
        pairs.append(("preserves_core", src.core_h, getattr(tgt, "core_h", None)))
    for law, a, b in pairs:
        if m(a) == b:
            out.append(LawReport(law, True))
        else:
            out.append(LawReport(law, False, (a,), f"maps to {m(a)!r}, expected {b!r}"))
    return out


def _operations(m: AlgebraMap, ops: Sequence[str]) -> list[LawReport]:
    src, tgt = m.source, m.target
    if isinstance(tgt, FiniteAlgebra) and set(ops) == {"meet", "join", "star", "plus"}:
        f = np.array([tgt.index(b) for b in m.images()], dtype=np.int64)
        found = _kernels.homomorphism_violation(
            src.meet_table, src.join_table, src.star_table, src.plus_table,
            tgt.meet_table, tgt.join_table, tgt.star_table, tgt.plus_table, f)
        reports = [LawReport(f"preserves_{op}", True) for op in ("meet", "join", "star", "plus")]
        if found is not None:
            op, positions = found
            i = ("meet", "join", "star", "plus").index(op)
            reports[i] = LawReport(f"preserves_{op}", False,
                                   tuple(src.carrier[p] for p in positions))
        return reports

    reports = []
    C = src.carrier
    for op in ops:
        witness = None
        if op in ("meet", "join"):
            s_op, t_op = getattr(src, op), getattr(tgt, op)
            for a in C:
                fa = m(a)
                for b in C:
                    if m(s_op(a, b)) != t_op(fa, m(b)):
                        witness = (a, b)
                        break
                if witness:
                    break
        else:
            s_op, t_op = getattr(src, op), getattr(tgt, op)
            for a in C:
                if m(s_op(a)) != t_op(m(a)):
                    witness = (a,)
                    break
        reports.append(LawReport(f"preserves_{op}", witness is None, witness))
    return reports


def is_homomorphism(m: AlgebraMap, ops: Sequence[str] = ("meet", "join", "star", "plus"),
                    check_core: bool = True) -> LawReport:
    """Preservation of the given operations and of 0, 1 (and h when the source has one)."""
    return LawReport.combine("homomorphism", _operations(m, ops) + _constants(m, check_core))


def _injective(m: AlgebraMap) -> LawReport:
    seen = {}
    for a in m.source.carrier:
        b = m(a)
        if b in seen:
            return LawReport("injective", False, (seen[b], a), "same image")
        seen[b] = a
    return LawReport("injective", True)


def is_embedding(m: AlgebraMap, **kw) -> LawReport:
    hom = is_homomorphism(m, **kw)
    return LawReport.combine("embedding", hom.parts + (_injective(m),))


def is_isomorphism(m: AlgebraMap, **kw) -> LawReport:
    emb = is_embedding(m, **kw)
    n_img = len(set(m.images()))
    if n_img == len(m.target):
        surj = LawReport("surjective", True)
    else:
        missed = None
        if isinstance(m.target, FiniteAlgebra):
            img = set(m.images())
            missed = next(b for b in m.target.carrier if b not in img)
        surj = LawReport("surjective", False, (missed,),
                         f"image has {n_img} of {len(m.target)} elements")
    return LawReport.combine("isomorphism", emb.parts + (surj,))


def roundtrip_doubling(J: Sequence, brute_force_bound: int = 9) -> LawReport:
    """Doubling space over J: R_θ ≅ C3^J ≅ TP_J, checked several independent ways."""
    J = tuple(J)
    S = build_doubling_space(J)
    R = build_prsa(S)
    C = build_c3_power(J)
    T = build_tp_algebra(J)
    parts = []

    collapse = class_collapse(S, R)
    rep = is_isomorphism(collapse)
    parts.append(LawReport(f"R_θ ≅ C3^{len(J)} via collapse", rep.holds, rep.counterexample, rep.detail))
    rep = is_isomorphism(alpha_map(J))
    parts.append(LawReport(f"TP_{len(J)} ≅ C3^{len(J)} via α", rep.holds, rep.counterexample, rep.detail))

    same = crdsa_isomorphic_by_center(R, C) and crdsa_isomorphic_by_center(T, C)
    sizes = (len(center(R)), len(center(C)), len(center(T)))
    parts.append(LawReport("equal center cardinalities", same, None if same else sizes,
                           "" if same else f"centers {sizes}"))

    if len(R) <= brute_force_bound:
        for label, B in (("C3^J", C), ("TP_J", T)):
            w = is_isomorphic_bruteforce(R, B)
            parts.append(LawReport(f"brute-force R_θ ≅ {label}", w is not None,
                                   None if w is not None else (label,), ""))
    return LawReport.combine(f"doubling roundtrip |J|={len(J)}", parts)
