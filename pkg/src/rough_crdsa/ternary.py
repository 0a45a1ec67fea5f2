"""Ternary partition lattices TP_J.

An element is a pair ``(ones, zeros)`` of disjoint subsets of the index set
J; the middle region ``J \\ (ones | zeros)`` is implicit.  Bottom is
``(∅, J)``, top is ``(J, ∅)`` and the core element is ``(∅, ∅)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .algebra import FiniteAlgebra, TooLargeError

DEFAULT_TP_BOUND = 729


@dataclass(frozen=True)
class TernaryPartition:
    ones: frozenset
    zeros: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ones", frozenset(self.ones))
        object.__setattr__(self, "zeros", frozenset(self.zeros))
        if self.ones & self.zeros:
            raise ValueError(f"ones and zeros overlap: {sorted(map(str, self.ones & self.zeros))}")

    def middle(self, J: Iterable) -> frozenset:
        return frozenset(J) - self.ones - self.zeros


TP_H = TernaryPartition(frozenset(), frozenset())


def tp_bottom(J: Iterable) -> TernaryPartition:
    return TernaryPartition(frozenset(), frozenset(J))


def tp_top(J: Iterable) -> TernaryPartition:
    return TernaryPartition(frozenset(J), frozenset())


def tp_join(a: TernaryPartition, b: TernaryPartition) -> TernaryPartition:
    return TernaryPartition(a.ones | b.ones, a.zeros & b.zeros)


def tp_meet(a: TernaryPartition, b: TernaryPartition) -> TernaryPartition:
    return TernaryPartition(a.ones & b.ones, a.zeros | b.zeros)


def tp_leq(a: TernaryPartition, b: TernaryPartition) -> bool:
    return a.ones <= b.ones and b.zeros <= a.zeros


def tp_star(a: TernaryPartition, J: Iterable) -> TernaryPartition:
    """Pseudocomplement: everything outside becomes in, the rest out."""
    return TernaryPartition(a.zeros, frozenset(J) - a.zeros)


def tp_plus(a: TernaryPartition, J: Iterable) -> TernaryPartition:
    """Dual pseudocomplement: everything not fully in becomes in."""
    return TernaryPartition(frozenset(J) - a.ones, a.ones)


def tp_join_all(Z: Iterable[TernaryPartition], J: Iterable | None = None) -> TernaryPartition:
    """Join of a family: ``(∪ ones, ∩ zeros)``.  The empty family joins to bottom (needs J)."""
    Z = list(Z)
    if not Z:
        if J is None:
            raise ValueError("the join of an empty family is the bottom; pass J")
        return tp_bottom(J)
    return TernaryPartition(frozenset().union(*(z.ones for z in Z)),
                            reduce(frozenset.intersection, (z.zeros for z in Z)))


def tp_meet_all(Z: Iterable[TernaryPartition], J: Iterable | None = None) -> TernaryPartition:
    """Meet of a family: ``(∩ ones, ∪ zeros)``.  The empty family meets to top (needs J)."""
    Z = list(Z)
    if not Z:
        if J is None:
            raise ValueError("the meet of an empty family is the top; pass J")
        return tp_top(J)
    return TernaryPartition(reduce(frozenset.intersection, (z.ones for z in Z)),
                            frozenset().union(*(z.zeros for z in Z)))


def enumerate_tp(J: Sequence) -> list[TernaryPartition]:
    """All of TP_J, ordered lexicographically by per-index status (zeros < middle < ones)."""
    out = [TernaryPartition(frozenset(), frozenset())]
    for j in reversed(J):
        # prepend coordinate j as the most significant one
        nxt = []
        for status in range(3):
            for t in out:
                if status == 0:
                    nxt.append(TernaryPartition(t.ones, t.zeros | {j}))
                elif status == 1:
                    nxt.append(t)
                else:
                    nxt.append(TernaryPartition(t.ones | {j}, t.zeros))
        out = nxt
    return out


class TernaryPartitionAlgebra:
    """TP_J defined by its operations only (for index sets too large to tabulate)."""

    def __init__(self, J: Sequence):
        self.index = tuple(J)
        self._J = frozenset(self.index)
        if len(self._J) != len(self.index):
            raise ValueError("index set has repeated elements")
        self.zero = tp_bottom(self._J)
        self.one = tp_top(self._J)
        self.core_h = TP_H
        self.name = f"TP_{len(self.index)}"

    meet = staticmethod(tp_meet)
    join = staticmethod(tp_join)

    def star(self, a):
        return tp_star(a, self._J)

    def plus(self, a):
        return tp_plus(a, self._J)

    def leq(self, a, b):
        return tp_leq(a, b)

    def __len__(self):
        return 3 ** len(self.index)

    def __contains__(self, a):
        return isinstance(a, TernaryPartition) and a.ones <= self._J and a.zeros <= self._J

    def __iter__(self):
        return iter(enumerate_tp(self.index))

    def materialize(self, max_size: int = DEFAULT_TP_BOUND) -> FiniteAlgebra:
        return build_tp_algebra(self.index, max_size)


def build_tp_algebra(J: Sequence, max_size: int = DEFAULT_TP_BOUND) -> FiniteAlgebra:
    J = tuple(J)
    if 3 ** len(J) > max_size:
        raise TooLargeError(f"TP over {len(J)} indices has {3 ** len(J)} elements, bound is {max_size}")
    view = TernaryPartitionAlgebra(J)
    return FiniteAlgebra.from_functions(enumerate_tp(J), view.meet, view.join, view.star,
                                        view.plus, view.zero, view.one, view.core_h,
                                        name=f"TP_{len(J)}")
