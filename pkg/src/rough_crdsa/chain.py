"""The three-element chain C3 = {0 < h < 1} and its finite powers.

Vectors are plain tuples of :class:`C3`; operations are pointwise, with
meet/join the chain min/max.
"""
from __future__ import annotations

import itertools
from enum import IntEnum
from typing import Iterable, Sequence

from .algebra import FiniteAlgebra, TooLargeError

#: Default bound on explicitly materialized powers (3**6 elements).
DEFAULT_POWER_BOUND = 729


class C3(IntEnum):
    ZERO = 0
    H = 1
    ONE = 2

    def __str__(self):
        return "0h1"[self.value]

    def __repr__(self):
        return f"C3.{self.name}"

    @classmethod
    def parse(cls, ch: str) -> "C3":
        try:
            return cls("0h1".index(ch))
        except ValueError:
            raise ValueError(f"not a C3 symbol: {ch!r}") from None


_STAR = {C3.ZERO: C3.ONE, C3.H: C3.ZERO, C3.ONE: C3.ZERO}
_PLUS = {C3.ZERO: C3.ONE, C3.H: C3.ONE, C3.ONE: C3.ZERO}


def c3_star(v: C3) -> C3:
    return _STAR[v]


def c3_plus(v: C3) -> C3:
    return _PLUS[v]


def c3_meet(a: C3, b: C3) -> C3:
    return min(a, b)


def c3_join(a: C3, b: C3) -> C3:
    return max(a, b)


def vec_meet(a: tuple, b: tuple) -> tuple:
    return tuple(map(min, a, b))


def vec_join(a: tuple, b: tuple) -> tuple:
    return tuple(map(max, a, b))


def vec_star(a: tuple) -> tuple:
    return tuple(_STAR[v] for v in a)


def vec_plus(a: tuple) -> tuple:
    return tuple(_PLUS[v] for v in a)


def render_vector(v: Iterable[C3]) -> str:
    """Coordinate string such as ``"hh00"``."""
    return "".join(str(c) for c in v)


def parse_vector(s: str) -> tuple:
    return tuple(C3.parse(ch) for ch in s)


def build_c3() -> FiniteAlgebra:
    """C3 itself, with bare chain values as the carrier."""
    return FiniteAlgebra.from_functions(
        tuple(C3), c3_meet, c3_join, c3_star, c3_plus,
        C3.ZERO, C3.ONE, C3.H, name="C3",
    )


def _arity(E) -> int:
    return E if isinstance(E, int) else len(E)


class PointwiseC3:
    """C3^E defined by its operations only, without tables.

    Used as a target when 3**|E| is too large to materialize, e.g. the
    embedding of a rough set algebra into C3^U.
    """

    def __init__(self, E):
        self.index = tuple(range(E)) if isinstance(E, int) else tuple(E)
        n = len(self.index)
        self.zero = (C3.ZERO,) * n
        self.one = (C3.ONE,) * n
        self.core_h = (C3.H,) * n
        self.name = f"C3^{n}"

    meet = staticmethod(vec_meet)
    join = staticmethod(vec_join)
    star = staticmethod(vec_star)
    plus = staticmethod(vec_plus)

    def __len__(self):
        return 3 ** len(self.index)

    def __contains__(self, v):
        return (isinstance(v, tuple) and len(v) == len(self.index)
                and all(isinstance(c, C3) for c in v))

    def __iter__(self):
        return itertools.product(tuple(C3), repeat=len(self.index))

    def leq(self, a, b) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def materialize(self, max_size: int = DEFAULT_POWER_BOUND) -> FiniteAlgebra:
        return build_c3_power(self.index, max_size)


def build_c3_power(E: int | Sequence, max_size: int = DEFAULT_POWER_BOUND) -> FiniteAlgebra:
    """C3^E with carrier in lexicographic order (0 < h < 1 per coordinate)."""
    n = _arity(E)
    if 3 ** n > max_size:
        raise TooLargeError(f"C3^{n} has {3 ** n} elements, bound is {max_size}")
    carrier = list(itertools.product(tuple(C3), repeat=n))
    return FiniteAlgebra.from_functions(carrier, vec_meet, vec_join, vec_star, vec_plus,
                                        (C3.ZERO,) * n, (C3.ONE,) * n, (C3.H,) * n,
                                        name=f"C3^{n}")
