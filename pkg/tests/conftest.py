import itertools

import pytest

from rough_crdsa import FiniteAlgebra, build_c3, build_c3_power, parse_space
from rough_crdsa.acceptance import WORKED_SPACE

ZERO, H, ONE = "0", "h", "1"


def one_element():
    return FiniteAlgebra(("e",), [[0]], [[0]], [0], [0], "e", "e", "e", name="1")


def boolean4():
    """{0, a, b, 1} as subsets of a 2-set; * = + = complement."""
    bits = {"0": 0b00, "a": 0b01, "b": 0b10, "1": 0b11}
    name = {v: k for k, v in bits.items()}
    return FiniteAlgebra.from_functions(
        tuple(bits),
        lambda x, y: name[bits[x] & bits[y]],
        lambda x, y: name[bits[x] | bits[y]],
        lambda x: name[~bits[x] & 0b11],
        lambda x: name[~bits[x] & 0b11],
        "0", "1", name="B4",
    )


def chain4():
    """0 < a < b < 1 with its only Stone structure: a, b dense and dually dense."""
    rank = {"0": 0, "a": 1, "b": 2, "1": 3}
    elems = tuple(rank)
    return FiniteAlgebra.from_functions(
        elems,
        lambda x, y: min(x, y, key=rank.get),
        lambda x, y: max(x, y, key=rank.get),
        lambda x: "1" if x == "0" else "0",
        lambda x: "0" if x == "1" else "1",
        "0", "1", name="C4",
    )


def m3():
    """The diamond 0 < a, b, c < 1: a lattice that is not distributive."""
    elems = ("0", "a", "b", "c", "1")

    def meet(x, y):
        if x == y or y == "1":
            return x
        if x == "1":
            return y
        return "0"

    def join(x, y):
        if x == y or y == "0":
            return x
        if x == "0":
            return y
        return "1"

    comp = {"0": "1", "1": "0", "a": "0", "b": "0", "c": "0"}
    return FiniteAlgebra.from_functions(elems, meet, join, comp.get,
                                        lambda x: "0" if x == "1" else "1", "0", "1", name="M3")


def mutate(A, star=None, plus=None, name="mutant"):
    """Copy of A with some star/plus values overridden (element -> element)."""
    star_t = list(A.star_table)
    plus_t = list(A.plus_table)
    for x, v in (star or {}).items():
        star_t[A.index(x)] = A.index(v)
    for x, v in (plus or {}).items():
        plus_t[A.index(x)] = A.index(v)
    return FiniteAlgebra(A.carrier, A.meet_table, A.join_table, star_t, plus_t,
                         A.zero, A.one, A.core_h, name=name)


def brute_first(elements, arity, predicate):
    """Oracle: first tuple in lexicographic carrier order falsifying predicate."""
    for args in itertools.product(elements, repeat=arity):
        if not predicate(*args):
            return args
    return None


@pytest.fixture
def worked():
    return parse_space(WORKED_SPACE)


@pytest.fixture(scope="session")
def c3():
    return build_c3()


@pytest.fixture(scope="session")
def c3_2():
    return build_c3_power(2)


@pytest.fixture(scope="session")
def c3_3():
    return build_c3_power(3)
