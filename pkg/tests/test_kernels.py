"""The compiled and numpy kernels must return identical first counterexamples."""
import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rough_crdsa import _kernels, build_c3_power, build_prsa
from rough_crdsa.space import ApproximationSpace

BACKENDS = _kernels.backends()


@st.composite
def tables(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    cell = st.integers(0, n - 1)
    meet = np.array(draw(st.lists(st.lists(cell, min_size=n, max_size=n), min_size=n, max_size=n)))
    join = np.array(draw(st.lists(st.lists(cell, min_size=n, max_size=n), min_size=n, max_size=n)))
    star = np.array(draw(st.lists(cell, min_size=n, max_size=n)))
    plus = np.array(draw(st.lists(cell, min_size=n, max_size=n)))
    zero, one = draw(cell), draw(cell)
    as_i64 = lambda a: np.ascontiguousarray(a, dtype=np.int64)  # noqa: E731
    return as_i64(meet), as_i64(join), as_i64(star), as_i64(plus), zero, one


def call_all(name, *args):
    return {b: getattr(mod, name)(*args) for b, mod in BACKENDS.items()}


def oracle_lattice(meet, join, zero, one):
    n = len(meet)
    r = range(n)
    laws = [
        ("meet_idempotent", 1, lambda x: meet[x, x] == x),
        ("join_idempotent", 1, lambda x: join[x, x] == x),
        ("meet_commutative", 2, lambda x, y: meet[x, y] == meet[y, x]),
        ("join_commutative", 2, lambda x, y: join[x, y] == join[y, x]),
        ("meet_associative", 3, lambda x, y, z: meet[meet[x, y], z] == meet[x, meet[y, z]]),
        ("join_associative", 3, lambda x, y, z: join[join[x, y], z] == join[x, join[y, z]]),
        ("absorb_meet_join", 2, lambda x, y: meet[x, join[x, y]] == x),
        ("absorb_join_meet", 2, lambda x, y: join[x, meet[x, y]] == x),
        ("meet_distributes", 3, lambda x, y, z: meet[x, join[y, z]] == join[meet[x, y], meet[x, z]]),
        ("join_distributes", 3, lambda x, y, z: join[x, meet[y, z]] == meet[join[x, y], join[x, z]]),
        ("zero_bound", 1, lambda x: join[x, zero] == x),
        ("one_bound", 1, lambda x: meet[x, one] == x),
    ]
    for code, arity, pred in laws:
        for args in itertools.product(r, repeat=arity):
            if not pred(*args):
                return code, args
    return None


@settings(max_examples=300, deadline=None)
@given(tables())
def test_lattice_kernel_matches_oracle(t):
    meet, join, _, _, zero, one = t
    expected = oracle_lattice(meet, join, zero, one)
    for backend, got in call_all("lattice_violation", meet, join, zero, one).items():
        assert got == expected, backend


@settings(max_examples=300, deadline=None)
@given(tables())
def test_unary_kernels_match_oracle(t):
    meet, join, star, plus, zero, one = t
    n = len(meet)
    pairs = list(itertools.product(range(n), repeat=2))

    def first(pred):
        return next(((x, y) for x, y in pairs if not pred(x, y)), None)

    expected = {
        "pseudocomplement_violation": first(
            lambda x, y: (meet[y, star[x]] == y) == (meet[y, x] == zero)),
        "dual_pseudocomplement_violation": first(
            lambda x, y: (meet[plus[x], y] == plus[x]) == (join[y, x] == one)),
        "regularity_violation": first(
            lambda x, y: meet[meet[x, plus[x]], join[y, star[y]]] == meet[x, plus[x]]),
        "determination_violation": first(
            lambda x, y: x >= y or not (star[x] == star[y] and plus[x] == plus[y])),
    }
    args = {
        "pseudocomplement_violation": (meet, star, zero),
        "dual_pseudocomplement_violation": (meet, join, plus, one),
        "regularity_violation": (meet, join, star, plus),
        "determination_violation": (star, plus),
    }
    for name, exp in expected.items():
        for backend, got in call_all(name, *args[name]).items():
            assert got == exp, (name, backend)


@settings(max_examples=300, deadline=None)
@given(tables())
def test_remaining_kernels_agree_across_backends(t):
    meet, join, star, plus, zero, one = t
    for name, args in [
        ("stone_violation", (meet, join, star, plus, zero, one)),
        ("dsa_equation_violation", (meet, join, star, plus, zero, one)),
    ]:
        results = call_all(name, *args)
        assert len(set(map(repr, results.values()))) == 1, (name, results)


@settings(max_examples=200, deadline=None)
@given(tables(), tables(), st.data())
def test_homomorphism_kernel_agrees(s, t, data):
    n, m = len(s[0]), len(t[0])
    f = np.array(data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n)), dtype=np.int64)
    results = call_all("homomorphism_violation", *s[:4], *t[:4], f)
    assert len(set(map(repr, results.values()))) == 1


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_backends_pass_real_algebras(backend):
    mod = BACKENDS[backend]
    S = ApproximationSpace.from_blocks(["ab", "cde", "fg"])
    for A in (build_c3_power(3), build_prsa(S)):
        args = (A.meet_table, A.join_table, A.star_table, A.plus_table)
        assert mod.lattice_violation(A.meet_table, A.join_table, A.zero_index, A.one_index) is None
        assert mod.regularity_violation(*args) is None
        assert mod.determination_violation(A.star_table, A.plus_table) is None
        assert mod.stone_violation(*args, A.zero_index, A.one_index) is None
        assert mod.dsa_equation_violation(*args, A.zero_index, A.one_index) is None


def test_compiled_backend_selected_when_built():
    # the package build compiles the extension; the fallback is still always present
    assert "python" in BACKENDS
    assert _kernels.BACKEND in BACKENDS


def test_env_var_forces_fallback():
    import os
    import subprocess
    import sys
    env = dict(os.environ, ROUGH_CRDSA_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import rough_crdsa; print(rough_crdsa.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
