"""Explicit finite algebras of signature (meet, join, star, plus, 0, 1[, h]).

An algebra is a carrier of opaque hashable handles together with operation
tables indexed by carrier position.  Every law is checked by exhaustive
substitution; the heavy loops live in :mod:`rough_crdsa._kernels`.

The lattice order is never stored: ``x <= y`` iff ``x ^ y == x``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Sequence

import numpy as np

from . import _kernels

#: Brute-force isomorphism search refuses carriers larger than this (3**4).
DEFAULT_ISO_BOUND = 81


class StructureError(ValueError):
    """An operation table is malformed (wrong shape, non-carrier output, ...)."""


class InconsistencyError(RuntimeError):
    """Raised when checks that should agree disagree; indicates a bug."""


class TooLargeError(ValueError):
    """The requested exhaustive computation exceeds the configured bound."""


LAW_TEXT = {
    "meet_idempotent": "x ∧ x = x",
    "join_idempotent": "x ∨ x = x",
    "meet_commutative": "x ∧ y = y ∧ x",
    "join_commutative": "x ∨ y = y ∨ x",
    "meet_associative": "(x ∧ y) ∧ z = x ∧ (y ∧ z)",
    "join_associative": "(x ∨ y) ∨ z = x ∨ (y ∨ z)",
    "absorb_meet_join": "x ∧ (x ∨ y) = x",
    "absorb_join_meet": "x ∨ (x ∧ y) = x",
    "meet_distributes": "x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)",
    "join_distributes": "x ∨ (y ∧ z) = (x ∨ y) ∧ (x ∨ z)",
    "zero_bound": "x ∨ 0 = x",
    "one_bound": "x ∧ 1 = x",
    "pseudocomplement": "y ≤ x* ⟺ y ∧ x = 0",
    "dual_pseudocomplement": "y ≥ x⁺ ⟺ y ∨ x = 1",
    "star_stone": "x* ∨ x** = 1",
    "plus_stone": "x⁺ ∧ x⁺⁺ = 0",
    "star_meet_law": "x ∧ (x ∧ y)* = x ∧ y*",
    "plus_join_law": "x ∨ (x ∨ y)⁺ = x ∨ y⁺",
    "star_zero_unit": "x ∧ 0* = x",
    "plus_one_unit": "x ∨ 1⁺ = x",
    "star_zero_fixed": "0** = 0",
    "plus_one_fixed": "1⁺⁺ = 1",
    "regular_inequality": "x ∧ x⁺ ≤ y ∨ y*",
    "regular_determination": "x* = y* and x⁺ = y⁺ ⟹ x = y",
    "core_meet_form": "x = x** ∧ (x⁺⁺ ∨ h)",
    "core_join_form": "x = x⁺⁺ ∨ (x** ∧ h)",
    "center_contains_zero": "0 ∈ C(L)",
    "center_contains_one": "1 ∈ C(L)",
    "center_meet_closed": "x, y ∈ C(L) ⟹ x ∧ y ∈ C(L)",
    "center_join_closed": "x, y ∈ C(L) ⟹ x ∨ y ∈ C(L)",
    "center_star_closed": "x ∈ C(L) ⟹ x* ∈ C(L)",
    "center_complement_meet": "x ∧ x* = 0 on C(L)",
    "center_complement_join": "x ∨ x* = 1 on C(L)",
    "center_is_star_image": "C(L) = {x* : x ∈ L}",
    "center_is_plus_image": "C(L) = {x⁺ : x ∈ L}",
}


@dataclass(frozen=True)
class LawReport:
    """Outcome of checking one law (or a conjunction of laws, via ``parts``).

    ``counterexample`` holds carrier elements, substituted for the law's
    variables in order (x, y, z).  A composite report carries the first
    failing part's counterexample and names that part in ``detail``.
    """

    law_name: str
    holds: bool
    counterexample: tuple | None = None
    detail: str = ""
    parts: tuple["LawReport", ...] = field(default=(), repr=False)

    def __post_init__(self):
        if self.holds == (self.counterexample is not None):
            raise ValueError("a report fails exactly when it carries a counterexample")

    def __bool__(self):
        return self.holds

    @classmethod
    def combine(cls, law_name: str, parts: Iterable["LawReport"]) -> "LawReport":
        parts = tuple(parts)
        for p in parts:
            if not p.holds:
                detail = p.law_name if not p.detail else f"{p.law_name}: {p.detail}"
                return cls(law_name, False, p.counterexample, detail, parts)
        return cls(law_name, True, None, "", parts)

    def lines(self, indent: int = 0) -> list[str]:
        pad = "  " * indent
        verdict = "holds" if self.holds else "FAILS"
        out = f"{pad}{self.law_name}: {verdict}"
        if not self.holds:
            out += f" at {self.counterexample!r}"
            if self.detail:
                out += f" ({self.detail})"
        rows = [out]
        for p in self.parts:
            rows.extend(p.lines(indent + 1))
        return rows


def _table(values, shape, n, what):
    try:
        arr = np.array(values, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"{what} table is not an integer array: {exc}") from None
    if arr.shape != shape:
        raise StructureError(f"{what} table has shape {arr.shape}, expected {shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise StructureError(f"{what} table entry at {tuple(int(i) for i in bad)} is not a carrier position")
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


class FiniteAlgebra:
    """An explicit finite algebra ``<L, ∧, ∨, *, +, 0, 1[, h]>``.

    Tables hold carrier *positions*: ``meet_table[i, j]`` is the position of
    ``carrier[i] ∧ carrier[j]``.  Use :meth:`from_functions` to build one from
    element-level operations.
    """

    def __init__(self, carrier: Sequence[Hashable], meet_table, join_table, star_table,
                 plus_table, zero, one, core_h=None, name: str = ""):
        self.carrier = tuple(carrier)
        n = len(self.carrier)
        if n == 0:
            raise StructureError("carrier must be nonempty")
        self._index = {a: i for i, a in enumerate(self.carrier)}
        if len(self._index) != n:
            raise StructureError("carrier handles are not distinct")
        self.meet_table = _table(meet_table, (n, n), n, "meet")
        self.join_table = _table(join_table, (n, n), n, "join")
        self.star_table = _table(star_table, (n,), n, "star")
        self.plus_table = _table(plus_table, (n,), n, "plus")
        for label, c in (("zero", zero), ("one", one)):
            if c not in self._index:
                raise StructureError(f"{label} constant {c!r} is not a carrier element")
        if core_h is not None and core_h not in self._index:
            raise StructureError(f"core constant {core_h!r} is not a carrier element")
        self.zero, self.one, self.core_h = zero, one, core_h
        self.name = name

    @classmethod
    def from_functions(cls, carrier: Sequence[Hashable], meet: Callable, join: Callable,
                       star: Callable, plus: Callable, zero, one, core_h=None,
                       name: str = "") -> "FiniteAlgebra":
        carrier = tuple(carrier)
        index = {a: i for i, a in enumerate(carrier)}
        if len(index) != len(carrier):
            raise StructureError("carrier handles are not distinct")

        def pos(value, what, args):
            try:
                return index[value]
            except (KeyError, TypeError):
                raise StructureError(f"{what}{args!r} = {value!r} is not a carrier element") from None

        meet_t = [[pos(meet(a, b), "meet", (a, b)) for b in carrier] for a in carrier]
        join_t = [[pos(join(a, b), "join", (a, b)) for b in carrier] for a in carrier]
        star_t = [pos(star(a), "star", (a,)) for a in carrier]
        plus_t = [pos(plus(a), "plus", (a,)) for a in carrier]
        return cls(carrier, meet_t, join_t, star_t, plus_t, zero, one, core_h, name)

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    def __contains__(self, a):
        try:
            return a in self._index
        except TypeError:
            return False

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteAlgebra{label} |L|={len(self)}>"

    def index(self, a) -> int:
        try:
            return self._index[a]
        except (KeyError, TypeError):
            raise KeyError(f"{a!r} is not a carrier element") from None

    @property
    def zero_index(self) -> int:
        return self._index[self.zero]

    @property
    def one_index(self) -> int:
        return self._index[self.one]

    def meet(self, a, b):
        return self.carrier[self.meet_table[self._index[a], self._index[b]]]

    def join(self, a, b):
        return self.carrier[self.join_table[self._index[a], self._index[b]]]

    def star(self, a):
        return self.carrier[self.star_table[self._index[a]]]

    def plus(self, a):
        return self.carrier[self.plus_table[self._index[a]]]

    def leq(self, a, b) -> bool:
        return self.meet(a, b) == a

    def leq_matrix(self) -> np.ndarray:
        """``M[i, j]`` is True iff ``carrier[i] <= carrier[j]``."""
        idx = np.arange(len(self))
        return self.meet_table == idx[:, None]

    def with_core(self, h) -> "FiniteAlgebra":
        """The same algebra presented with ``h`` as its core constant."""
        return FiniteAlgebra(self.carrier, self.meet_table, self.join_table, self.star_table,
                             self.plus_table, self.zero, self.one, h, self.name)


def _elements(A: FiniteAlgebra, positions) -> tuple:
    return tuple(A.carrier[i] for i in positions)


def _report(A, law_name, found, code_key=None):
    """Turn a kernel result into a LawReport."""
    if found is None:
        return LawReport(law_name, True)
    if code_key is None:
        return LawReport(law_name, False, _elements(A, found), LAW_TEXT.get(law_name, ""))
    code, positions = found
    return LawReport(law_name, False, _elements(A, positions), f"{code}: {LAW_TEXT[code]}")


def check_bounded_distributive_lattice(A: FiniteAlgebra) -> LawReport:
    found = _kernels.lattice_violation(A.meet_table, A.join_table, A.zero_index, A.one_index)
    return _report(A, "bounded_distributive_lattice", found, code_key=True)


def check_pseudocomplement(A: FiniteAlgebra) -> LawReport:
    found = _kernels.pseudocomplement_violation(A.meet_table, A.star_table, A.zero_index)
    return _report(A, "pseudocomplement", found)


def check_dual_pseudocomplement(A: FiniteAlgebra) -> LawReport:
    found = _kernels.dual_pseudocomplement_violation(A.meet_table, A.join_table, A.plus_table,
                                                     A.one_index)
    return _report(A, "dual_pseudocomplement", found)


def check_stone_identities(A: FiniteAlgebra) -> LawReport:
    found = _kernels.stone_violation(A.meet_table, A.join_table, A.star_table, A.plus_table,
                                     A.zero_index, A.one_index)
    return _report(A, "stone_identities", found, code_key=True)


def check_dsa_equations(A: FiniteAlgebra) -> LawReport:
    """The equational replacement for the two pseudocomplement conditions."""
    found = _kernels.dsa_equation_violation(A.meet_table, A.join_table, A.star_table,
                                            A.plus_table, A.zero_index, A.one_index)
    return _report(A, "dsa_equations", found, code_key=True)


def check_regular(A: FiniteAlgebra) -> LawReport:
    """Regularity, both as the inequality and as the determination property."""
    ineq = _kernels.regularity_violation(A.meet_table, A.join_table, A.star_table, A.plus_table)
    det = _kernels.determination_violation(A.star_table, A.plus_table)
    return LawReport.combine("regular", [
        _report(A, "regular_inequality", ineq),
        _report(A, "regular_determination", det),
    ])


def check_dsa(A: FiniteAlgebra) -> LawReport:
    return LawReport.combine("double_stone_algebra", [
        check_bounded_distributive_lattice(A),
        check_pseudocomplement(A),
        check_dual_pseudocomplement(A),
        check_stone_identities(A),
    ])


def dense_set(A: FiniteAlgebra) -> tuple:
    return _elements(A, np.flatnonzero(A.star_table == A.zero_index))


def dual_dense_set(A: FiniteAlgebra) -> tuple:
    return _elements(A, np.flatnonzero(A.plus_table == A.one_index))


def core(A: FiniteAlgebra) -> tuple:
    dense = set(dense_set(A))
    return tuple(x for x in dual_dense_set(A) if x in dense)


def is_crdsa(A: FiniteAlgebra) -> tuple[bool, Any]:
    """Return ``(True, h)`` when A is a regular double Stone algebra with core ``{h}``.

    Raises InconsistencyError if regularity holds but the core has more than
    one element.  An algebra whose declared ``core_h`` differs from the
    computed core element is not a CRDSA as presented.
    """
    if not check_dsa(A).holds or not check_regular(A).holds:
        return False, None
    K = core(A)
    if not K:
        return False, None
    if len(K) > 1:
        raise InconsistencyError(f"regular algebra with {len(K)} core elements: {K!r}")
    h = K[0]
    if A.core_h is not None and A.core_h != h:
        return False, None
    return True, h


def center(A: FiniteAlgebra) -> tuple:
    return _elements(A, np.flatnonzero(A.star_table == A.plus_table))


def check_center_characterizations(A: FiniteAlgebra) -> LawReport:
    """C(L) = {x*} = {x⁺}; holds in every regular double Stone algebra."""
    C = set(center(A))
    parts = []
    for law, table in (("center_is_star_image", A.star_table),
                       ("center_is_plus_image", A.plus_table)):
        image = {A.carrier[i] for i in table}
        diff = [x for x in A.carrier if (x in C) != (x in image)]
        parts.append(LawReport(law, False, (diff[0],), LAW_TEXT[law]) if diff
                     else LawReport(law, True))
    return LawReport.combine("center_characterizations", parts)


def check_center_boolean(A: FiniteAlgebra) -> LawReport:
    """The center is a Boolean subalgebra under the induced ∧, ∨ and *."""
    C = center(A)
    inC = set(C)

    def fail(law, *witness):
        return LawReport("center_boolean", False, tuple(witness), f"{law}: {LAW_TEXT[law]}")

    # first-failure order: constants, closure, complement laws
    if A.zero not in inC:
        return fail("center_contains_zero", A.zero)
    if A.one not in inC:
        return fail("center_contains_one", A.one)
    for x in C:
        for y in C:
            if A.meet(x, y) not in inC:
                return fail("center_meet_closed", x, y)
    for x in C:
        for y in C:
            if A.join(x, y) not in inC:
                return fail("center_join_closed", x, y)
    for x in C:
        if A.star(x) not in inC:
            return fail("center_star_closed", x)
    for x in C:
        if A.meet(x, A.star(x)) != A.zero:
            return fail("center_complement_meet", x)
    for x in C:
        if A.join(x, A.star(x)) != A.one:
            return fail("center_complement_join", x)
    return LawReport("center_boolean", True)


def check_core_decomposition(A: FiniteAlgebra, h=None) -> LawReport:
    if h is None:
        h = A.core_h
    if h is None:
        ok, h = is_crdsa(A)
        if not ok:
            raise ValueError("core decomposition needs a CRDSA (no core element)")
    s, p = A.star, A.plus
    meet_form = join_form = None
    for x in A.carrier:
        xss, xpp = s(s(x)), p(p(x))
        if meet_form is None and A.meet(xss, A.join(xpp, h)) != x:
            meet_form = (x,)
        if join_form is None and A.join(xpp, A.meet(xss, h)) != x:
            join_form = (x,)
    parts = []
    for law, w in (("core_meet_form", meet_form), ("core_join_form", join_form)):
        parts.append(LawReport(law, True) if w is None else LawReport(law, False, w, LAW_TEXT[law]))
    return LawReport.combine("core_decomposition", parts)


def check_all(A: FiniteAlgebra) -> list[LawReport]:
    """Every CRDSA law, each as its own report (used by the acceptance suite)."""
    reports = [
        check_bounded_distributive_lattice(A),
        check_pseudocomplement(A),
        check_dual_pseudocomplement(A),
        check_stone_identities(A),
        check_dsa_equations(A),
        check_regular(A),
    ]
    K = core(A)
    if len(K) == 1:
        reports.append(LawReport("core_singleton", True))
        reports.append(check_core_decomposition(A, K[0]))
    else:
        reports.append(LawReport("core_singleton", False, K, f"|K| = {len(K)}"))
    reports.append(check_center_characterizations(A))
    reports.append(check_center_boolean(A))
    return reports


def atoms(A: FiniteAlgebra) -> tuple:
    """Minimal elements of ``L \\ {0}``."""
    leq = A.leq_matrix()
    z = A.zero_index
    nonzero = np.ones(len(A), dtype=bool)
    nonzero[z] = False
    found = []
    for x in np.flatnonzero(nonzero):
        below = leq[:, x] & nonzero
        below[x] = False
        if not below.any():
            found.append(int(x))
    return _elements(A, found)


def generate_subalgebra(A, seeds: Iterable = ()) -> FiniteAlgebra:
    """Smallest subalgebra containing ``seeds``, the constants, and h if present.

    ``A`` may be a :class:`FiniteAlgebra` or any object with element-level
    ``meet/join/star/plus`` and ``zero/one/core_h`` (e.g. a lazily defined
    power of C3).  The result lists its carrier in A's carrier order when A
    has one, otherwise in sorted order.
    """
    start = [A.zero, A.one] + ([A.core_h] if A.core_h is not None else []) + list(seeds)
    for s in start:
        if s not in A:
            raise ValueError(f"seed {s!r} is not an element of the algebra")
    members = []
    seen = set()
    queue = list(start)
    while queue:
        x = queue.pop()
        if x in seen:
            continue
        seen.add(x)
        members.append(x)
        queue.append(A.star(x))
        queue.append(A.plus(x))
        for y in members:
            queue.append(A.meet(x, y))
            queue.append(A.join(x, y))
    if isinstance(A, FiniteAlgebra):
        carrier = [a for a in A.carrier if a in seen]
    else:
        carrier = sorted(seen)
    return FiniteAlgebra.from_functions(carrier, A.meet, A.join, A.star, A.plus,
                                        A.zero, A.one, A.core_h,
                                        name=f"Sg({getattr(A, 'name', '')})")


def _signatures(A: FiniteAlgebra) -> list[tuple]:
    n = len(A)
    leq = A.leq_matrix()
    star_fiber = np.bincount(A.star_table, minlength=n)
    plus_fiber = np.bincount(A.plus_table, minlength=n)
    down = leq.sum(axis=0)
    up = leq.sum(axis=1)
    return [(int(star_fiber[i]), int(plus_fiber[i]), int(down[i]), int(up[i]),
             bool(A.star_table[i] == A.plus_table[i])) for i in range(n)]


def is_isomorphic_bruteforce(A: FiniteAlgebra, B: FiniteAlgebra,
                             max_size: int = DEFAULT_ISO_BOUND) -> dict | None:
    """Search for an isomorphism A -> B; return it as a dict or None.

    Constants are pinned (0->0, 1->1, and h->h when both algebras carry a
    core constant; if only one does, the signatures differ and None is
    returned).  Candidates are filtered by order and star/plus fiber
    invariants and every assignment propagates the images it forces, so the
    search is deterministic in carrier order.
    """
    n = len(A)
    if n != len(B):
        return None
    if n > max_size:
        raise TooLargeError(f"carrier of size {n} exceeds brute-force bound {max_size}")
    if (A.core_h is None) != (B.core_h is None):
        return None
    sa, sb = _signatures(A), _signatures(B)
    if sorted(sa) != sorted(sb):
        return None

    am, aj = A.meet_table.tolist(), A.join_table.tolist()
    bm, bj = B.meet_table.tolist(), B.join_table.tolist()
    ast, apl = A.star_table.tolist(), A.plus_table.tolist()
    bst, bpl = B.star_table.tolist(), B.plus_table.tolist()
    f = [-1] * n
    g = [-1] * n
    assigned: list[int] = []

    def assign(a, b):
        """Assign a->b and everything it forces; return trail length or None on conflict."""
        mark = len(assigned)
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            if f[x] != -1:
                if f[x] != y:
                    return undo(mark)
                continue
            if g[y] != -1 or sa[x] != sb[y]:
                return undo(mark)
            f[x], g[y] = y, x
            assigned.append(x)
            stack.append((ast[x], bst[y]))
            stack.append((apl[x], bpl[y]))
            for x2 in assigned:
                y2 = f[x2]
                stack.append((am[x][x2], bm[y][y2]))
                stack.append((aj[x][x2], bj[y][y2]))
        return mark

    def undo(mark):
        while len(assigned) > mark:
            x = assigned.pop()
            g[f[x]] = -1
            f[x] = -1
        return None

    pins = [(A.zero_index, B.zero_index), (A.one_index, B.one_index)]
    if A.core_h is not None:
        pins.append((A.index(A.core_h), B.index(B.core_h)))
    for a, b in pins:
        if assign(a, b) is None:
            return None

    # rarest signature first, carrier order within a class
    counts: dict[tuple, int] = {}
    for s in sa:
        counts[s] = counts.get(s, 0) + 1
    order = sorted(range(n), key=lambda i: (counts[sa[i]], i))
    candidates = {a: [b for b in range(n) if sb[b] == sa[a]] for a in range(n)}

    def search(k):
        while k < n and f[order[k]] != -1:
            k += 1
        if k == n:
            return True
        a = order[k]
        for b in candidates[a]:
            if g[b] != -1:
                continue
            mark = assign(a, b)
            if mark is None:
                continue
            if search(k + 1):
                return True
            undo(mark)
        return False

    if not search(0):
        return None
    fa = np.array(f, dtype=np.int64)
    if _kernels.homomorphism_violation(A.meet_table, A.join_table, A.star_table, A.plus_table,
                                       B.meet_table, B.join_table, B.star_table, B.plus_table,
                                       fa) is not None:
        raise InconsistencyError("propagated assignment is not a homomorphism")
    return {A.carrier[i]: B.carrier[f[i]] for i in range(n)}


def crdsa_isomorphic_by_center(A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    """Two CRDSAs are isomorphic iff their (finite Boolean) centers are equinumerous."""
    for X in (A, B):
        ok, _ = is_crdsa(X)
        if not ok:
            raise ValueError(f"{X!r} is not a CRDSA")
    return len(center(A)) == len(center(B))
