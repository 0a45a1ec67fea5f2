"""Exit criteria, runnable from pytest and from ``rough-crdsa selftest``.

Each criterion returns ``(passed, detail)``; :func:`run_all` times them and
formats one line per criterion.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterator

from more_itertools import set_partitions

from .algebra import (atoms, center, check_all, check_center_boolean, crdsa_isomorphic_by_center,
                      generate_subalgebra, is_crdsa, is_isomorphic_bruteforce)
from .chain import build_c3, build_c3_power
from .cli import cmd_table, render_subset
from .morphisms import (alpha_map, class_collapse, embed_prsa_into_c3u, is_embedding,
                        is_isomorphism, roundtrip_doubling)
from .space import (ApproximationSpace, RoughPair, _carrier_masks, build_doubling_space,
                    build_prsa, carrier_size, center_of_prsa, core_witness, crisp_sets,
                    enumerate_carrier, parse_space, rough_pair, upper_approx)
from .ternary import build_tp_algebra, enumerate_tp, tp_join, tp_join_all, tp_meet, tp_meet_all

WORKED_SPACE = """\
# four elements in two classes
universe: w x y z
block: w x
block: y z
"""

# X -> (lower, upper, TP_U, C3^U, C3^E); lower/upper follow the approximation
# definitions (for singletons, upper is the element's own block).
WORKED_TABLE = {
    "∅": ("∅", "∅", "(∅,U)", "0000", "00"),
    "{w}": ("∅", "{w,x}", "(∅,{y,z})", "hh00", "h0"),
    "{x}": ("∅", "{w,x}", "(∅,{y,z})", "hh00", "h0"),
    "{y}": ("∅", "{y,z}", "(∅,{w,x})", "00hh", "0h"),
    "{z}": ("∅", "{y,z}", "(∅,{w,x})", "00hh", "0h"),
    "{w,y}": ("∅", "U", "(∅,∅)", "hhhh", "hh"),
    "{w,x}": ("{w,x}", "{w,x}", "({w,x},{y,z})", "1100", "10"),
    "{w,z}": ("∅", "U", "(∅,∅)", "hhhh", "hh"),
    "{x,y}": ("∅", "U", "(∅,∅)", "hhhh", "hh"),
    "{y,z}": ("{y,z}", "{y,z}", "({y,z},{w,x})", "0011", "01"),
    "{x,z}": ("∅", "U", "(∅,∅)", "hhhh", "hh"),
    "{w,x,z}": ("{w,x}", "U", "({w,x},∅)", "11hh", "1h"),
    "{w,x,y}": ("{w,x}", "U", "({w,x},∅)", "11hh", "1h"),
    "{w,y,z}": ("{y,z}", "U", "({y,z},∅)", "hh11", "h1"),
    "{x,y,z}": ("{y,z}", "U", "({y,z},∅)", "hh11", "h1"),
    "U": ("U", "U", "(U,∅)", "1111", "11"),
}


def worked_space() -> ApproximationSpace:
    return parse_space(WORKED_SPACE)


def spaces(n: int, min_block: int = 1) -> Iterator[ApproximationSpace]:
    """Every partition of an n-element universe (optionally with all blocks >= min_block)."""
    universe = tuple(f"u{i}" for i in range(n))
    for blocks in set_partitions(universe):
        if all(len(b) >= min_block for b in blocks):
            yield ApproximationSpace(universe, tuple(map(tuple, blocks)))


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def shape_space(shape: tuple) -> ApproximationSpace:
    """A space whose blocks have the given sizes (consecutive universe elements)."""
    universe = tuple(f"u{i}" for i in range(sum(shape)))
    blocks, i = [], 0
    for size in shape:
        blocks.append(universe[i:i + size])
        i += size
    return ApproximationSpace(universe, tuple(blocks))


def crdsa_spaces(max_universe: int = 8) -> Iterator[ApproximationSpace]:
    for n in range(2, max_universe + 1):
        yield from spaces(n, min_block=2)


# -- criteria ---------------------------------------------------------------

def criterion_table() -> tuple[bool, str]:
    start = time.perf_counter()
    text, code = cmd_table(worked_space(), tsv=True)
    elapsed = time.perf_counter() - start
    lines = text.splitlines()
    rows = {r[0]: tuple(r[1:]) for r in (ln.split("\t") for ln in lines[1:])}
    if code != 0 or len(lines) != 17:
        return False, f"exit {code}, {len(lines) - 1} data rows"
    bad = []
    for X, (lo, up, tp, c3u, c3e) in WORKED_TABLE.items():
        got = rows.get(X)
        if got is None or (got[0], got[1], got[3], got[4], got[5]) != (lo, up, tp, c3u, c3e):
            bad.append(X)
    # upper^c column is the complement of the upper approximation
    S = worked_space()
    for m in range(1 << len(S.universe)):
        X = S.members(m)
        comp = frozenset(S.universe) - upper_approx(S, X)
        if rows[render_subset(S, X)][2] != render_subset(S, comp):
            bad.append(render_subset(S, X) + " (upper^c)")
    if bad:
        return False, f"mismatched rows: {bad}"
    if elapsed >= 1.0:
        return False, f"took {elapsed:.2f}s (limit 1s)"
    return True, f"16 rows match, {elapsed * 1000:.1f} ms"


def criterion_theorem_crdsa() -> tuple[bool, str]:
    start = time.perf_counter()
    count = 0
    for n in range(1, 7):
        for S in spaces(n):
            count += 1
            expect = all(len(b) >= 2 for b in S.blocks)
            ok, h = is_crdsa(build_prsa(S))
            U = frozenset(S.universe)
            core_pair = RoughPair(frozenset(), U)
            if ok != expect or (ok and h != core_pair):
                return False, f"is_crdsa mismatch on {S.blocks}"
            w = core_witness(S)
            if (w is not None) != expect:
                return False, f"core_witness presence mismatch on {S.blocks}"
            if w is not None and rough_pair(S, w) != core_pair:
                return False, f"witness {sorted(w)} does not give (∅,U) on {S.blocks}"
            # (∅, U) is realized by some subset iff the block condition holds
            full = S.full_mask
            realized = any(S.approx_masks(m) == (0, full) for m in range(1 << n))
            if realized != expect:
                return False, f"(∅,U) realizability mismatch on {S.blocks}"
    elapsed = time.perf_counter() - start
    if count != 1 + 2 + 5 + 15 + 52 + 203:
        return False, f"enumerated {count} spaces"
    if elapsed >= 10.0:
        return False, f"took {elapsed:.2f}s (limit 10s)"
    return True, f"{count} spaces, {elapsed:.2f}s"


def axiom_corpus():
    yield "C3", build_c3()
    for k in (2, 3):
        yield f"C3^{k}", build_c3_power(k)
    for k in range(0, 4):
        yield f"TP_{k}", build_tp_algebra(tuple(range(k)))
    for S in crdsa_spaces(8):
        yield f"R_θ{S.blocks}", build_prsa(S)


def criterion_axioms() -> tuple[bool, str]:
    count = 0
    for name, A in axiom_corpus():
        count += 1
        for rep in check_all(A):
            if not rep.holds:
                return False, f"{name}: {rep.law_name} fails at {rep.counterexample!r} ({rep.detail})"
        ok, _ = is_crdsa(A)
        if not ok:
            return False, f"{name}: not a CRDSA"
    return True, f"{count} algebras, zero counterexamples"


def criterion_carrier_count() -> tuple[bool, str]:
    count = 0
    # every block-size shape up to 12 elements (rough pairs commute with relabeling) ...
    candidates = [shape_space(sh) for n in range(1, 13) for sh in integer_partitions(n)]
    n_shapes = len(candidates)
    # ... plus every concrete partition up to 7 elements
    candidates += [S for n in range(1, 8) for S in spaces(n)]
    for S in candidates:
        expected = math.prod(2 if len(b) == 1 else 3 for b in S.blocks)
        pairs = set(_carrier_masks(S))
        if len(pairs) != expected or carrier_size(S) != expected:
            return False, f"count mismatch on {S.blocks}"
        image = {S.approx_masks(m) for m in range(1 << len(S.universe))}
        if image != pairs:
            return False, f"carrier differs from power-set image on {S.blocks}"
        count += 1
    n9 = len(enumerate_carrier(worked_space()))
    if n9 != 9:
        return False, f"worked space has {n9} rough pairs"
    return True, (f"{n_shapes} block-size shapes up to |U| = 12 and {count - n_shapes} "
                  f"partitions up to |U| = 7; worked space 9 pairs")


def criterion_isomorphism_chain() -> tuple[bool, str]:
    alpha_ok = {}
    count = 0
    for S in crdsa_spaces(8):
        k = len(S.blocks)
        if k > 4:
            continue
        count += 1
        R = build_prsa(S)
        rep = is_isomorphism(class_collapse(S, R))
        if not rep.holds:
            return False, f"class_collapse on {S.blocks}: {rep.detail}"
        if k not in alpha_ok:
            alpha_ok[k] = is_isomorphism(alpha_map(range(k)))
        if not alpha_ok[k].holds:
            return False, f"α on |E|={k}: {alpha_ok[k].detail}"
        rep = is_embedding(embed_prsa_into_c3u(S, R))
        if not rep.holds:
            return False, f"φ∘α on {S.blocks}: {rep.detail}"
    return True, f"{count} CRDSA spaces with |E| <= 4"


def criterion_center() -> tuple[bool, str]:
    count = 0
    tested = [S for n in range(1, 7) for S in spaces(n)] + list(crdsa_spaces(8))
    for S in tested:
        R = build_prsa(S)
        C = center_of_prsa(S, R)
        crisp = crisp_sets(S)
        if set(C) != set(crisp) or len(C) != 2 ** len(S.blocks):
            return False, f"center != crisp sets on {S.blocks}"
        rep = check_center_boolean(R)
        if not rep.holds:
            return False, f"center not Boolean on {S.blocks}: {rep.detail}"
        count += 1
    return True, f"{count} spaces"


def criterion_doubling() -> tuple[bool, str]:
    for size in (1, 2, 3):
        rep = roundtrip_doubling(tuple(f"j{i}" for i in range(size)))
        if not rep.holds:
            return False, f"|J|={size}: {rep.detail}"
    S = build_doubling_space(("j0", "j1"))
    rename = {("j0", 0): "w", ("j0", 1): "x", ("j1", 0): "y", ("j1", 1): "z"}
    renamed = ApproximationSpace(tuple(rename[u] for u in S.universe),
                                 tuple(tuple(rename[u] for u in b) for b in S.blocks))
    if renamed != worked_space():
        return False, "|J|=2 doubling space is not the worked space up to renaming"
    R = build_prsa(S)
    if len(R) != 9 or is_isomorphic_bruteforce(R, build_c3_power(2)) is None:
        return False, "no brute-force witness at size 9"
    return True, "|J| = 1, 2, 3 round-trip; |J|=2 is the worked space"


def classification_corpus():
    """Finite algebras built every way the package can, up to 27 elements."""
    yield "C3", build_c3()
    for k in range(0, 4):
        yield f"C3^{k}", build_c3_power(k)
        yield f"TP_{k}", build_tp_algebra(tuple(range(k)))
    for n in range(1, 7):
        for S in spaces(n):
            if carrier_size(S) <= 27:
                yield f"R_θ{S.blocks}", build_prsa(S)
    seen = set()
    for k in (2, 3):
        A = build_c3_power(k)
        elems = A.carrier
        seeds = [()] + [(a,) for a in elems] + [(a, b) for i, a in enumerate(elems) for b in elems[i + 1:]]
        for s in seeds:
            sub = generate_subalgebra(A, s)
            key = (k, sub.carrier)
            if key not in seen:
                seen.add(key)
                yield f"Sg_C3^{k}{s}", sub


def criterion_classification() -> tuple[bool, str]:
    passing = rejected = 0
    for name, A in classification_corpus():
        if len(A) > 27:
            continue
        ok, _ = is_crdsa(A)
        if not ok:
            rejected += 1
            continue
        passing += 1
        n = round(math.log(len(A), 3)) if len(A) > 1 else 0
        if 3 ** n != len(A):
            return False, f"{name}: |carrier| = {len(A)} is not a power of 3"
        if len(center(A)) != 2 ** n:
            return False, f"{name}: |center| = {len(center(A))}, expected {2 ** n}"
        if len(atoms(A)) != n:
            return False, f"{name}: {len(atoms(A))} atoms, expected {n}"
        model = build_c3_power(n)
        if not crdsa_isomorphic_by_center(A, model):
            return False, f"{name}: center test says not ≅ C3^{n}"
        if is_isomorphic_bruteforce(A, model) is None:
            return False, f"{name}: no isomorphism to C3^{n} found"
    return True, f"{passing} CRDSAs classified, {rejected} non-CRDSAs skipped"


def criterion_completeness(trials: int = 1000, seed: int = 0) -> tuple[bool, str]:
    J = ("a", "b", "c")
    elems = enumerate_tp(J)
    rng = random.Random(seed)
    for t in range(trials):
        Z = rng.sample(elems, rng.randint(1, len(elems)))
        if tp_join_all(Z) != reduce(tp_join, Z) or tp_meet_all(Z) != reduce(tp_meet, Z):
            return False, f"trial {t}: family of {len(Z)} disagrees with fold"
    return True, f"{trials} random families over |J| = 3"


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return (f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.title}: "
                f"{self.detail} ({self.seconds:.2f}s)")


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "worked-example table reproduction", criterion_table),
    (2, "CRDSA iff every block has >= 2 elements", criterion_theorem_crdsa),
    (3, "axiom suite", criterion_axioms),
    (4, "carrier count", criterion_carrier_count),
    (5, "isomorphism chain", criterion_isomorphism_chain),
    (6, "center equals crisp sets", criterion_center),
    (7, "doubling round-trip", criterion_doubling),
    (8, "finite CRDSA classification", criterion_classification),
    (9, "completeness at finite scale", criterion_completeness),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            passed, detail = fn()
            return CriterionResult(num, title, passed, detail, time.perf_counter() - start)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_criterion(num) for num, _, _ in CRITERIA]
