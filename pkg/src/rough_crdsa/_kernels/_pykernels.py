"""Numpy fallback for the exhaustive law-checking kernels.

Every function takes operation tables as integer arrays indexed by carrier
position and returns ``None`` when the law holds, otherwise the first
counterexample in lexicographic order of the substituted variables.  The
compiled module ``_ckernels`` implements the same functions with the same
return values; the two are cross-checked in the test suite.

Triple-variable laws are evaluated one ``x`` slice at a time so memory stays
quadratic in the carrier size.
"""
import numpy as np


def _first(mask):
    """Index tuple of the first True entry of ``mask`` in C order, or None."""
    flat = np.flatnonzero(mask)
    if flat.size == 0:
        return None
    return tuple(int(i) for i in np.unravel_index(flat[0], mask.shape))


def lattice_violation(meet, join, zero, one):
    n = meet.shape[0]
    idx = np.arange(n)

    w = _first(meet[idx, idx] != idx)
    if w is not None:
        return "meet_idempotent", w
    w = _first(join[idx, idx] != idx)
    if w is not None:
        return "join_idempotent", w
    w = _first(meet != meet.T)
    if w is not None:
        return "meet_commutative", w
    w = _first(join != join.T)
    if w is not None:
        return "join_commutative", w

    for code, op in (("meet_associative", meet), ("join_associative", join)):
        for x in range(n):
            # (x.y).z vs x.(y.z) over all (y, z)
            bad = op[op[x, :], :] != op[x, op]
            w = _first(bad)
            if w is not None:
                return code, (x,) + w

    w = _first(meet[idx[:, None], join] != idx[:, None])
    if w is not None:
        return "absorb_meet_join", w
    w = _first(join[idx[:, None], meet] != idx[:, None])
    if w is not None:
        return "absorb_join_meet", w

    for x in range(n):
        bad = meet[x, join] != join[meet[x, :][:, None], meet[x, :][None, :]]
        w = _first(bad)
        if w is not None:
            return "meet_distributes", (x,) + w
    for x in range(n):
        bad = join[x, meet] != meet[join[x, :][:, None], join[x, :][None, :]]
        w = _first(bad)
        if w is not None:
            return "join_distributes", (x,) + w

    w = _first(join[:, zero] != idx)
    if w is not None:
        return "zero_bound", w
    w = _first(meet[:, one] != idx)
    if w is not None:
        return "one_bound", w
    return None


def pseudocomplement_violation(meet, star, zero):
    # bad[x, y]: (y <= x*) xor (y ^ x == 0)
    n = meet.shape[0]
    y = np.arange(n)[None, :]
    below = meet[y, star[:, None]] == y
    disjoint = meet.T == zero
    return _first(below != disjoint)


def dual_pseudocomplement_violation(meet, join, plus, one):
    # bad[x, y]: (y >= x+) xor (y v x == 1)
    n = meet.shape[0]
    y = np.arange(n)[None, :]
    p = plus[:, None]
    above = meet[p, y] == p
    cover = join.T == one
    return _first(above != cover)


def stone_violation(meet, join, star, plus, zero, one):
    w = _first(join[star, star[star]] != one)
    if w is not None:
        return "star_stone", w
    w = _first(meet[plus, plus[plus]] != zero)
    if w is not None:
        return "plus_stone", w
    return None


def dsa_equation_violation(meet, join, star, plus, zero, one):
    n = meet.shape[0]
    idx = np.arange(n)[:, None]
    w = _first(meet[idx, star[meet]] != meet[idx, star[None, :]])
    if w is not None:
        return "star_meet_law", w
    w = _first(join[idx, plus[join]] != join[idx, plus[None, :]])
    if w is not None:
        return "plus_join_law", w
    w = _first(meet[:, star[zero]] != np.arange(n))
    if w is not None:
        return "star_zero_unit", w
    w = _first(join[:, plus[one]] != np.arange(n))
    if w is not None:
        return "plus_one_unit", w
    if star[star[zero]] != zero:
        return "star_zero_fixed", ()
    if plus[plus[one]] != one:
        return "plus_one_fixed", ()
    return None


def regularity_violation(meet, join, star, plus):
    # x ^ x+ <= y v y*
    n = meet.shape[0]
    idx = np.arange(n)
    lo = meet[idx, plus][:, None]
    hi = join[idx, star][None, :]
    return _first(meet[lo, hi] != lo)


def determination_violation(star, plus):
    same = (star[:, None] == star[None, :]) & (plus[:, None] == plus[None, :])
    return _first(np.triu(same, k=1))


def homomorphism_violation(smeet, sjoin, sstar, splus, tmeet, tjoin, tstar, tplus, f):
    fx = f[:, None]
    fy = f[None, :]
    w = _first(f[smeet] != tmeet[fx, fy])
    if w is not None:
        return "meet", w
    w = _first(f[sjoin] != tjoin[fx, fy])
    if w is not None:
        return "join", w
    w = _first(f[sstar] != tstar[f])
    if w is not None:
        return "star", w
    w = _first(f[splus] != tplus[f])
    if w is not None:
        return "plus", w
    return None
