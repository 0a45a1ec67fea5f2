# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled law-checking kernels.

Same contract as ``_pykernels``: tables are int64 arrays indexed by carrier
position, each function returns None or the lexicographically first
counterexample.
"""
import numpy as np

ctypedef long long idx_t


def lattice_violation(const idx_t[:, ::1] meet, const idx_t[:, ::1] join, idx_t zero, idx_t one):
    cdef Py_ssize_t n = meet.shape[0]
    cdef Py_ssize_t x, y, z

    for x in range(n):
        if meet[x, x] != x:
            return "meet_idempotent", (x,)
    for x in range(n):
        if join[x, x] != x:
            return "join_idempotent", (x,)
    for x in range(n):
        for y in range(n):
            if meet[x, y] != meet[y, x]:
                return "meet_commutative", (x, y)
    for x in range(n):
        for y in range(n):
            if join[x, y] != join[y, x]:
                return "join_commutative", (x, y)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[meet[x, y], z] != meet[x, meet[y, z]]:
                    return "meet_associative", (x, y, z)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if join[join[x, y], z] != join[x, join[y, z]]:
                    return "join_associative", (x, y, z)
    for x in range(n):
        for y in range(n):
            if meet[x, join[x, y]] != x:
                return "absorb_meet_join", (x, y)
    for x in range(n):
        for y in range(n):
            if join[x, meet[x, y]] != x:
                return "absorb_join_meet", (x, y)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]:
                    return "meet_distributes", (x, y, z)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if join[x, meet[y, z]] != meet[join[x, y], join[x, z]]:
                    return "join_distributes", (x, y, z)
    for x in range(n):
        if join[x, zero] != x:
            return "zero_bound", (x,)
    for x in range(n):
        if meet[x, one] != x:
            return "one_bound", (x,)
    return None


def pseudocomplement_violation(const idx_t[:, ::1] meet, const idx_t[::1] star, idx_t zero):
    cdef Py_ssize_t n = meet.shape[0]
    cdef Py_ssize_t x, y
    cdef bint below, disjoint
    for x in range(n):
        for y in range(n):
            below = meet[y, star[x]] == y
            disjoint = meet[y, x] == zero
            if below != disjoint:
                return (x, y)
    return None


def dual_pseudocomplement_violation(const idx_t[:, ::1] meet, const idx_t[:, ::1] join,
                                    const idx_t[::1] plus, idx_t one):
    cdef Py_ssize_t n = meet.shape[0]
    cdef Py_ssize_t x, y
    cdef bint above, cover
    for x in range(n):
        for y in range(n):
            above = meet[plus[x], y] == plus[x]
            cover = join[y, x] == one
            if above != cover:
                return (x, y)
    return None


def stone_violation(const idx_t[:, ::1] meet, const idx_t[:, ::1] join,
                    const idx_t[::1] star, const idx_t[::1] plus, idx_t zero, idx_t one):
    cdef Py_ssize_t n = meet.shape[0]
    cdef Py_ssize_t x
    for x in range(n):
        if join[star[x], star[star[x]]] != one:
            return "star_stone", (x,)
    for x in range(n):
        if meet[plus[x], plus[plus[x]]] != zero:
            return "plus_stone", (x,)
    return None


def dsa_equation_violation(const idx_t[:, ::1] meet, const idx_t[:, ::1] join,
                           const idx_t[::1] star, const idx_t[::1] plus, idx_t zero, idx_t one):
    cdef Py_ssize_t n = meet.shape[0]
    cdef Py_ssize_t x, y
    for x in range(n):
        for y in range(n):
            if meet[x, star[meet[x, y]]] != meet[x, star[y]]:
                return "star_meet_law", (x, y)
    for x in range(n):
        for y in range(n):
            if join[x, plus[join[x, y]]] != join[x, plus[y]]:
                return "plus_join_law", (x, y)
    for x in range(n):
        if meet[x, star[zero]] != x:
            return "star_zero_unit", (x,)
    for x in range(n):
        if join[x, plus[one]] != x:
            return "plus_one_unit", (x,)
    if star[star[zero]] != zero:
        return "star_zero_fixed", ()
    if plus[plus[one]] != one:
        return "plus_one_fixed", ()
    return None


def regularity_violation(const idx_t[:, ::1] meet, const idx_t[:, ::1] join,
                         const idx_t[::1] star, const idx_t[::1] plus):
    cdef Py_ssize_t n = meet.shape[0]
    cdef Py_ssize_t x, y
    cdef idx_t lo
    for x in range(n):
        lo = meet[x, plus[x]]
        for y in range(n):
            if meet[lo, join[y, star[y]]] != lo:
                return (x, y)
    return None


def determination_violation(const idx_t[::1] star, const idx_t[::1] plus):
    cdef Py_ssize_t n = star.shape[0]
    cdef Py_ssize_t x, y
    for x in range(n):
        for y in range(x + 1, n):
            if star[x] == star[y] and plus[x] == plus[y]:
                return (x, y)
    return None


def homomorphism_violation(const idx_t[:, ::1] smeet, const idx_t[:, ::1] sjoin,
                           const idx_t[::1] sstar, const idx_t[::1] splus,
                           const idx_t[:, ::1] tmeet, const idx_t[:, ::1] tjoin,
                           const idx_t[::1] tstar, const idx_t[::1] tplus,
                           const idx_t[::1] f):
    cdef Py_ssize_t n = smeet.shape[0]
    cdef Py_ssize_t x, y
    for x in range(n):
        for y in range(n):
            if f[smeet[x, y]] != tmeet[f[x], f[y]]:
                return "meet", (x, y)
    for x in range(n):
        for y in range(n):
            if f[sjoin[x, y]] != tjoin[f[x], f[y]]:
                return "join", (x, y)
    for x in range(n):
        if f[sstar[x]] != tstar[f[x]]:
            return "star", (x,)
    for x in range(n):
        if f[splus[x]] != tplus[f[x]]:
            return "plus", (x,)
    return None
