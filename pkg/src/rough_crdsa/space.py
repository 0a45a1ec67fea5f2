"""Finite approximation spaces and their rough set algebras.

A space is an ordered universe plus a partition into blocks.  Subsets are
handled internally as bit masks over the universe order (bit i = universe[i])
and exposed as frozensets of element names.

Block ordinals 0..k-1 follow the order in which blocks were given; inside a
block, elements keep universe order.  The representative of a block is its
first element and the core witness picks its second.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .algebra import FiniteAlgebra, TooLargeError, center

DEFAULT_PRSA_BOUND = 3 ** 6

# block statuses, ordered for the canonical carrier order
OUTSIDE, BOUNDARY, INSIDE = 0, 1, 2


class SpaceError(ValueError):
    """Invalid universe/blocks."""


class SpaceParseError(SpaceError):
    """A space description could not be parsed; carries a 1-based position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ApproximationSpace:
    universe: tuple
    blocks: tuple
    class_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        universe = tuple(self.universe)
        if not universe:
            raise SpaceError("universe is empty")
        pos = {}
        for u in universe:
            if u in pos:
                raise SpaceError(f"duplicate element {u!r} in universe")
            pos[u] = len(pos)
        owner = {}
        blocks = []
        for k, block in enumerate(self.blocks):
            block = tuple(block)
            if not block:
                raise SpaceError(f"block {k} is empty")
            for u in block:
                if u not in pos:
                    raise SpaceError(f"block {k} mentions {u!r}, which is not in the universe")
                if u in owner:
                    if owner[u] == k:
                        raise SpaceError(f"element {u!r} repeated in block {k}")
                    raise SpaceError(f"element {u!r} is in blocks {owner[u]} and {k}")
                owner[u] = k
            blocks.append(tuple(sorted(block, key=pos.__getitem__)))
        missing = [u for u in universe if u not in owner]
        if missing:
            raise SpaceError(f"element {missing[0]!r} is not covered by any block")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "class_index", owner)
        object.__setattr__(self, "_pos", pos)
        object.__setattr__(self, "_block_masks",
                           tuple(sum(1 << pos[u] for u in b) for b in blocks))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[Hashable]],
                    universe: Sequence[Hashable] | None = None) -> "ApproximationSpace":
        blocks = [tuple(b) for b in blocks]
        if universe is None:
            universe = [u for b in blocks for u in b]
        return cls(tuple(universe), tuple(blocks))

    @property
    def block_masks(self) -> tuple:
        return self._block_masks

    @property
    def full_mask(self) -> int:
        return (1 << len(self.universe)) - 1

    def block_sizes(self) -> tuple:
        return tuple(len(b) for b in self.blocks)

    def representative(self, e: int):
        return self.blocks[e][0]

    def mask(self, X: Iterable) -> int:
        m = 0
        for u in X:
            try:
                m |= 1 << self._pos[u]
            except KeyError:
                raise SpaceError(f"{u!r} is not in the universe") from None
        return m

    def members(self, m: int) -> frozenset:
        return frozenset(u for i, u in enumerate(self.universe) if m >> i & 1)

    def ordered(self, X: Iterable) -> list:
        """Elements of X in universe order."""
        return sorted(X, key=self._pos.__getitem__)

    def approx_masks(self, m: int) -> tuple[int, int]:
        """(lower, upper) approximation of a subset given as a mask."""
        lo = up = 0
        for b in self._block_masks:
            hit = b & m
            if hit:
                up |= b
                if hit == b:
                    lo |= b
        return lo, up

    def statuses(self, pair: "RoughPair") -> tuple:
        """Per-block status vector of a rough pair (OUTSIDE / BOUNDARY / INSIDE)."""
        lo, up = self.mask(pair.lower), self.mask(pair.upper)
        out = []
        for b in self._block_masks:
            if b & lo == b:
                out.append(INSIDE)
            elif b & up:
                out.append(BOUNDARY)
            else:
                out.append(OUTSIDE)
        return tuple(out)


@dataclass(frozen=True)
class RoughPair:
    lower: frozenset
    upper: frozenset

    def __post_init__(self):
        object.__setattr__(self, "lower", frozenset(self.lower))
        object.__setattr__(self, "upper", frozenset(self.upper))

    def boundary(self) -> frozenset:
        return self.upper - self.lower


def _directive(line: str):
    head, sep, rest = line.partition(":")
    if sep:
        return head.strip(), rest, len(head) + 1
    head, _, rest = line.strip().partition(" ")
    return head, rest, len(head) + 1


def parse_space(text: str) -> ApproximationSpace:
    """Parse a space description.

    One ``universe:`` line and one ``block:`` line per equivalence class;
    ``#`` starts a comment.  The colon may be omitted (``universe w x y z``).
    """
    universe = None
    universe_line = 0
    blocks = []
    block_lines = []
    seen_in = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        key, rest, offset = _directive(line.lstrip())
        tokens = []
        col = indent + offset + 1
        for m in _tokens(rest):
            tokens.append((m[0], col + m[1]))
        if key == "universe":
            if universe is not None:
                raise SpaceParseError(f"second universe line (first on line {universe_line})",
                                      lineno, indent + 1)
            if not tokens:
                raise SpaceParseError("empty universe", lineno, indent + 1)
            universe, universe_line = [], lineno
            for name, c in tokens:
                if name in universe:
                    raise SpaceParseError(f"duplicate element {name!r}", lineno, c)
                universe.append(name)
        elif key == "block":
            if not tokens:
                raise SpaceParseError("empty block", lineno, indent + 1)
            names = []
            for name, c in tokens:
                if name in seen_in:
                    where = seen_in[name]
                    msg = (f"element {name!r} repeated in this block" if where == lineno
                           else f"element {name!r} already in the block on line {where}")
                    raise SpaceParseError(msg, lineno, c)
                seen_in[name] = lineno
                names.append((name, c))
            blocks.append(names)
            block_lines.append(lineno)
        else:
            raise SpaceParseError(f"unknown directive {key!r} (expected 'universe' or 'block')",
                                  lineno, indent + 1)
    if universe is None:
        if not blocks:
            raise SpaceParseError("empty universe: no universe line and no blocks", 1)
        raise SpaceParseError("missing universe line", block_lines[0])
    known = set(universe)
    for names, lineno in zip(blocks, block_lines):
        for name, c in names:
            if name not in known:
                raise SpaceParseError(f"element {name!r} is not in the universe", lineno, c)
    uncovered = [u for u in universe if u not in seen_in]
    if uncovered:
        raise SpaceParseError(f"element {uncovered[0]!r} is not covered by any block",
                              universe_line)
    return ApproximationSpace(tuple(universe), tuple(tuple(n for n, _ in b) for b in blocks))


def _tokens(s: str):
    """(token, 0-based column) pairs for whitespace-separated tokens."""
    i = 0
    n = len(s)
    while i < n:
        while i < n and s[i].isspace():
            i += 1
        j = i
        while j < n and not s[j].isspace():
            j += 1
        if j > i:
            yield s[i:j], i
        i = j


def format_space(S: ApproximationSpace) -> str:
    lines = ["universe: " + " ".join(map(str, S.universe))]
    lines += ["block: " + " ".join(map(str, b)) for b in S.blocks]
    return "\n".join(lines) + "\n"


def lower_approx(S: ApproximationSpace, X: Iterable) -> frozenset:
    return S.members(S.approx_masks(S.mask(X))[0])


def upper_approx(S: ApproximationSpace, X: Iterable) -> frozenset:
    return S.members(S.approx_masks(S.mask(X))[1])


def boundary(S: ApproximationSpace, X: Iterable) -> frozenset:
    lo, up = S.approx_masks(S.mask(X))
    return S.members(up & ~lo)


def rough_pair(S: ApproximationSpace, X: Iterable) -> RoughPair:
    lo, up = S.approx_masks(S.mask(X))
    return RoughPair(S.members(lo), S.members(up))


def is_rough_pair(S: ApproximationSpace, p: RoughPair) -> bool:
    """Whether p is realized by some subset: θ-closed, nested, no singleton in the boundary."""
    try:
        lo, up = S.mask(p.lower), S.mask(p.upper)
    except SpaceError:
        return False
    if lo & ~up:
        return False
    for b in S.block_masks:
        for part in (lo, up):
            if part & b and part & b != b:
                return False
        if (up & ~lo) & b and b & (b - 1) == 0:
            return False
    return True


def _pair_from_statuses(S: ApproximationSpace, statuses) -> tuple[int, int]:
    lo = up = 0
    for b, st in zip(S.block_masks, statuses):
        if st == INSIDE:
            lo |= b
            up |= b
        elif st == BOUNDARY:
            up |= b
    return lo, up


def _carrier_masks(S: ApproximationSpace) -> list[tuple[int, int]]:
    choices = [(OUTSIDE, INSIDE) if len(b) == 1 else (OUTSIDE, BOUNDARY, INSIDE)
               for b in S.blocks]
    return [_pair_from_statuses(S, st) for st in itertools.product(*choices)]


def carrier_size(S: ApproximationSpace) -> int:
    size = 1
    for b in S.blocks:
        size *= 2 if len(b) == 1 else 3
    return size


def enumerate_carrier(S: ApproximationSpace) -> list[RoughPair]:
    """All rough pairs of S, ordered lexicographically by block status vector."""
    return [RoughPair(S.members(lo), S.members(up)) for lo, up in _carrier_masks(S)]


def build_prsa(S: ApproximationSpace, max_size: int = DEFAULT_PRSA_BOUND) -> FiniteAlgebra:
    """The principal rough set algebra R_θ as an explicit table algebra.

    Join/meet are componentwise union/intersection, ``p* = (up^c, up^c)`` and
    ``p⁺ = (lo^c, lo^c)``.  The core constant ``(∅, U)`` is attached iff every
    block has at least two elements.
    """
    size = carrier_size(S)
    if size > max_size:
        raise TooLargeError(f"R_θ has {size} elements, bound is {max_size}")
    masks = _carrier_masks(S)
    pos = {m: i for i, m in enumerate(masks)}
    full = S.full_mask
    meet_t = [[pos[(a[0] & b[0], a[1] & b[1])] for b in masks] for a in masks]
    join_t = [[pos[(a[0] | b[0], a[1] | b[1])] for b in masks] for a in masks]
    star_t = [pos[(full & ~up, full & ~up)] for _, up in masks]
    plus_t = [pos[(full & ~lo, full & ~lo)] for lo, _ in masks]
    carrier = [RoughPair(S.members(lo), S.members(up)) for lo, up in masks]
    U = frozenset(S.universe)
    h = RoughPair(frozenset(), U) if is_crdsa_space(S) else None
    return FiniteAlgebra(carrier, meet_t, join_t, star_t, plus_t,
                         RoughPair(frozenset(), frozenset()), RoughPair(U, U), h, name="R_θ")


def is_crdsa_space(S: ApproximationSpace) -> bool:
    return all(len(b) >= 2 for b in S.blocks)


def core_witness(S: ApproximationSpace) -> frozenset | None:
    """A subset whose rough pair is (∅, U): the second element of every block."""
    if not is_crdsa_space(S):
        return None
    return frozenset(b[1] for b in S.blocks)


def crisp_sets(S: ApproximationSpace) -> list[RoughPair]:
    """(A, A) for every union of blocks A, in canonical carrier order."""
    out = []
    for inside in itertools.product((False, True), repeat=len(S.blocks)):
        A = frozenset(u for b, keep in zip(S.blocks, inside) if keep for u in b)
        out.append(RoughPair(A, A))
    return out


def center_of_prsa(S: ApproximationSpace, algebra: FiniteAlgebra | None = None) -> tuple:
    """Center of R_θ computed from its operations: pairs with p* = p⁺."""
    return center(algebra if algebra is not None else build_prsa(S))


def build_doubling_space(J: Sequence[Hashable]) -> ApproximationSpace:
    """U = J × {0, 1} with one two-element block {(j, 0), (j, 1)} per j."""
    J = tuple(J)
    if len(set(J)) != len(J):
        raise SpaceError("index set has repeated elements")
    return ApproximationSpace(tuple((j, b) for j in J for b in (0, 1)),
                              tuple(((j, 0), (j, 1)) for j in J))
