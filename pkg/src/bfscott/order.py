"""Block term algebra for finitely colored linear orderings.

An ordering is a finite concatenation of three kinds of blocks:

* ``Point(c)``           a single element of color ``c``
* ``Shuffle(S)``         the dense ordering without endpoints in which every
                         color of ``S`` is dense (``eta_c`` is ``Shuffle({c})``)
* ``OmegaWord(p, q)``    order type omega colored by the eventually periodic
                         word ``p q q q ...``

Selections of elements ("cuts") are described up to block homogeneity: inside a
shuffle only the ascending color sequence of the selected elements matters,
inside an omega word the exact indices do.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Tuple, Union


@dataclass(frozen=True, order=True)
class Point:
    color: int

    def __post_init__(self):
        if self.color < 0:
            raise ValueError(f"negative color {self.color}")

    @property
    def colors(self) -> frozenset:
        return frozenset((self.color,))


@dataclass(frozen=True)
class Shuffle:
    colors: frozenset

    def __init__(self, colors: Iterable[int]):
        cs = frozenset(colors)
        if not cs:
            raise ValueError("Shuffle needs a nonempty color set")
        if min(cs) < 0:
            raise ValueError(f"negative color in {sorted(cs)}")
        object.__setattr__(self, "colors", cs)

    @property
    def sorted_colors(self) -> Tuple[int, ...]:
        return tuple(sorted(self.colors))

    def __repr__(self):
        return f"Shuffle({set(self.sorted_colors)})"


@dataclass(frozen=True)
class OmegaWord:
    """omega colored by ``prefix`` followed by ``period`` repeated forever.

    The constructor canonicalizes: the period is reduced to its primitive root
    and the prefix is made as short as possible by rotating the period.
    """

    prefix: Tuple[int, ...]
    period: Tuple[int, ...]

    def __init__(self, prefix: Sequence[int], period: Sequence[int]):
        prefix, period = tuple(prefix), tuple(period)
        if not period:
            raise ValueError("OmegaWord period must be nonempty")
        if any(c < 0 for c in prefix + period):
            raise ValueError("negative color in OmegaWord")
        n = len(period)
        for d in range(1, n + 1):
            if n % d == 0 and period[:d] * (n // d) == period:
                period = period[:d]
                break
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = period[-1:] + period[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)

    @property
    def colors(self) -> frozenset:
        return frozenset(self.prefix) | frozenset(self.period)

    @property
    def classes(self) -> int:
        """Number of distinct index classes (indices with identical futures)."""
        return len(self.prefix) + len(self.period)

    def color_at(self, i: int) -> int:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def word(self, start: int, stop: int) -> Tuple[int, ...]:
        return tuple(self.color_at(i) for i in range(start, stop))

    def class_of(self, i: int) -> int:
        p, q = len(self.prefix), len(self.period)
        if i < p + q:
            return i
        return p + (i - p) % q

    def suffix(self, i: int) -> "OmegaWord":
        """The omega word of positions ``i, i+1, ...``."""
        p = len(self.prefix)
        if i <= p:
            return OmegaWord(self.prefix[i:], self.period)
        r = (i - p) % len(self.period)
        return OmegaWord((), self.period[r:] + self.period[:r])


Block = Union[Point, Shuffle, OmegaWord]


def block_colors(b: Block) -> frozenset:
    return b.colors


@dataclass(frozen=True)
class OrderExpr:
    blocks: Tuple[Block, ...] = ()

    def __init__(self, blocks: Iterable[Block] = ()):
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "_hash", hash(self.blocks))

    def __hash__(self):
        return self._hash

    def __add__(self, other: "OrderExpr") -> "OrderExpr":
        return OrderExpr(self.blocks + other.blocks)

    def __mul__(self, n: int) -> "OrderExpr":
        if n < 1:
            raise ValueError("repetition count must be >= 1")
        return OrderExpr(self.blocks * n)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __str__(self):
        return render(self)

    @property
    def is_finite(self) -> bool:
        return all(isinstance(b, Point) for b in self.blocks)

    @property
    def point_count(self) -> int:
        return sum(isinstance(b, Point) for b in self.blocks)


EMPTY = OrderExpr()


def points(colors: Iterable[int]) -> OrderExpr:
    return OrderExpr(Point(c) for c in colors)


def eta(c: int) -> Shuffle:
    return Shuffle({c})


def render_block(b: Block) -> str:
    if isinstance(b, Point):
        return f"1_{b.color}"
    if isinstance(b, Shuffle):
        if len(b.colors) == 1:
            return f"eta_{b.sorted_colors[0]}"
        return "sh(" + ",".join(map(str, b.sorted_colors)) + ")"
    return ("omega[" + ",".join(map(str, b.prefix)) + ";"
            + ",".join(map(str, b.period)) + "]")


def render(e: OrderExpr) -> str:
    return " + ".join(render_block(b) for b in e.blocks)


def normalize(e: OrderExpr) -> OrderExpr:
    """Merge adjacent identical shuffles; everything else is left alone."""
    out = []
    for b in e.blocks:
        if isinstance(b, Shuffle) and out and out[-1] == b:
            continue
        out.append(b)
    return OrderExpr(out)


def absorb_points(e: OrderExpr) -> OrderExpr:
    """:func:`normalize`, then also ``Sh(S) + 1_c + Sh(S) -> Sh(S)`` for
    ``c`` in ``S`` (a shuffle is isomorphic to any of its proper splits).

    After this every automorphism respects blocks, which is what syntactic
    orbit comparison needs.
    """
    out = []
    for b in normalize(e).blocks:
        if (isinstance(b, Shuffle) and len(out) >= 2 and out[-2] == b
                and isinstance(out[-1], Point) and out[-1].color in b.colors):
            out.pop()
            continue
        if isinstance(b, Shuffle) and out and out[-1] == b:
            continue
        out.append(b)
    return OrderExpr(out)


def colors_used(e: OrderExpr) -> frozenset:
    cs = frozenset()
    for b in e.blocks:
        cs |= b.colors
    return cs


# --------------------------------------------------------------------------
# color sequences (the rank-1 theory)
#
# The set of ascending color sequences realized in an expression is downward
# closed and recognized by a greedy leftmost-embedding automaton whose state
# is a position in the expression: (block index, omega class or 0).

def _greedy_step(e: OrderExpr, state, c):
    """Leftmost embedding of one more element of color ``c`` after ``state``.

    ``state`` is ``(j, i)``: the next element must come from block ``j`` or
    later; inside an omega word block ``j`` it must have index >= ``i``.
    Inside a shuffle the state stays on the block since the block is dense.
    Returns ``None`` when no such element exists.
    """
    j, i = state
    blocks = e.blocks
    while j < len(blocks):
        b = blocks[j]
        if isinstance(b, Point):
            if b.color == c:
                return (j + 1, 0)
        elif isinstance(b, Shuffle):
            if c in b.colors:
                return (j, 0)
        else:
            for k in range(i, i + b.classes):
                if b.color_at(k) == c:
                    return (j, b.class_of(k + 1))
        j, i = j + 1, 0
    return None


def realizes_color_sequence(e: OrderExpr, seq: Sequence[int]) -> bool:
    state = (0, 0)
    for c in seq:
        state = _greedy_step(e, state, c)
        if state is None:
            return False
    return True


def sequences_included(small: OrderExpr, big: OrderExpr) -> bool:
    """True iff every color sequence realized in ``small`` is realized in ``big``."""
    alphabet = sorted(colors_used(small))
    start = ((0, 0), (0, 0))
    seen = {start}
    stack = [start]
    while stack:
        s, b = stack.pop()
        for c in alphabet:
            s2 = _greedy_step(small, s, c)
            if s2 is None:
                continue
            b2 = _greedy_step(big, b, c)
            if b2 is None:
                return False
            if (s2, b2) not in seen:
                seen.add((s2, b2))
                stack.append((s2, b2))
    return True


def shortest_unrealized(e: OrderExpr, alphabet: Iterable[int]):
    """Shortest (then lexicographically least) sequence over ``alphabet`` not
    realized in ``e``, or ``None`` if every sequence is realized."""
    alphabet = sorted(alphabet)
    start = (0, 0)
    seen = {start}
    frontier = [(start, ())]
    while frontier:
        nxt = []
        for state, word in frontier:
            for c in alphabet:
                s2 = _greedy_step(e, state, c)
                if s2 is None:
                    return word + (c,)
                if s2 not in seen:
                    seen.add(s2)
                    nxt.append((s2, word + (c,)))
        frontier = nxt
    return None


# --------------------------------------------------------------------------
# cuts

@dataclass(frozen=True)
class CutDescriptor:
    """One selection per block: ``bool`` for a point, an ascending color tuple
    for a shuffle, a sorted index tuple for an omega word."""

    specs: Tuple = ()

    def __init__(self, specs: Iterable = ()):
        object.__setattr__(self, "specs", tuple(
            s if isinstance(s, bool) else tuple(s) for s in specs))
        object.__setattr__(self, "_hash", hash(self.specs))

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.specs)

    @property
    def size(self) -> int:
        return sum(int(s) if isinstance(s, bool) else len(s) for s in self.specs)


def empty_cut(e: OrderExpr) -> CutDescriptor:
    return CutDescriptor(False if isinstance(b, Point) else () for b in e.blocks)


def single_cut(e: OrderExpr, j: int, sel) -> CutDescriptor:
    """Descriptor selecting one element of block ``j``: ``sel`` is ignored for
    a point, a color for a shuffle, an index for an omega word."""
    specs = list(empty_cut(e).specs)
    b = e.blocks[j]
    specs[j] = True if isinstance(b, Point) else (sel,)
    return CutDescriptor(specs)


class CutError(ValueError):
    pass


def check_cut(e: OrderExpr, d: CutDescriptor) -> None:
    if len(d.specs) != len(e.blocks):
        raise CutError("descriptor/expression mismatch")
    for b, s in zip(e.blocks, d.specs):
        if isinstance(b, Point):
            if not isinstance(s, bool):
                raise CutError("descriptor/expression mismatch")
        elif isinstance(s, bool):
            raise CutError("descriptor/expression mismatch")
        elif isinstance(b, Shuffle):
            if any(c not in b.colors for c in s):
                raise CutError("descriptor/expression mismatch")
        else:
            if any(i < 0 for i in s) or list(s) != sorted(set(s)):
                raise CutError("descriptor/expression mismatch")


def selected_colors(e: OrderExpr, d: CutDescriptor) -> Tuple[int, ...]:
    check_cut(e, d)
    out = []
    for b, s in zip(e.blocks, d.specs):
        if isinstance(b, Point):
            if s:
                out.append(b.color)
        elif isinstance(b, Shuffle):
            out.extend(s)
        else:
            out.extend(b.color_at(i) for i in s)
    return tuple(out)


def intervals(e: OrderExpr, d: CutDescriptor):
    """Interval decomposition: ``(I_0, ..., I_m), (c_1, ..., c_m)``."""
    check_cut(e, d)
    pieces = []
    cols = []
    cur = []
    for b, s in zip(e.blocks, d.specs):
        if isinstance(b, Point):
            if s:
                pieces.append(cur)
                cols.append(b.color)
                cur = []
            else:
                cur.append(b)
        elif isinstance(b, Shuffle):
            if not s:
                cur.append(b)
                continue
            cur.append(b)
            for c in s:
                pieces.append(cur)
                cols.append(c)
                cur = [b]
        else:
            prev = -1
            for i in s:
                cur.extend(Point(c) for c in b.word(prev + 1, i))
                pieces.append(cur)
                cols.append(b.color_at(i))
                cur = []
                prev = i
            cur.append(b.suffix(prev + 1))
    pieces.append(cur)
    return tuple(normalize(OrderExpr(p)) for p in pieces), tuple(cols)


def split(e: OrderExpr, d: CutDescriptor) -> tuple:
    """Alternating sequence ``(I_0, c_1, I_1, ..., c_m, I_m)``."""
    ivs, cols = intervals(e, d)
    out = [ivs[0]]
    for c, iv in zip(cols, ivs[1:]):
        out.extend((c, iv))
    return tuple(out)


def suffix_after_color(e: OrderExpr, c: int) -> OrderExpr:
    """Elements strictly above some element of color ``c``."""
    return _split_at_color(e, c)[1]


def prefix_through_color(e: OrderExpr, c: int) -> OrderExpr:
    """The complement of :func:`suffix_after_color`: elements not above any
    element of color ``c``."""
    return _split_at_color(e, c)[0]


def _split_at_color(e, c):
    for j, b in enumerate(e.blocks):
        if c not in b.colors:
            continue
        before = list(e.blocks[:j])
        after = list(e.blocks[j + 1:])
        if isinstance(b, Point):
            return normalize(OrderExpr(before + [b])), normalize(OrderExpr(after))
        if isinstance(b, Shuffle):
            # no least c-element: the whole block lies above some c-element
            return normalize(OrderExpr(before)), normalize(OrderExpr([b] + after))
        i = 0
        while b.color_at(i) != c:
            i += 1
        head = before + [Point(x) for x in b.word(0, i + 1)]
        return normalize(OrderExpr(head)), normalize(OrderExpr([b.suffix(i + 1)] + after))
    return e, EMPTY
