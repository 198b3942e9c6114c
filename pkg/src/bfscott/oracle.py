"""Exhaustive back-and-forth solver on explicit finite colored orders.

A finite order is a tuple of colors; position ``i`` carries ``colors[i]``.
Pebbled tuples are kept as bitmasks over positions and always read in
ascending order.  Nothing here knows about interval decompositions or block
expressions; it is the ground truth the symbolic engine is checked against.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from .certificate import Certificate, Move

FiniteOrder = Tuple[int, ...]


@dataclass(frozen=True)
class PebbledPair:
    left: FiniteOrder
    left_tuple: Tuple[int, ...]
    right: FiniteOrder
    right_tuple: Tuple[int, ...]

    def __init__(self, left, right, left_tuple=(), right_tuple=()):
        object.__setattr__(self, "left", tuple(left))
        object.__setattr__(self, "right", tuple(right))
        object.__setattr__(self, "left_tuple", tuple(left_tuple))
        object.__setattr__(self, "right_tuple", tuple(right_tuple))
        for order, t in ((self.left, self.left_tuple), (self.right, self.right_tuple)):
            if list(t) != sorted(set(t)) or any(not 0 <= i < len(order) for i in t):
                raise ValueError(f"bad pebble tuple {t} for order of size {len(order)}")
        if len(self.left_tuple) != len(self.right_tuple):
            raise ValueError("pebble tuples differ in length")


def _mask(t) -> int:
    m = 0
    for i in t:
        m |= 1 << i
    return m


def _positions(mask: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, by size then position."""
    bits = _positions(mask)
    for k in range(len(bits) + 1):
        for combo in itertools.combinations(bits, k):
            yield _mask(combo)


@lru_cache(maxsize=None)
def _signature(order: FiniteOrder, old: int, new: int) -> tuple:
    """Colors of the pebbles in ``old|new`` in ascending order, each marked
    with whether it was already pebbled.  Two extensions are compatible iff
    their signatures agree."""
    both = old | new
    return tuple((order[i], bool(old >> i & 1)) for i in _positions(both))


@lru_cache(maxsize=None)
def _colors(order: FiniteOrder, mask: int) -> tuple:
    return tuple(order[i] for i in _positions(mask))


@lru_cache(maxsize=None)
def _fresh_by_size(order: FiniteOrder, mask: int):
    full = (1 << len(order)) - 1
    groups = {}
    for d in _submasks(full & ~mask):
        groups.setdefault(bin(d).count("1"), []).append(d)
    return groups


@lru_cache(maxsize=None)
def _leq(left: FiniteOrder, lmask: int, right: FiniteOrder, rmask: int, n: int) -> bool:
    if _colors(left, lmask) != _colors(right, rmask):
        return False
    if n == 0:
        return True
    lgroups = _fresh_by_size(left, lmask)
    for size, ds in _fresh_by_size(right, rmask).items():
        cs = lgroups.get(size, ())
        for d in ds:
            sig = _signature(right, rmask, d)
            if not any(_signature(left, lmask, c) == sig
                       and _leq(right, rmask | d, left, lmask | c, n - 1)
                       for c in cs):
                return False
    return True


def bf_leq(p: PebbledPair, n: int) -> bool:
    """Decide ``(left, left_tuple) <=_n (right, right_tuple)`` exhaustively.

    The forall-player picks any set of fresh elements of ``right`` (including
    the empty set), the exists-player answers with a set of fresh elements of
    ``left`` of the same size, and the game continues with sides swapped.
    """
    return _leq(p.left, _mask(p.left_tuple), p.right, _mask(p.right_tuple), n)


def bf_equiv(p: PebbledPair, n: int) -> bool:
    back = PebbledPair(p.right, p.left, p.right_tuple, p.left_tuple)
    return bf_leq(p, n) and bf_leq(back, n)


def bf_extract_certificate(p: PebbledPair, n: int) -> Certificate:
    return _certificate(p.left, _mask(p.left_tuple), p.right, _mask(p.right_tuple), n)


def _certificate(left, lmask, right, rmask, n) -> Certificate:
    holds = _leq(left, lmask, right, rmask, n)
    node = Certificate(holds, n, (left, _positions(lmask)), (right, _positions(rmask)))
    if n == 0 or _colors(left, lmask) != _colors(right, rmask):
        return node
    lgroups = _fresh_by_size(left, lmask)
    for size, ds in _fresh_by_size(right, rmask).items():
        cs = lgroups.get(size, ())
        for d in ds:
            sig = _signature(right, rmask, d)
            good = [c for c in cs if _signature(left, lmask, c) == sig
                    and _leq(right, rmask | d, left, lmask | c, n - 1)]
            if holds:
                c = good[0]
                child = _certificate(right, rmask | d, left, lmask | c, n - 1)
                node.moves.append(Move(_positions(d), [(_positions(c), child)]))
            elif not good:
                responses = [(_positions(c), _certificate(right, rmask | d, left, lmask | c, n - 1))
                             for c in cs]
                node.moves.append(Move(_positions(d), responses))
                return node
    return node


def replay_finite(cert: Certificate) -> bool:
    """Check every node of an oracle certificate against :func:`_leq`."""
    for node in cert.nodes():
        (left, lt), (right, rt) = node.left, node.right
        if _leq(left, _mask(lt), right, _mask(rt), node.rank) != node.holds:
            return False
        for m in node.moves:
            for _, child in m.responses:
                if node.holds != child.holds:
                    return False
    return True


# --------------------------------------------------------------------------
# maximal forall-moves
#
# Restricting a winning response to a smaller forall-move still wins, since
# forgetting matched pebble pairs on both sides preserves <=_m.  So the
# forall-player loses nothing by always taking every fresh element, and the
# exists-player's answers can be searched gap by gap.  This makes long words
# (truncated omega words) tractable.  It is checked against bf_leq on every
# small instance by the test suite.

def _gaps(order: FiniteOrder, mask: int):
    """Fresh positions between consecutive pebbles (len(pebbles)+1 gaps)."""
    out, cur = [], []
    for i in range(len(order)):
        if mask >> i & 1:
            out.append(tuple(cur))
            cur = []
        else:
            cur.append(i)
    out.append(tuple(cur))
    return out


def _embeddings(order: FiniteOrder, slots: Tuple[int, ...], word: Tuple[int, ...]):
    """Ways to pick positions from ``slots`` (ascending) spelling ``word``."""
    if not word:
        yield ()
        return
    # positions that can still host word[k:] must leave room for the rest
    for idx, pos in enumerate(slots):
        if len(slots) - idx < len(word):
            return
        if order[pos] == word[0]:
            for rest in _embeddings(order, slots[idx + 1:], word[1:]):
                yield (pos,) + rest


def _is_subsequence(word, text) -> bool:
    it = iter(text)
    return all(any(c == x for x in it) for c in word)


@lru_cache(maxsize=None)
def _leq_max(left: FiniteOrder, lmask: int, right: FiniteOrder, rmask: int, n: int) -> bool:
    if _colors(left, lmask) != _colors(right, rmask):
        return False
    if n == 0:
        return True
    rgaps = [tuple(right[i] for i in g) for g in _gaps(right, rmask)]
    lgaps = _gaps(left, lmask)
    if any(not _is_subsequence(w, [left[i] for i in g]) for w, g in zip(rgaps, lgaps)):
        return False
    d = ((1 << len(right)) - 1) & ~rmask
    for picks in itertools.product(*(_embeddings(left, g, w) for g, w in zip(lgaps, rgaps))):
        c = _mask(itertools.chain.from_iterable(picks))
        if _leq_max(right, rmask | d, left, lmask | c, n - 1):
            return True
    return False


def bf_leq_maximal(p: PebbledPair, n: int) -> bool:
    """Same relation as :func:`bf_leq`, playing only maximal forall-moves."""
    return _leq_max(p.left, _mask(p.left_tuple), p.right, _mask(p.right_tuple), n)


def enumerate_orders(max_size: int, max_colors: int) -> Iterator[FiniteOrder]:
    """Every color sequence of length <= max_size over colors < max_colors,
    in length-lexicographic order."""
    for k in range(max_size + 1):
        yield from itertools.product(range(max_colors), repeat=k)


def color_subsequences(order: Sequence[int]) -> set:
    return {tuple(order[i] for i in idx)
            for k in range(len(order) + 1)
            for idx in itertools.combinations(range(len(order)), k)}
