"""Symbolic back-and-forth relations between block expressions.

``leq(I, K, n)`` decides ``I <=_n K``.  With pebbles the question reduces to
the intervals between consecutive pebbles (pebble colors must agree and every
left interval must be ``<=_n`` the corresponding right interval).  For a pair
of unpebbled intervals:

* rank 0 is always true;
* rank 1 holds iff every ascending color sequence of ``K`` occurs in ``I``;
* rank ``m+1``: the forall-player picks a tuple in ``K``, the exists-player a
  tuple in ``I`` with the same colors, and every ``K``-interval must be
  ``<=_m`` the matching ``I``-interval.

The last clause is decided as an inclusion between two automata over letters
``(K-interval, color)``.  The forall-automaton walks positions of ``K``; the
exists-automaton walks positions of ``I`` and may read a letter only when the
recursive ``<=_m`` check on the interval it skips succeeds.  Two facts keep
both automata finite:

* enlarging a forall tuple never helps the exists-player, so inside an omega
  word the forall-player only needs initial segments ``0..N-1``;
* inside an omega word the future from index ``i`` depends only on the class
  of ``i`` (prefix position or phase in the period), and exists-gaps can be
  shortened by whole periods without hurting (rank 0 and 1) or are pinned to
  a length bounded by the point count of the letter (rank >= 2).
"""
from __future__ import annotations

import itertools
import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .certificate import Certificate, Move
from .order import (
    EMPTY, CutDescriptor, OmegaWord, OrderExpr, Point, Shuffle, check_cut,
    empty_cut, intervals, normalize, selected_colors, sequences_included,
    single_cut,
)

START = ("^",)
END = ("$",)


class Inconclusive(Exception):
    """A configured bound was exceeded; the message names the bound."""


@dataclass(frozen=True)
class Bounds:
    """Enumeration bounds.

    ``block_cap(n, k)`` caps selections per shuffle block at ``block_factor *
    k * n`` for a block with ``k`` colors; ``horizon`` caps omega indices at
    ``|prefix| + |period| * horizon_base ** n``.  These govern explicit tuple
    enumeration (certificates, element classes, rank reports).  The decision
    procedure itself only uses ``max_configs``.
    """

    block_factor: int = 2
    horizon_base: int = 2
    max_move: int = 2
    max_configs: int = 200_000

    def block_cap(self, n: int, ncolors: int) -> int:
        return self.block_factor * ncolors * max(n, 1)

    def horizon(self, w: OmegaWord, n: int) -> int:
        return len(w.prefix) + len(w.period) * self.horizon_base ** n


DEFAULT_BOUNDS = Bounds()


# --------------------------------------------------------------------------
# positions and intervals

def _blk(pos) -> int:
    return -1 if pos is START else pos[1]


def _head(E: OrderExpr, q) -> list:
    """What remains of q's own block above q."""
    if q is START or q[0] == "p":
        return []
    b = E.blocks[q[1]]
    if q[0] == "s":
        return [b]
    return [b.suffix(q[2] + 1)]


def _tail(E: OrderExpr, r) -> list:
    """The part of r's own block below r."""
    b = E.blocks[r[1]]
    if r[0] == "p":
        return []
    if r[0] == "s":
        return [b]
    return [Point(c) for c in b.word(0, r[2])]


@lru_cache(maxsize=None)
def segment(E: OrderExpr, q, r) -> OrderExpr:
    """The open interval of ``E`` between positions ``q`` and ``r``."""
    if r is END:
        return normalize(OrderExpr(_head(E, q) + list(E.blocks[_blk(q) + 1:])))
    if q is not START and q[1] == r[1]:
        if q[0] == "s":
            return OrderExpr([E.blocks[q[1]]])
        return OrderExpr(Point(c) for c in E.blocks[q[1]].word(q[2] + 1, r[2]))
    return normalize(OrderExpr(_head(E, q) + list(E.blocks[_blk(q) + 1:r[1]]) + _tail(E, r)))


@lru_cache(maxsize=None)
def forall_moves(K: OrderExpr, q) -> tuple:
    """Letters ``(interval, color)`` the forall-player can emit from ``q``,
    with the successor position and a move record ``(block, color)``."""
    out = []
    if q is not START and q[0] == "s":
        b = K.blocks[q[1]]
        for c in b.sorted_colors:
            out.append((OrderExpr([b]), c, q, (q[1], c)))
    if q is not START and q[0] == "w":
        b = K.blocks[q[1]]
        nxt = q[2] + 1
        out.append((EMPTY, b.color_at(nxt), ("w", q[1], b.class_of(nxt)), (q[1], b.color_at(nxt))))
    for j in range(_blk(q) + 1, len(K.blocks)):
        b = K.blocks[j]
        if isinstance(b, Point):
            r = ("p", j)
            out.append((segment(K, q, r), b.color, r, (j, b.color)))
        elif isinstance(b, Shuffle):
            r = ("s", j)
            J = segment(K, q, r)
            for c in b.sorted_colors:
                out.append((J, c, r, (j, c)))
        else:
            r = ("w", j, 0)
            out.append((segment(K, q, r), b.color_at(0), r, (j, b.color_at(0))))
    out.sort(key=lambda t: t[3])
    return tuple(out)


def _gap_bound(w: OmegaWord, J: OrderExpr) -> int:
    return w.classes + J.point_count


def exists_candidates(I: OrderExpr, s, J: OrderExpr, c: int) -> Iterator[tuple]:
    """Positions the exists-player may move to from ``s`` on a ``c``-colored
    element, as ``(target, interval skipped)``.  Omega targets carry a raw
    index; reduce with ``class_of`` for the automaton state."""
    if s is not START and s[0] == "s":
        b = I.blocks[s[1]]
        if c in b.colors:
            yield s, OrderExpr([b])
    if s is not START and s[0] == "w":
        b = I.blocks[s[1]]
        a = s[2]
        for x in range(a + 1, a + 2 + _gap_bound(b, J)):
            if b.color_at(x) == c:
                r = ("w", s[1], x)
                yield r, segment(I, s, r)
    for j in range(_blk(s) + 1, len(I.blocks)):
        b = I.blocks[j]
        if isinstance(b, Point):
            if b.color == c:
                r = ("p", j)
                yield r, segment(I, s, r)
        elif isinstance(b, Shuffle):
            if c in b.colors:
                r = ("s", j)
                yield r, segment(I, s, r)
        else:
            for x in range(0, 1 + _gap_bound(b, J)):
                if b.color_at(x) == c:
                    r = ("w", j, x)
                    yield r, segment(I, s, r)


def _reduce(I: OrderExpr, r):
    if r[0] == "w":
        return ("w", r[1], I.blocks[r[1]].class_of(r[2]))
    return r


# --------------------------------------------------------------------------
# the engine

class Engine:
    """Memoizing decision procedure.  One instance may serve many queries."""

    def __init__(self, bounds: Bounds = DEFAULT_BOUNDS):
        self.bounds = bounds
        self._memo: Dict[tuple, bool] = {}
        self._steps: Dict[tuple, frozenset] = {}
        self._ivs: Dict[tuple, tuple] = {}
        self._lock = threading.Lock()
        self.stats = Counter()
        self._depth = 0

    # -- core relation ----------------------------------------------------

    def leq(self, left: OrderExpr, right: OrderExpr, n: int) -> bool:
        """Decide ``left <=_n right`` for unpebbled expressions."""
        return self._leq(normalize(left), normalize(right), n)

    def _leq(self, I: OrderExpr, K: OrderExpr, n: int) -> bool:
        if n == 0:
            return True
        key = (I, K, n)
        hit = self._memo.get(key)
        if hit is not None:
            self.stats["hits"] += 1
            return hit
        self.stats["misses"] += 1
        self._depth += 1
        self.stats["max_depth"] = max(self.stats["max_depth"], self._depth)
        try:
            if n == 1:
                result = sequences_included(K, I)
            elif I == K:
                result = True
            else:
                result = self._game(I, K, n - 1)[0]
        finally:
            self._depth -= 1
        with self._lock:
            return self._memo.setdefault(key, result)

    def _step(self, I, s, J, c, m) -> frozenset:
        key = (I, s, J, c, m)
        got = self._steps.get(key)
        if got is None:
            got = frozenset(_reduce(I, r) for r, seg in exists_candidates(I, s, J, c)
                            if self._leq(J, seg, m))
            self._steps[key] = got
        return got

    def _accepts_end(self, I, s, J, m) -> bool:
        return self._leq(J, segment(I, s, END), m)

    def _game(self, I: OrderExpr, K: OrderExpr, m: int):
        """Inclusion of the forall-language of K in the exists-language of I.

        Returns ``(verdict, path)`` where ``path`` is the list of forall move
        records leading to a configuration the exists-player cannot finish.
        """
        start = (START, frozenset((START,)))
        parent = {start: None}
        queue = [start]
        head = 0
        while head < len(queue):
            conf = queue[head]
            head += 1
            q, es = conf
            J_end = segment(K, q, END)
            if not any(self._accepts_end(I, s, J_end, m) for s in es):
                path = []
                while parent[conf] is not None:
                    conf, rec = parent[conf]
                    path.append(rec)
                return False, path[::-1]
            for J, c, q2, rec in forall_moves(K, q):
                es2 = frozenset().union(*(self._step(I, s, J, c, m) for s in es)) if es else frozenset()
                nxt = (q2, es2)
                if nxt not in parent:
                    parent[nxt] = (conf, rec)
                    queue.append(nxt)
                    if len(queue) > self.bounds.max_configs:
                        raise Inconclusive(f"inconclusive: bounds exceeded (max_configs={self.bounds.max_configs})")
        self.stats["configs"] += len(queue)
        return True, None

    # -- pebbled queries --------------------------------------------------

    def leq_tuples(self, L: OrderExpr, a: CutDescriptor, K: OrderExpr, b: CutDescriptor, n: int) -> bool:
        """Decide ``(L, a) <=_n (K, b)`` through the interval decomposition."""
        Li, lc = self._intervals(L, a)
        Ki, kc = self._intervals(K, b)
        if len(lc) != len(kc):
            raise ValueError("color-sequence length mismatch")
        if lc != kc:
            return False
        return all(self._leq(x, y, n) for x, y in zip(Li, Ki))

    def _intervals(self, e: OrderExpr, d: CutDescriptor):
        key = (e, d)
        got = self._ivs.get(key)
        if got is None:
            got = self._ivs[key] = intervals(e, d)
        return got

    def equiv(self, L: OrderExpr, K: OrderExpr, n: int) -> bool:
        return self.leq(L, K, n) and self.leq(K, L, n)

    def equiv_tuples(self, L, a, K, b, n) -> bool:
        return self.leq_tuples(L, a, K, b, n) and self.leq_tuples(K, b, L, a, n)

    # -- explicit cuts ----------------------------------------------------

    def single_specs(self, e: OrderExpr, n: int) -> List[Tuple[int, object]]:
        """Canonical single-element selections ``(block, color-or-index)``."""
        out = []
        for j, b in enumerate(e.blocks):
            if isinstance(b, Point):
                out.append((j, b.color))
            elif isinstance(b, Shuffle):
                out.extend((j, c) for c in b.sorted_colors)
            else:
                out.extend((j, i) for i in range(self.bounds.horizon(b, n)))
        return out

    def element_classes(self, e: OrderExpr, n: int) -> List[List[Tuple[int, object]]]:
        """Partition the canonical single-element selections into
        ``==_n``-classes.  Omega indices run up to the horizon ``H(n)``."""
        e = normalize(e)
        classes: List[List[Tuple[int, object]]] = []
        reps: List[CutDescriptor] = []
        for j, sel in self.single_specs(e, n):
            d = single_cut(e, j, sel)
            for k, r in enumerate(reps):
                if self.equiv_tuples(e, d, e, r, n):
                    classes[k].append((j, sel))
                    break
            else:
                reps.append(d)
                classes.append([(j, sel)])
        return classes

    def cuts(self, e: OrderExpr, size: int, n: int) -> Iterator[CutDescriptor]:
        """Canonical descriptors selecting exactly ``size`` elements, within
        the per-block cap ``B(n)`` and the omega horizon ``H(n)``."""
        per_block = []
        for b in e.blocks:
            opts = []
            if isinstance(b, Point):
                opts = [(False, 0), (True, 1)]
            elif isinstance(b, Shuffle):
                cap = min(size, self.bounds.block_cap(n, len(b.colors)))
                for k in range(cap + 1):
                    opts.extend((s, k) for s in itertools.product(b.sorted_colors, repeat=k))
            else:
                h = self.bounds.horizon(b, n)
                for k in range(size + 1):
                    opts.extend((s, k) for s in itertools.combinations(range(h), k))
            per_block.append(opts)

        def rec(j, left, acc):
            if j == len(per_block):
                if left == 0:
                    yield CutDescriptor(acc)
                return
            for spec, k in per_block[j]:
                if k <= left:
                    yield from rec(j + 1, left - k, acc + [spec])

        yield from rec(0, size, [])

    # -- exists responses and forall witnesses -----------------------------

    def respond(self, I: OrderExpr, K: OrderExpr, d: CutDescriptor, m: int) -> Optional[CutDescriptor]:
        """Least exists-response on ``I`` to the forall tuple ``d`` on ``K``
        such that every K-interval is ``<=_m`` the matching I-interval."""
        Ki, kc = intervals(K, d)
        letters = list(zip(Ki[:-1], kc))
        J_end = Ki[-1]
        dead = set()

        def dfs(k, s, raw):
            if k == len(letters):
                return [] if self._leq(J_end, segment(I, s, END), m) else None
            if (k, s) in dead:
                return None
            J, c = letters[k]
            for r, seg in exists_candidates(I, s, J, c):
                if not self._leq(J, seg, m):
                    continue
                rr = _reduce(I, r)
                if r[0] == "w":
                    actual = raw + (r[2] - s[2]) if (s is not START and s[0] == "w" and s[1] == r[1]) else r[2]
                else:
                    actual = None
                rest = dfs(k + 1, rr, actual)
                if rest is not None:
                    return [(r, actual, c)] + rest
            dead.add((k, s))
            return None

        path = dfs(0, START, None)
        if path is None:
            return None
        return _path_to_cut(I, path)

    def refute(self, I: OrderExpr, K: OrderExpr, n: int) -> Optional[CutDescriptor]:
        """A forall tuple on ``K`` that wins ``I <=_n K`` for the forall-player,
        or ``None`` if the relation holds."""
        if n == 0:
            return None
        ok, path = self._game(normalize(I), normalize(K), n - 1)
        if ok:
            return None
        specs = list(empty_cut(K).specs)
        for j, c in path:
            b = K.blocks[j]
            if isinstance(b, Point):
                specs[j] = True
            elif isinstance(b, Shuffle):
                specs[j] = specs[j] + (c,)
            else:
                specs[j] = specs[j] + (len(specs[j]),)
        return CutDescriptor(specs)

    def all_responses(self, I: OrderExpr, K: OrderExpr, d: CutDescriptor) -> List[CutDescriptor]:
        """Every color-matching exists-response to ``d`` the automaton would
        consider (omega gaps bounded as in the decision procedure)."""
        Ki, kc = intervals(K, d)
        out = []

        def rec(k, s, raw, acc):
            if k == len(kc):
                out.append(_path_to_cut(I, acc))
                return
            for r, _ in exists_candidates(I, s, Ki[k], kc[k]):
                if r[0] == "w":
                    actual = raw + (r[2] - s[2]) if (s is not START and s[0] == "w" and s[1] == r[1]) else r[2]
                else:
                    actual = None
                rec(k + 1, _reduce(I, r), actual, acc + [(r, actual, kc[k])])

        rec(0, START, None, [])
        return out

    # -- certificates -----------------------------------------------------

    def certificate(self, left: OrderExpr, right: OrderExpr, n: int,
                    left_cut: Optional[CutDescriptor] = None,
                    right_cut: Optional[CutDescriptor] = None) -> Certificate:
        """A strategy tree (holds) or refutation tree (fails).

        Holding nodes list forall-moves up to ``max_move`` elements inside
        the rank-1 enumeration window, each with the least winning response.
        Equal subqueries share one subtree.
        """
        left, right = normalize(left), normalize(right)
        if (left_cut is None) != (right_cut is None):
            raise ValueError("both cuts or neither")
        cache: Dict[tuple, Certificate] = {}
        if left_cut is not None:
            return self._pebbled_certificate(left, left_cut, right, right_cut, n, cache)
        return self._certificate(left, right, n, cache)

    def _pebbled_certificate(self, L, a, K, b, n, cache) -> Certificate:
        Li, lc = self._intervals(L, a)
        Ki, kc = self._intervals(K, b)
        holds = self.leq_tuples(L, a, K, b, n)
        node = Certificate(holds, n, (L, a), (K, b))
        if lc != kc:
            node.note = "pebble colors differ"
            return node
        node.children = [self._certificate(x, y, n, cache) for x, y in zip(Li, Ki)]
        return node

    def _certificate(self, I: OrderExpr, K: OrderExpr, n: int, cache) -> Certificate:
        key = (I, K, n)
        if key in cache:
            return cache[key]
        holds = self._leq(I, K, n)
        node = cache[key] = Certificate(holds, n, I, K)
        if n == 0:
            return node
        if holds:
            for size in range(self.bounds.max_move + 1):
                for d in self.cuts(K, size, 1):
                    c = self.respond(I, K, d, n - 1)
                    child = self._pebbled_certificate(K, d, I, c, n - 1, cache)
                    node.moves.append(Move(d, [(c, child)]))
            node.note = f"forall moves up to size {self.bounds.max_move}"
        else:
            d = self.refute(I, K, n)
            responses = []
            for c in self.all_responses(I, K, d):
                responses.append((c, self._pebbled_certificate(K, d, I, c, n - 1, cache)))
            node.moves.append(Move(d, responses))
        return node

    def replay(self, cert: Certificate) -> bool:
        """Re-decide every node of a certificate and check its structure."""
        for node in cert.unique_nodes():
            if isinstance(node.left, tuple):
                (L, a), (K, b) = node.left, node.right
                if self.leq_tuples(L, a, K, b, node.rank) != node.holds:
                    return False
                if node.children and node.holds != all(c.holds for c in node.children):
                    return False
                continue
            if self._leq(node.left, node.right, node.rank) != node.holds:
                return False
            for mv in node.moves:
                for c, child in mv.responses:
                    if child.holds != node.holds:
                        return False
                    if selected_colors(node.left, c) != selected_colors(node.right, mv.forall):
                        return False
        return True

    def stats_dict(self) -> dict:
        return {"hits": self.stats["hits"], "misses": self.stats["misses"],
                "max_depth": self.stats["max_depth"], "memo_size": len(self._memo)}


def _path_to_cut(I: OrderExpr, path) -> CutDescriptor:
    specs = list(empty_cut(I).specs)
    for r, actual, c in path:
        j = r[1]
        b = I.blocks[j]
        if isinstance(b, Point):
            specs[j] = True
        elif isinstance(b, Shuffle):
            specs[j] = specs[j] + (c,)
        else:
            specs[j] = specs[j] + (actual,)
    return CutDescriptor(specs)


default_engine = Engine()


def leq(left: OrderExpr, right: OrderExpr, n: int) -> bool:
    return default_engine.leq(left, right, n)


def equiv(left: OrderExpr, right: OrderExpr, n: int) -> bool:
    return default_engine.equiv(left, right, n)


def leq_tuples(L, a, K, b, n) -> bool:
    return default_engine.leq_tuples(normalize(L), a, normalize(K), b, n)
