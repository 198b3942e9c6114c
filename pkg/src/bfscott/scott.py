"""Scott ranks, Scott sentence complexities and 2-universal covers."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from . import formulas
from .engine import Engine, default_engine
from .order import (
    EMPTY, CutDescriptor, OrderExpr, Point, Shuffle, check_cut, colors_used,
    absorb_points, intervals, normalize, prefix_through_color, selected_colors,
    shortest_unrealized, single_cut, suffix_after_color,
)


@dataclass(frozen=True)
class ComplexityTag:
    shape: str  # "Sigma", "Pi" or "dSigma"
    level: int

    def __post_init__(self):
        if self.shape not in ("Sigma", "Pi", "dSigma"):
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.level < 1:
            raise ValueError("level must be >= 1")

    def __str__(self):
        name = "d-Sigma" if self.shape == "dSigma" else self.shape
        return f"{name} {self.level}"

    def included_in(self, other: "ComplexityTag") -> bool:
        """Inclusion of formula classes: Sigma_a and Pi_a lie below
        d-Sigma_a, which lies below Sigma_{a+1} and Pi_{a+1}."""
        if self == other:
            return True
        if self.shape == "dSigma":
            return other.level > self.level
        if other.shape == "dSigma":
            return other.level >= self.level
        return other.level > self.level


@dataclass
class RankReport:
    sr_lower: int
    sr_upper: Optional[int]
    srp_lower: int
    srp_upper: Optional[int]
    witness: Optional[Tuple[CutDescriptor, CutDescriptor]] = None
    witness_rank: Optional[int] = None
    parameter: Optional[CutDescriptor] = None
    n_max: int = 3
    tuple_len_max: int = 2
    param_len_max: int = 3

    @property
    def pinned(self) -> bool:
        return self.sr_lower == self.sr_upper and self.srp_lower == self.srp_upper

    def to_dict(self) -> dict:
        return {
            "sr": [self.sr_lower, self.sr_upper],
            "srp": [self.srp_lower, self.srp_upper],
            "witness": None if self.witness is None else [list(map(_spec_json, w.specs)) for w in self.witness],
            "witness_rank": self.witness_rank,
            "parameter": None if self.parameter is None else list(map(_spec_json, self.parameter.specs)),
            "bounds": {"n_max": self.n_max, "tuple_len_max": self.tuple_len_max,
                       "param_len_max": self.param_len_max},
        }


def _spec_json(s):
    return s if isinstance(s, bool) else list(s)


class InconsistentRanks(ValueError):
    pass


def orbit_equal(e: OrderExpr, a: CutDescriptor, b: CutDescriptor) -> bool:
    """Whether an automorphism of ``e`` carries selection ``a`` to ``b``.

    On a normalized expression automorphisms preserve blocks; inside a block
    shuffles are homogeneous over equal color sequences and omega words and
    points are rigid, so this is equality of descriptors.
    """
    if absorb_points(e) != e:
        raise ValueError("orbit_equal needs a normalized expression")
    check_cut(e, a)
    check_cut(e, b)
    return a == b


def complexity_from_invariants(sr: int, srp: int) -> ComplexityTag:
    if not (isinstance(sr, int) and isinstance(srp, int)) or srp < 1:
        raise InconsistentRanks("inconsistent rank pair")
    if sr == srp:
        return ComplexityTag("Pi", sr + 1)
    if sr == srp + 1:
        return ComplexityTag("dSigma", sr)
    if sr == srp + 2:
        return ComplexityTag("Sigma", sr)
    raise InconsistentRanks(f"inconsistent rank pair (sr={sr}, srp={srp})")


def _pin_ranks(d: CutDescriptor, pins: Tuple[int, ...]) -> Tuple[int, ...]:
    """Positions of the pinned points inside the merged tuple."""
    out = []
    for p in pins:
        k = 0
        for s in d.specs[:p]:
            k += int(s) if isinstance(s, bool) else len(s)
        out.append(k)
    return tuple(out)


def _rank_bounds(engine: Engine, e: OrderExpr, pins: Tuple[int, ...], n_max: int,
                 T: int, cap: Optional[int] = None):
    """``(lower, upper, witness, witness_rank)`` for the Scott rank of ``e``
    over the pinned point blocks ``pins``, looking at tuples of size <= T.

    The rank is the least n >= 1 such that ``a <=_n b`` forces ``a`` and
    ``b`` into the same orbit.  With ``cap`` the search stops once the rank
    is known to exceed ``cap``.
    """
    groups = {}
    for size in range(1, T + 1):
        for d in engine.cuts(e, size, n_max):
            if any(d.specs[p] for p in pins):
                continue
            if pins:
                specs = list(d.specs)
                for p in pins:
                    specs[p] = True
                d = CutDescriptor(specs)
            key = (selected_colors(e, d), _pin_ranks(d, pins))
            groups.setdefault(key, []).append(d)
    pairs = ((a, b) for g in groups.values() for a in g for b in g if a != b)
    first = next(pairs, None)
    if first is None:
        return 1, 1, None, None
    cands = itertools.chain([first], pairs)
    lower, witness, wrank = 1, first, 0
    limit = n_max if cap is None else min(n_max, cap)
    for n in range(1, limit + 1):
        survivors = (ab for ab in cands if engine.leq_tuples(e, ab[0], e, ab[1], n))
        if n == limit:
            # only existence of a surviving pair matters now
            w = next(survivors, None)
            if w is None:
                return lower, n, witness, wrank
            return n + 1, None, w, n
        cands = list(survivors)
        if not cands:
            return lower, n, witness, wrank
        lower, witness, wrank = n + 1, cands[0], n
    return lower, None, witness, wrank


def with_parameters(e: OrderExpr, d: CutDescriptor) -> Tuple[OrderExpr, Tuple[int, ...]]:
    """``e`` with the elements selected by ``d`` turned into pinned point
    blocks, and the indices of those blocks."""
    ivs, cols = intervals(e, d)
    blocks, pins = list(ivs[0].blocks), []
    for c, iv in zip(cols, ivs[1:]):
        pins.append(len(blocks))
        blocks.append(Point(c))
        blocks.extend(iv.blocks)
    return OrderExpr(blocks), tuple(pins)


def rank_report(e: OrderExpr, n_max: int = 3, tuple_len_max: int = 2,
                engine: Engine = None, param_len_max: int = 3) -> RankReport:
    """Bounds on the Scott rank and the parametrized Scott rank of ``e``.

    Parameters are canonical tuples of up to ``param_len_max`` elements,
    tried by size, drawn from the rank-1 enumeration window (omega words
    contribute indices below ``H(1)``).  A parameter is only examined as far as it could improve
    on the best one found so far.
    """
    if n_max < 1 or tuple_len_max < 1 or param_len_max < 0:
        raise ValueError("bounds must be positive")
    engine = engine or default_engine
    e = absorb_points(e)
    lo, up, wit, wrank = _rank_bounds(engine, e, (), n_max, tuple_len_max)
    report = RankReport(lo, up, lo, up, wit, wrank, None, n_max, tuple_len_max, param_len_max)
    for size in range(1, param_len_max + 1):
        if report.srp_upper == 1:
            break
        for d in engine.cuts(e, size, 1):
            if report.srp_upper == 1:
                break
            cap = None if report.srp_upper is None else report.srp_upper - 1
            e2, pins = with_parameters(e, d)
            plo, pup, _, _ = _rank_bounds(engine, e2, pins, n_max, tuple_len_max, cap)
            report.srp_lower = min(report.srp_lower, plo)
            if pup is not None and (report.srp_upper is None or pup < report.srp_upper):
                report.srp_upper = pup
                report.parameter = d
    return report


def scott_complexity(e: OrderExpr, n_max: int = 3, tuple_len_max: int = 2,
                     engine: Engine = None, param_len_max: int = 3) -> Union[ComplexityTag, RankReport]:
    """The Scott sentence complexity, or the partial rank report when the
    ranks are not pinned within the bounds."""
    e = absorb_points(e)
    if not e.blocks:
        return ComplexityTag("Pi", 1)
    if e.is_finite:
        return ComplexityTag("dSigma", 1)
    report = rank_report(e, n_max, tuple_len_max, engine, param_len_max)
    if not report.pinned:
        return report
    return complexity_from_invariants(report.sr_upper, report.srp_upper)


# --------------------------------------------------------------------------
# 2-universal cover

def cover2(e: OrderExpr) -> OrderExpr:
    """A sum ``M`` of points and shuffles with ``e <=_2 M``.

    If every color sequence over the colors of ``e`` occurs in ``e`` the
    answer is the shuffle of those colors.  Otherwise a shortest omitted
    sequence ``c1 c2 ...`` splits ``e`` into the part not above any
    ``c1``-element and the part above one; the first uses fewer colors (after
    peeling off a possible last ``c1``-point) and the second omits ``c2 ...``,
    so recursion terminates.
    """
    e = normalize(e)
    if e.is_finite:
        return e
    cs = colors_used(e)
    missing = shortest_unrealized(e, cs)
    if missing is None:
        return OrderExpr([Shuffle(cs)])
    out = []
    for piece in _decompose(e, missing):
        out.extend(cover2(piece).blocks)
    return normalize(OrderExpr(out))


def _decompose(e: OrderExpr, missing) -> List[OrderExpr]:
    if not e.blocks:
        return []
    if len(missing) == 1:
        return [e]
    c = missing[0]
    head = prefix_through_color(e, c)
    rest = suffix_after_color(e, c)
    pieces = [head]
    if head.blocks and head.blocks[-1] == Point(c):
        pieces = [OrderExpr(head.blocks[:-1]), OrderExpr([Point(c)])]
    return [p for p in pieces if p.blocks] + _decompose(rest, missing[1:])


def in_basic_sums(e: OrderExpr) -> bool:
    return all(isinstance(b, (Point, Shuffle)) for b in e.blocks)


# --------------------------------------------------------------------------
# emitted sentences

def emit_scott_sentence_finite(order) -> formulas.Formula:
    return formulas.scott_sentence_finite(order)


def emit_shuffle_axioms(colors) -> list:
    return formulas.shuffle_axioms(colors)
