"""Random block expressions and finite encodings for experiments and tests."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Tuple

from .order import CutDescriptor, OmegaWord, OrderExpr, Point, Shuffle, normalize, points


@dataclass(frozen=True)
class GenConfig:
    max_blocks: int = 4
    max_colors: int = 3
    max_prefix: int = 2
    max_period: int = 3
    p_point: float = 0.35
    p_shuffle: float = 0.35


def random_block(rng: random.Random, cfg: GenConfig = GenConfig()):
    k = cfg.max_colors
    t = rng.random()
    if t < cfg.p_point:
        return Point(rng.randrange(k))
    if t < cfg.p_point + cfg.p_shuffle:
        return Shuffle(rng.sample(range(k), rng.randint(1, k)))
    prefix = [rng.randrange(k) for _ in range(rng.randint(0, cfg.max_prefix))]
    period = [rng.randrange(k) for _ in range(rng.randint(1, cfg.max_period))]
    return OmegaWord(prefix, period)


def random_expr(rng: random.Random, cfg: GenConfig = GenConfig(), min_blocks: int = 0) -> OrderExpr:
    n = rng.randint(min_blocks, cfg.max_blocks)
    return normalize(OrderExpr(random_block(rng, cfg) for _ in range(n)))


def finite_pebbled(order: Sequence[int], tup: Sequence[int]) -> Tuple[OrderExpr, CutDescriptor]:
    """The point-block encoding of a finite order with pebbled positions."""
    sel = set(tup)
    return points(order), CutDescriptor([i in sel for i in range(len(order))])


def truncate(w: OmegaWord, length: int) -> Tuple[int, ...]:
    return w.word(0, length)
