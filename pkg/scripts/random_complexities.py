"""Tally Scott complexities of random block expressions.

    python3 scripts/random_complexities.py --count 40 --seed 3
"""
import argparse
import random
import time
from collections import Counter

from bfscott.engine import Engine
from bfscott.gen import GenConfig, random_expr
from bfscott.scott import ComplexityTag, scott_complexity


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--max-blocks", type=int, default=3)
    ap.add_argument("--max-colors", type=int, default=2)
    ap.add_argument("--max-period", type=int, default=2)
    a = ap.parse_args()

    rng = random.Random(a.seed)
    cfg = GenConfig(max_blocks=a.max_blocks, max_colors=a.max_colors, max_period=a.max_period)
    eng = Engine()
    tally = Counter()
    for _ in range(a.count):
        e = random_expr(rng, cfg, min_blocks=1)
        t = time.time()
        res = scott_complexity(e, engine=eng)
        label = str(res) if isinstance(res, ComplexityTag) else "partial"
        tally[label] += 1
        print(f"{str(e):50s} {label:10s} {time.time() - t:6.2f}s")
    print(dict(tally))


if __name__ == "__main__":
    main()
