"""Cross-check the symbolic engine against the exhaustive oracle.

    python3 scripts/oracle_sweep.py --max-size 5 --max-colors 2 --tuple-len 2 --n-max 3
"""
import argparse
import itertools
import time

from bfscott.engine import Engine
from bfscott.gen import finite_pebbled
from bfscott.oracle import PebbledPair, bf_leq, enumerate_orders


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--max-colors", type=int, default=2)
    ap.add_argument("--tuple-len", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=3)
    a = ap.parse_args()

    eng = Engine()
    start = time.time()
    groups = {}
    for order in enumerate_orders(a.max_size, a.max_colors):
        for k in range(a.tuple_len + 1):
            for tup in itertools.combinations(range(len(order)), k):
                groups.setdefault(k, []).append((order, tup))
    count = bad = 0
    for group in groups.values():
        for (x, tx), (y, ty) in itertools.product(group, repeat=2):
            ex, dx = finite_pebbled(x, tx)
            ey, dy = finite_pebbled(y, ty)
            for n in range(a.n_max + 1):
                count += 1
                want = bf_leq(PebbledPair(x, y, tx, ty), n)
                if eng.leq_tuples(ex, dx, ey, dy, n) != want:
                    bad += 1
                    if bad <= 10:
                        print("mismatch", x, tx, y, ty, n, "oracle:", want)
    print(f"{count} queries, {bad} mismatches, {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
