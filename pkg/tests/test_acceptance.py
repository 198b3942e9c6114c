"""Acceptance criteria, one test per criterion.

Run alone with ``pytest tests/test_acceptance.py -v``; the terminal summary
lists one PASS/FAIL line per criterion.
"""
import itertools
import random
import time

import pytest

from bfscott import formulas
from bfscott.engine import Engine
from bfscott.gen import GenConfig, finite_pebbled, random_expr
from bfscott.order import (
    CutDescriptor, OmegaWord, OrderExpr, Point, Shuffle, eta, points,
    sequences_included,
)
from bfscott.oracle import PebbledPair, bf_leq, bf_leq_maximal, enumerate_orders
from bfscott.scott import (
    ComplexityTag, cover2, in_basic_sums, scott_complexity, with_parameters,
)
from bfscott.syntax import parse_expr

L = parse_expr("eta_0 + 1_0 + sh(0,1)")
SH = parse_expr("sh(0,1)")
A = OrderExpr([OmegaWord([], [1, 0])])
Q = CutDescriptor([(0,), False, ()])
P = CutDescriptor([(), True, ()])


def test_criterion_1_oracle_equivalence(criterion):
    eng = Engine()
    start = time.time()
    items = {}
    for order in enumerate_orders(5, 2):
        for k in range(3):
            for tup in itertools.combinations(range(len(order)), k):
                items.setdefault(k, []).append((order, tup, *finite_pebbled(order, tup)))
    count, bad = 0, []
    for group in items.values():
        for (a, ta, ea, da), (b, tb, eb, db) in itertools.product(group, repeat=2):
            for n in range(4):
                count += 1
                if eng.leq_tuples(ea, da, eb, db, n) != bf_leq(PebbledPair(a, b, ta, tb), n):
                    bad.append((a, ta, b, tb, n))
    elapsed = time.time() - start
    ok = not bad and elapsed < 600
    criterion(1, "oracle equivalence", ok, f"{count} queries, {len(bad)} discrepancies, {elapsed:.1f}s")
    assert ok, bad[:5]


def test_criterion_2_paper_facts(criterion):
    eng = Engine()
    start = time.time()
    facts = [
        ("Sh(0,1) <=_1 L", eng.leq(SH, L, 1), True),
        ("L <=_2 Sh(0,1)", eng.leq(L, SH, 2), True),
        ("q <=_2 p", eng.leq_tuples(L, Q, L, P, 2), True),
        ("eta_0 <=_1 Sh(0,1)", eng.leq(OrderExpr([eta(0)]), SH, 1), False),
        ("omega_A*2 <=_3 omega_A", eng.leq(A * 2, A, 3), True),
    ]
    elapsed = time.time() - start
    wrong = [name for name, got, want in facts if got is not want]
    ok = not wrong and elapsed < 60
    criterion(2, "paper-fact regression", ok, f"{len(facts) - len(wrong)}/{len(facts)} exact, {elapsed:.2f}s")
    assert ok, wrong


def _complexity_rows():
    rows = [("empty", OrderExpr(), ComplexityTag("Pi", 1))]
    for order in enumerate_orders(3, 3):
        if order:
            rows.append((f"finite {list(order)}", points(order), ComplexityTag("dSigma", 1)))
    for k in (1, 2, 3):
        for S in itertools.combinations(range(3), k):
            rows.append((f"Sh{set(S)}", OrderExpr([Shuffle(S)]), ComplexityTag("Pi", 2)))
    for n in (1, 2, 3):
        rows.append((f"(eta_0+eta_1)*{n}", OrderExpr([eta(0), eta(1)]) * n, ComplexityTag("Pi", 2)))
    for n in (2, 3):
        rows.append((f"(eta+{n}+eta)_0", OrderExpr([eta(0)] + [Point(0)] * n + [eta(0)]),
                     ComplexityTag("dSigma", 2)))
    rows.append(("eta_0+1_0+Sh(0,1)", L, ComplexityTag("Sigma", 3)))
    return rows


def test_criterion_3_complexity_table(criterion):
    eng = Engine()
    start = time.time()
    wrong = []
    for name, e, want in _complexity_rows():
        got = scott_complexity(e, engine=eng)
        if got != want:
            wrong.append((name, str(got), str(want)))
    # the n = 1 member of the (eta+n+eta)_0 row: eta+1+eta is eta itself
    one = scott_complexity(OrderExpr([eta(0), Point(0), eta(0)]), engine=eng)
    conflict = one != ComplexityTag("dSigma", 2)
    elapsed = time.time() - start
    detail = f"{len(_complexity_rows()) - len(wrong)}/{len(_complexity_rows())} rows, {elapsed:.1f}s"
    if conflict:
        detail += f"; (eta+1+eta)_0 is isomorphic to eta_0 and yields {one}, not d-Sigma 2"
    criterion(3, "complexity table", not wrong and not conflict, detail)
    assert not wrong, wrong


@pytest.mark.xfail(strict=True, reason="(eta+1+eta)_0 is isomorphic to eta_0, whose complexity is Pi 2")
def test_criterion_3_eta_one_eta():
    assert scott_complexity(OrderExpr([eta(0), Point(0), eta(0)])) == ComplexityTag("dSigma", 2)


def test_criterion_4_shuffle_homogeneity(criterion):
    # tuples with equal color sequences, one written as a selection inside
    # the shuffle and one as pinned points of a split copy of it
    eng = Engine()
    count, bad = 0, []
    for k in (1, 2, 3):
        for S in itertools.combinations(range(3), k):
            e = OrderExpr([Shuffle(S)])
            for size in range(4):
                seqs = list(itertools.product(S, repeat=size))
                for s1, s2 in itertools.product(seqs, repeat=2):
                    if s1 != s2:
                        continue
                    d = CutDescriptor([s1])
                    e2, pins = with_parameters(e, d)
                    d2 = CutDescriptor([j in pins if isinstance(b, Point) else () for j, b in enumerate(e2.blocks)])
                    for n in range(4):
                        count += 1
                        if not (eng.equiv_tuples(e, d, e, d, n) and eng.equiv_tuples(e, d, e2, d2, n)):
                            bad.append((S, s1, n))
    criterion(4, "shuffle homogeneity", not bad, f"{count} tuple pairs, {len(bad)} failures")
    assert not bad, bad[:5]


def test_criterion_5_cover2(criterion):
    eng = Engine()
    rng = random.Random(2024)
    cfg = GenConfig(max_blocks=4, max_colors=3, max_period=3)
    start = time.time()
    bad = []
    for _ in range(200):
        e = random_expr(rng, cfg)
        m = cover2(e)
        if not (in_basic_sums(m) and eng.leq(e, m, 2)):
            bad.append((str(e), str(m)))
    elapsed = time.time() - start
    ok = not bad and elapsed < 300
    criterion(5, "cover2 soundness", ok, f"{200 - len(bad)}/200, {elapsed:.1f}s")
    assert ok, bad[:5]


def test_criterion_6_finite_scott_sentences(criterion):
    models = list(enumerate_orders(5, 2))
    count, bad = 0, []
    for order in enumerate_orders(4, 2):
        f = formulas.scott_sentence_finite(order)
        for m in models:
            count += 1
            # distinct color words are non-isomorphic finite orders
            if formulas.eval_sentence(f, m) != (m == order):
                bad.append((order, m))
    criterion(6, "finite Scott sentences", not bad, f"{count} evaluations, {len(bad)} wrong")
    assert not bad, bad[:5]


def _random_pairs(seed, cfg, count):
    rng = random.Random(seed)
    return rng, [(random_expr(rng, cfg), random_expr(rng, cfg)) for _ in range(count)]


def test_criterion_7_property_suites(criterion):
    eng = Engine()
    cfg = GenConfig(max_blocks=3, max_colors=3, max_period=3)
    failures = {}

    rng, pairs = _random_pairs(71, cfg, 1000)
    failures["reflexivity"] = sum(not eng.leq(a, a, rng.randint(0, 3)) for a, _ in pairs)

    _, pairs = _random_pairs(72, cfg, 1000)
    failures["monotonicity"] = sum(
        any(x < y for x, y in zip(v, v[1:]))
        for v in ([eng.leq(a, b, n) for n in range(4)] for a, b in pairs))

    rng, pairs = _random_pairs(73, GenConfig(max_blocks=2, max_colors=3, max_period=3), 2000)
    bad = premised = 0
    for i in range(1000):
        (a, x), (c, y) = pairs[2 * i], pairs[2 * i + 1]
        n = rng.randint(0, 3)
        # make the premises hold often: reuse a side or take its cover
        b = rng.choice([a, cover2(a), x])
        d = rng.choice([c, cover2(c), y])
        if eng.leq(a, b, n) and eng.leq(c, d, n):
            premised += 1
            bad += not eng.leq(a + c, b + d, n)
    failures["sum congruence"] = bad

    _, pairs = _random_pairs(74, cfg, 1000)
    failures["item-2"] = sum(
        (a == b or eng._game(a, b, 0)[0]) != sequences_included(b, a) for a, b in pairs)

    rng, pairs = _random_pairs(75, cfg, 1000)
    bad = 0
    for a, b in pairs:
        n = rng.randint(0, 3)
        right = rng.choice([a, b])
        cert = eng.certificate(a, right, n)
        bad += cert.holds != eng.leq(a, right, n) or not eng.replay(cert)
    failures["certificate replay"] = bad

    ok = not any(failures.values())
    detail = ", ".join(f"{k} {1000 - v}/1000" for k, v in failures.items())
    criterion(7, "property suites", ok, detail + f"; {premised} congruence instances had both premises")
    assert ok, failures


def _omega_words():
    words = set()
    for pl in range(4):
        for ql in range(1, 4):
            for pre in itertools.product(range(2), repeat=pl):
                for per in itertools.product(range(2), repeat=ql):
                    words.add(OmegaWord(pre, per))
    return sorted(words, key=lambda w: (len(w.prefix), len(w.period), w.prefix, w.period))


def _oracle_classes(T, H, n):
    classes = []
    for i in range(H):
        for c in classes:
            j = c[0]
            if (bf_leq_maximal(PebbledPair(T, T, (i,), (j,)), n)
                    and bf_leq_maximal(PebbledPair(T, T, (j,), (i,)), n)):
                c.append(i)
                break
        else:
            classes.append([i])
    return classes


def test_criterion_8_omega_horizon(criterion):
    eng = Engine()
    # the fast oracle variant must agree with the plain one first
    for order in enumerate_orders(4, 2):
        for i, j in itertools.product(range(len(order)), repeat=2):
            for n in range(4):
                p = PebbledPair(order, order, (i,), (j,))
                assert bf_leq(p, n) == bf_leq_maximal(p, n)
    words = _omega_words()
    bad = []
    for w in words:
        T = w.word(0, eng.bounds.horizon(w, 3) + 2 * len(w.period))
        for n in range(4):
            got = [[idx for _, idx in c] for c in eng.element_classes(OrderExpr([w]), n)]
            if got != _oracle_classes(T, eng.bounds.horizon(w, n), n):
                bad.append((str(OrderExpr([w])), n))
    criterion(8, "omega-word horizon", not bad, f"{len(words)} words x 4 ranks, {len(bad)} discrepancies")
    assert not bad, bad[:5]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
