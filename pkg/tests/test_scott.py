import pytest
from hypothesis import given, settings

from bfscott.engine import Engine
from bfscott.order import CutDescriptor, OrderExpr, Shuffle, absorb_points, eta, points
from bfscott.scott import (
    ComplexityTag, InconsistentRanks, RankReport, complexity_from_invariants,
    cover2, in_basic_sums, orbit_equal, rank_report, scott_complexity,
    with_parameters,
)
from bfscott.syntax import parse_expr

from strategies import exprs

E = Engine()
Pi, Sigma, dSigma = (lambda k: ComplexityTag("Pi", k)), (lambda k: ComplexityTag("Sigma", k)), (lambda k: ComplexityTag("dSigma", k))


def test_classification():
    assert complexity_from_invariants(1, 1) == Pi(2)
    assert complexity_from_invariants(3, 1) == Sigma(3)
    assert complexity_from_invariants(2, 1) == dSigma(2)
    for bad in [(4, 1), (1, 2), (0, 0)]:
        with pytest.raises(InconsistentRanks, match="inconsistent rank pair"):
            complexity_from_invariants(*bad)


def test_tag_order():
    assert Sigma(2).included_in(dSigma(2))
    assert Pi(2).included_in(dSigma(2))
    assert dSigma(2).included_in(Pi(3)) and dSigma(2).included_in(Sigma(3))
    assert not dSigma(2).included_in(Pi(2))
    assert not Pi(2).included_in(Sigma(2))
    assert str(dSigma(2)) == "d-Sigma 2"
    with pytest.raises(ValueError):
        ComplexityTag("Delta", 1)


@pytest.mark.parametrize("text, tag", [
    ("", Pi(1)),
    ("1_0 + 1_1", dSigma(1)),
    ("sh(0,1)", Pi(2)),
    ("eta_0 + 1_0 + sh(0,1)", Sigma(3)),
    ("(eta_0 + eta_1) * 2", Pi(2)),
    ("eta_0 + 1_0 * 2 + eta_0", dSigma(2)),
    ("1_0 + eta_0", dSigma(2)),
    ("omega[;0]", Pi(3)),
])
def test_complexity_table(text, tag):
    assert scott_complexity(parse_expr(text), engine=E) == tag


def test_sigma3_witness_report():
    L = parse_expr("eta_0 + 1_0 + sh(0,1)")
    r = rank_report(L, engine=E)
    assert (r.sr_lower, r.sr_upper, r.srp_lower, r.srp_upper) == (3, 3, 1, 1)
    q, p = r.witness
    assert q == CutDescriptor([(0,), False, ()]) and p == CutDescriptor([(), True, ()])
    assert r.witness_rank == 2
    assert r.parameter == p
    assert r.to_dict()["sr"] == [3, 3]


def test_partial_report_when_bounds_too_small():
    r = rank_report(parse_expr("eta_0 + 1_0 + sh(0,1)"), n_max=1, engine=E)
    assert r.sr_upper is None and r.sr_lower == 2
    assert not r.pinned
    assert isinstance(scott_complexity(parse_expr("eta_0 + 1_0 + sh(0,1)"), n_max=1, engine=E), RankReport)
    with pytest.raises(ValueError):
        rank_report(parse_expr("eta_0"), n_max=0)


def test_orbit_equal():
    e = OrderExpr([eta(0), points([1]).blocks[0], eta(0)])
    assert orbit_equal(e, CutDescriptor([(0,), False, ()]), CutDescriptor([(0,), False, ()]))
    assert not orbit_equal(e, CutDescriptor([(0,), False, ()]), CutDescriptor([(), False, (0,)]))
    w = parse_expr("omega[;0]")
    assert not orbit_equal(w, CutDescriptor([(3,)]), CutDescriptor([(4,)]))
    with pytest.raises(ValueError):
        orbit_equal(parse_expr("eta_0 + 1_0 + eta_0"), CutDescriptor([(), True, ()]), CutDescriptor([(), True, ()]))


def test_with_parameters():
    e = parse_expr("sh(0,1)")
    e2, pins = with_parameters(e, CutDescriptor([(1, 0)]))
    assert e2 == parse_expr("sh(0,1) + 1_1 + sh(0,1) + 1_0 + sh(0,1)")
    assert pins == (1, 3)


@settings(max_examples=25, deadline=None)
@given(exprs(max_blocks=2, max_colors=2, max_period=2))
def test_report_consistency(e):
    r = rank_report(e, n_max=2, engine=E, param_len_max=1)
    if r.sr_upper is not None:
        assert r.sr_lower <= r.sr_upper
    if r.srp_upper is not None:
        assert r.srp_lower <= r.srp_upper
    if r.witness is not None and r.witness_rank:
        a, b = r.witness
        f = absorb_points(e)
        assert E.leq_tuples(f, a, f, b, r.witness_rank)
        assert not orbit_equal(f, a, b)


@settings(max_examples=25, deadline=None)
@given(exprs(max_blocks=3))
def test_orbit_equal_implies_equivalence(e):
    e = absorb_points(e)
    for d in E.cuts(e, 1, 1):
        for n in range(4):
            assert not orbit_equal(e, d, d) or E.equiv_tuples(e, d, e, d, n)


def test_cover2_examples():
    assert cover2(parse_expr("eta_0")) == OrderExpr([eta(0)])
    assert cover2(parse_expr("sh(0,1)")) == OrderExpr([Shuffle({0, 1})])
    w = parse_expr("omega[;1,0]")
    assert cover2(w) == OrderExpr([Shuffle({0, 1})])
    assert E.leq(w, cover2(w), 2)
    # finite orders cover themselves
    assert cover2(points([0, 1])) == points([0, 1])


@settings(max_examples=100, deadline=None)
@given(exprs(max_blocks=4))
def test_cover2_sound(e):
    m = cover2(e)
    assert in_basic_sums(m)
    assert E.leq(e, m, 2)
