import pytest
from hypothesis import given

from bfscott.order import EMPTY, OmegaWord, OrderExpr, Point, Shuffle, eta, render
from bfscott.syntax import UNSUPPORTED, ParseError, parse_expr, parse_finite

from strategies import exprs


def test_examples():
    assert parse_expr("eta_0 + 1_0 + sh(0,1)") == OrderExpr([eta(0), Point(0), Shuffle({0, 1})])
    assert parse_expr("") == EMPTY
    assert parse_expr("(eta_0 + eta_1) * 2") == OrderExpr([eta(0), eta(1)] * 2)
    assert parse_expr("omega[;1,0]") == OrderExpr([OmegaWord([], [1, 0])])
    assert parse_expr(" 1_0*3 ") == OrderExpr([Point(0)] * 3)
    # repetition of a shuffle merges
    assert parse_expr("eta_0*2") == OrderExpr([eta(0)])


@pytest.mark.parametrize("text, offset", [
    ("1_0 +", 5),
    ("sh(0,", 5),
    ("omega[0;]", 0),
    ("eta_0 eta_1", 6),
    ("foo", 0),
])
def test_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.offset == offset
    assert f"at offset {offset}" in str(info.value)


@pytest.mark.parametrize("text", ["eta_0 * eta_1", "2 * eta_0", "(1_0 + eta_0) * eta_0"])
def test_products_outside_algebra(text):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.message == UNSUPPORTED


def test_offsets_are_bytes():
    with pytest.raises(ParseError) as info:
        parse_expr("1_0 + η_0")
    assert info.value.offset == 6
    with pytest.raises(ParseError) as info:
        parse_expr("ηη + x")
    assert info.value.offset == 0


def test_finite_orders():
    assert parse_finite("[0,1,0]") == (0, 1, 0)
    assert parse_finite("[]") == ()
    with pytest.raises(ParseError):
        parse_finite("[0,1")


@given(exprs(max_blocks=4))
def test_round_trip(e):
    assert parse_expr(render(e)) == e
