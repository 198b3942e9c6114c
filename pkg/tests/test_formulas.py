import itertools

import pytest
from hypothesis import given

from bfscott import formulas as F
from bfscott.oracle import enumerate_orders

from strategies import finite_orders


def test_text_round_trip():
    f = F.forall(["x"], F.exists(["y"], F.conj(F.lt("x", "y"), F.Color(1, "y"))))
    text = F.to_text(f)
    assert text.startswith("(forall x (exists y")
    assert F.from_text(text) == f
    assert F.from_text("(and)") == F.And(())
    with pytest.raises(ValueError):
        F.from_text("(le x y")
    with pytest.raises(ValueError):
        F.from_text("(frob x)")


def test_levels():
    atom = F.Le("x", "y")
    assert F.levels(atom) == (0, 0)
    assert F.levels(F.Exists("x", atom)) == (1, 2)
    assert F.levels(F.Forall("x", atom)) == (2, 1)
    ae = F.forall(["x"], F.exists(["y"], atom))
    assert F.levels(ae) == (3, 2)
    assert F.levels(F.Not(ae)) == (2, 3)
    assert F.quantifier_rank(ae) == 2


def test_evaluate_examples():
    empty = F.Forall("x", F.Not(F.Eq("x", "x")))
    assert F.eval_sentence(empty, [])
    assert not F.eval_sentence(empty, [0])
    assert not F.eval_sentence(F.scott_sentence_finite([0, 1]), [0, 1, 0])
    with pytest.raises(F.EvalError):
        F.eval_sentence(F.Le("x", "y"), [0])


def test_finite_sentence_shape():
    assert F.scott_sentence_finite([]) == F.Forall("x", F.Not(F.Eq("x", "x")))
    f = F.scott_sentence_finite([0])
    assert F.is_sentence(f)
    assert F.is_d_sigma(f, 1)
    assert not F.is_d_sigma(F.forall(["x"], F.exists(["y"], F.Le("x", "y"))), 1)


def test_finite_sentence_characterizes():
    models = list(enumerate_orders(5, 2))
    for order in enumerate_orders(3, 2):
        f = F.scott_sentence_finite(order)
        assert [m for m in models if F.eval_sentence(f, m)] == [order]


def test_shuffle_axioms():
    ax = F.shuffle_axioms({0})
    assert len(ax) == 5
    assert all(F.is_sentence(a) and F.levels(a)[1] <= 2 for a in ax)
    two = F.shuffle_axioms({0, 1})
    assert len(two) == 6
    with pytest.raises(ValueError):
        F.shuffle_axioms(set())


def test_shuffle_axioms_have_no_finite_models():
    ax = F.shuffle_axioms({0, 1})
    for order in enumerate_orders(4, 2):
        assert not all(F.eval_sentence(a, order) for a in ax)


@given(finite_orders(max_size=3))
def test_linear_order_axiom_holds_on_finite_orders(order):
    assert F.eval_sentence(F.shuffle_axioms({0})[0], order)
