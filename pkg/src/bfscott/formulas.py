"""Finitary first-order formulas over ``{<=} + {P_i}``.

Text form is parenthesized prefix notation::

    formula := "(le" VAR VAR ")" | "(eq" VAR VAR ")" | "(P<i>" VAR ")"
             | "(not" formula ")" | "(and" formula* ")" | "(or" formula* ")"
             | "(forall" VAR formula ")" | "(exists" VAR formula ")"

``(and)`` is true and ``(or)`` is false.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple, Union


@dataclass(frozen=True)
class Le:
    x: str
    y: str


@dataclass(frozen=True)
class Eq:
    x: str
    y: str


@dataclass(frozen=True)
class Color:
    color: int
    x: str


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    parts: Tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    parts: Tuple["Formula", ...]


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Le, Eq, Color, Not, And, Or, Forall, Exists]


def conj(*parts) -> And:
    return And(tuple(parts))


def disj(*parts) -> Or:
    return Or(tuple(parts))


def lt(x, y) -> Formula:
    return conj(Le(x, y), Not(Eq(x, y)))


def implies(a, b) -> Formula:
    return disj(Not(a), b)


def forall(vs: Sequence[str], body) -> Formula:
    for v in reversed(vs):
        body = Forall(v, body)
    return body


def exists(vs: Sequence[str], body) -> Formula:
    for v in reversed(vs):
        body = Exists(v, body)
    return body


# --------------------------------------------------------------------------
# syntax

def to_text(f: Formula) -> str:
    if isinstance(f, Le):
        return f"(le {f.x} {f.y})"
    if isinstance(f, Eq):
        return f"(eq {f.x} {f.y})"
    if isinstance(f, Color):
        return f"(P{f.color} {f.x})"
    if isinstance(f, Not):
        return f"(not {to_text(f.body)})"
    if isinstance(f, (And, Or)):
        op = "and" if isinstance(f, And) else "or"
        return "(" + " ".join([op] + [to_text(p) for p in f.parts]) + ")"
    op = "forall" if isinstance(f, Forall) else "exists"
    return f"({op} {f.var} {to_text(f.body)})"


_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")


def from_text(text: str) -> Formula:
    toks = _TOKEN.findall(text)
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(toks):
            raise ValueError("unexpected end of formula")
        pos += 1
        return toks[pos - 1]

    def parse():
        if take() != "(":
            raise ValueError(f"expected '(' at token {pos - 1}")
        op = take()
        if op in ("le", "eq"):
            node = (Le if op == "le" else Eq)(take(), take())
        elif re.fullmatch(r"P\d+", op):
            node = Color(int(op[1:]), take())
        elif op == "not":
            node = Not(parse())
        elif op in ("and", "or"):
            parts = []
            while toks[pos] != ")":
                parts.append(parse())
            node = (And if op == "and" else Or)(tuple(parts))
        elif op in ("forall", "exists"):
            var = take()
            node = (Forall if op == "forall" else Exists)(var, parse())
        else:
            raise ValueError(f"unknown operator {op!r}")
        if take() != ")":
            raise ValueError("expected ')'")
        return node

    f = parse()
    if pos != len(toks):
        raise ValueError("trailing input after formula")
    return f


def free_vars(f: Formula) -> frozenset:
    if isinstance(f, (Le, Eq)):
        return frozenset((f.x, f.y))
    if isinstance(f, Color):
        return frozenset((f.x,))
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (And, Or)):
        return frozenset().union(*(free_vars(p) for p in f.parts))
    return free_vars(f.body) - {f.var}


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def quantifier_rank(f: Formula) -> int:
    if isinstance(f, (Le, Eq, Color)):
        return 0
    if isinstance(f, Not):
        return quantifier_rank(f.body)
    if isinstance(f, (And, Or)):
        return max((quantifier_rank(p) for p in f.parts), default=0)
    return 1 + quantifier_rank(f.body)


def levels(f: Formula) -> Tuple[int, int]:
    """Least ``(s, p)`` with ``f`` syntactically Sigma_s and Pi_p."""
    if isinstance(f, (Le, Eq, Color)):
        return 0, 0
    if isinstance(f, Not):
        s, p = levels(f.body)
        return p, s
    if isinstance(f, (And, Or)):
        ls = [levels(p) for p in f.parts]
        return max((s for s, _ in ls), default=0), max((p for _, p in ls), default=0)
    s, p = levels(f.body)
    if isinstance(f, Exists):
        s = min(s, p + 1) if s else 1
        return s, s + 1
    p = min(p, s + 1) if p else 1
    return p + 1, p


def is_d_sigma(f: Formula, k: int) -> bool:
    """A conjunction of a Sigma_k and a Pi_k part (either may be absent)."""
    parts = f.parts if isinstance(f, And) else (f,)
    return all(min(levels(p)) <= k for p in parts)


# --------------------------------------------------------------------------
# model checking

class EvalError(ValueError):
    pass


def evaluate(f: Formula, order: Sequence[int], env: Dict[str, int] = None) -> bool:
    """Truth of ``f`` in the finite colored order ``order`` (a color list)."""
    env = env or {}

    def val(v):
        try:
            return env[v]
        except KeyError:
            raise EvalError(f"unbound variable {v!r}") from None

    if isinstance(f, Le):
        return val(f.x) <= val(f.y)
    if isinstance(f, Eq):
        return val(f.x) == val(f.y)
    if isinstance(f, Color):
        return order[val(f.x)] == f.color
    if isinstance(f, Not):
        return not evaluate(f.body, order, env)
    if isinstance(f, And):
        return all(evaluate(p, order, env) for p in f.parts)
    if isinstance(f, Or):
        return any(evaluate(p, order, env) for p in f.parts)
    test = all if isinstance(f, Forall) else any
    return test(evaluate(f.body, order, {**env, f.var: i}) for i in range(len(order)))


def eval_sentence(f: Formula, order: Sequence[int]) -> bool:
    if not is_sentence(f):
        raise EvalError(f"unbound variable(s) {sorted(free_vars(f))}")
    return evaluate(f, order)


# --------------------------------------------------------------------------
# emitters

def scott_sentence_finite(order: Sequence[int]) -> Formula:
    """Existential diagram plus a size cap; d-Sigma_1 (Pi_1 when empty)."""
    n = len(order)
    if n == 0:
        return Forall("x", Not(Eq("x", "x")))
    xs = [f"x{i + 1}" for i in range(n)]
    diagram = [lt(a, b) for a, b in zip(xs, xs[1:])]
    diagram += [Color(c, x) for c, x in zip(order, xs)]
    ys = [f"y{i + 1}" for i in range(n + 1)]
    cap = disj(*(Eq(a, b) for a, b in itertools.combinations(ys, 2)))
    return conj(exists(xs, conj(*diagram)), forall(ys, cap))


def shuffle_axioms(colors) -> list:
    """Pi_2 axioms of the color shuffle of ``colors``.

    Their countable models are exactly the shuffle: any two such orders are
    isomorphic by a back-and-forth between tuples with equal order pattern
    and colors.  There are no finite models, so only syntax is checked here.
    """
    colors = sorted(set(colors))
    if not colors:
        raise ValueError("shuffle needs a nonempty color set")
    order = forall(["x", "y", "z"], conj(
        Le("x", "x"),
        implies(conj(Le("x", "y"), Le("y", "x")), Eq("x", "y")),
        implies(conj(Le("x", "y"), Le("y", "z")), Le("x", "z")),
        disj(Le("x", "y"), Le("y", "x")),
    ))
    dense = forall(["x", "y"], implies(lt("x", "y"), Exists("z", conj(lt("x", "z"), lt("z", "y")))))
    no_ends = conj(Exists("w", Eq("w", "w")),
                   Forall("x", exists(["y", "z"], conj(lt("y", "x"), lt("x", "z")))))
    only = Forall("x", disj(*(Color(c, "x") for c in colors)))
    axioms = [order, dense, no_ends, only]
    for c in colors:
        axioms.append(forall(["x", "y"], implies(
            lt("x", "y"), Exists("z", conj(lt("x", "z"), lt("z", "y"), Color(c, "z"))))))
    return axioms
