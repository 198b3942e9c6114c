"""Recursive-descent parser for the expression grammar.

    expr     := term ("+" term)* | ""
    term     := block | block "*" NAT | "(" expr ")" ("*" NAT)?
    block    := "1_" NAT | "eta_" NAT | "sh(" NAT ("," NAT)* ")"
              | "omega[" colorseq ";" colorseq "]"
    colorseq := "" | NAT ("," NAT)*

Whitespace is insignificant.  ``t * n`` is n-fold concatenation.
"""
from __future__ import annotations

import functools
import re

from .order import EMPTY, OmegaWord, OrderExpr, Point, Shuffle, normalize


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


UNSUPPORTED = "outside supported block algebra"

_NAT = re.compile(r"[0-9]+")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def eat(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.eat(s):
            raise ParseError(f"expected {s!r}", self.pos)

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def nat(self) -> int:
        self.skip()
        m = _NAT.match(self.text, self.pos)
        if not m:
            raise ParseError("expected a natural number", self.pos)
        self.pos = m.end()
        return int(m.group())

    def expr(self) -> OrderExpr:
        if self.at_end() or self.peek(")"):
            return EMPTY
        e = self.term()
        while self.eat("+"):
            e = e + self.term()
        return e

    def term(self) -> OrderExpr:
        start = self.pos
        if self.eat("("):
            e = self.expr()
            self.expect(")")
        else:
            e = OrderExpr([self.block()])
        if self.eat("*"):
            self.skip()
            if not _NAT.match(self.text, self.pos):
                # eta * eta, 2 * eta and friends
                raise ParseError(UNSUPPORTED, start)
            n = self.nat()
            if n < 1:
                raise ParseError("repetition count must be >= 1", self.pos)
            e = e * n
        return e

    def block(self):
        self.skip()
        start = self.pos
        if self.eat("1_"):
            return Point(self.nat())
        if self.eat("eta_"):
            return Shuffle({self.nat()})
        if self.eat("sh("):
            cs = [self.nat()]
            while self.eat(","):
                cs.append(self.nat())
            self.expect(")")
            return Shuffle(cs)
        if self.eat("omega["):
            prefix = self.colorseq(";")
            self.expect(";")
            period = self.colorseq("]")
            self.expect("]")
            if not period:
                raise ParseError("omega period must be nonempty", start)
            return OmegaWord(prefix, period)
        if _NAT.match(self.text, self.pos):
            # a bare count such as the 2 in "2*eta_0"
            raise ParseError(UNSUPPORTED, start)
        raise ParseError("expected a block", start)

    def colorseq(self, stop: str):
        if self.peek(stop):
            return []
        cs = [self.nat()]
        while self.eat(","):
            cs.append(self.nat())
        return cs


def _byte_offsets(fn):
    # the parser counts characters; diagnostics report byte offsets
    @functools.wraps(fn)
    def wrapped(text: str):
        try:
            return fn(text)
        except ParseError as err:
            raise ParseError(err.message, len(text[:err.offset].encode())) from None
    return wrapped


@_byte_offsets
def parse_expr(text: str) -> OrderExpr:
    """Parse and normalize an expression."""
    p = _Parser(text)
    e = p.expr()
    if not p.at_end():
        raise ParseError("unexpected input", p.pos)
    return normalize(e)


@_byte_offsets
def parse_finite(text: str) -> tuple:
    """Parse an explicit finite order such as ``[0,1,0]``."""
    p = _Parser(text)
    p.expect("[")
    cs = p.colorseq("]")
    p.expect("]")
    if not p.at_end():
        raise ParseError("unexpected input", p.pos)
    return tuple(cs)
