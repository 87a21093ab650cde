"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is insignificant)::

    expr     := ['+' | '-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | ident | '(' expr ')'
    rational := uint ('/' uint)?
    ident    := [A-Za-z_][A-Za-z0-9_]*

A leading sign is accepted at the start of every ``expr`` so that rendered
polynomials such as ``-x^3 + y^2`` parse back.  Juxtaposition (``2x``,
``x y``) is rejected with the offending position.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZeroCoefficient, PolySyntaxError, UnknownVariable
from .field import FieldSpec
from .poly import MultiPoly, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(message, tok[2], self.text)

    def expect_op(self, ch):
        tok = self.peek()
        if tok[0] != "op" or tok[1] != ch:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            self.fail(f"expected {ch!r}, found {what}")
        return self.take()

    def parse(self) -> MultiPoly:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            self.fail(f"unexpected {tok[1]!r} (implicit multiplication is not allowed)")
        return result

    def expr(self) -> MultiPoly:
        tok = self.peek()
        negate = False
        if tok[0] == "op" and tok[1] in "+-":
            negate = tok[1] == "-"
            self.take()
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if tok[1] == "+" else acc - rhs
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> MultiPoly:
        base = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp_tok = self.peek()
            if exp_tok[0] != "num":
                self.fail("exponent must be a non-negative integer")
            self.take()
            return base ** int(exp_tok[1])
        return base

    def base(self) -> MultiPoly:
        tok = self.peek()
        kind, value, pos = tok
        if kind == "num":
            self.take()
            num = int(value)
            den = 1
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den_tok = self.peek()
                if den_tok[0] != "num":
                    self.fail("denominator must be an unsigned integer")
                self.take()
                den = int(den_tok[1])
                if den == 0:
                    raise DivisionByZeroCoefficient(
                        f"zero denominator at position {den_tok[2]}", location=den_tok[2]
                    )
            try:
                c = self.ring.domain.coerce(Fraction(num, den))
            except DivisionByZeroCoefficient as exc:
                exc.location = pos
                raise
            return self.ring.const(c)
        if kind == "ident":
            self.take()
            if value not in self.ring._index:
                raise UnknownVariable(
                    f"unknown variable {value!r} at position {pos}", location=pos
                )
            return self.ring.var(value)
        if kind == "op" and value == "(":
            self.take()
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {value!r}")


def parse_poly(text: str, variables, field: FieldSpec | None = None) -> MultiPoly:
    """Parse ``text`` into a polynomial over ``field`` in the given variables.

    ``variables`` may also be a ready-made :class:`PolyRing`.
    """
    if isinstance(variables, PolyRing):
        ring = variables
    else:
        if field is None:
            raise ValueError("a field is required when variables are given by name")
        ring = PolyRing(variables, field)
    return _Parser(text, ring).parse()


def parse_monomial(text: str, variables) -> tuple:
    """Parse a monomial such as ``e1^2*e2`` into an exponent tuple."""
    from .field import QQ

    f = parse_poly(text, variables, QQ)
    if len(f.terms) != 1 or list(f.terms.values())[0] != 1:
        raise PolySyntaxError(f"{text!r} is not a monic monomial", 0, text)
    return next(iter(f.terms))
