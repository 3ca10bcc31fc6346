"""Text form of polynomials.

Grammar (whitespace is insignificant)::

    poly    := [sign] term { ('+' | '-') term }
    term    := factor { '*' factor }
    factor  := integer [ '/' positive-integer ]
             | identifier [ '^' positive-integer ]

``zeta`` denotes the generator of Q(zeta_m) and is only accepted in
cyclotomic rings.  A term may carry several numeric factors; they multiply.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import PolynomialSyntaxError
from .field import CyclotomicField
from .poly import Polynomial, Ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0
        self.field = ring.field
        self.cyclotomic = isinstance(ring.field, CyclotomicField)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, self.text, tok[2])

    def positive_int(self, what):
        tok = self.take()
        if tok[0] != "num":
            self.error(f"expected {what}", tok)
        value = int(tok[1])
        if value <= 0:
            self.error(f"{what} must be positive", tok)
        return value

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        terms = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        while True:
            coeff, exp = self.term()
            coeff = coeff * sign
            terms[exp] = terms[exp] + coeff if exp in terms else coeff
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                sign = -1 if tok[1] == "-" else 1
                continue
            self.error(f"unexpected {tok[1]!r}")
        return Polynomial(self.ring, terms)

    def term(self):
        coeff = self.field.one
        exp = [0] * self.ring.nvars
        while True:
            tok = self.take()
            if tok[0] == "num":
                value = Fraction(int(tok[1]))
                if self.peek()[:2] == ("op", "/"):
                    self.take()
                    nxt = self.peek()
                    if nxt[0] != "num":
                        self.error("malformed rational: expected a positive integer denominator", nxt)
                    self.take()
                    den = int(nxt[1])
                    if den == 0:
                        self.error("malformed rational: zero denominator", nxt)
                    value = value / den
                coeff = coeff * value
            elif tok[0] == "ident":
                power = 1
                if self.peek()[:2] == ("op", "^"):
                    self.take()
                    power = self.positive_int("exponent")
                if tok[1] == "zeta" and tok[1] not in self.ring.vars:
                    if not self.cyclotomic:
                        self.error("'zeta' is only available in cyclotomic rings", tok)
                    coeff = coeff * self.field.zeta ** power
                else:
                    if tok[1] not in self.ring.vars:
                        self.error(f"unknown variable {tok[1]!r}", tok)
                    exp[self.ring.index(tok[1])] += power
            else:
                self.error(f"unexpected {tok[1]!r}" if tok[0] != "end" else "unexpected end of input", tok)
            nxt = self.peek()
            if nxt[:2] == ("op", "*"):
                self.take()
                continue
            if nxt[:2] == ("op", "/"):
                self.error("division is only allowed inside a rational literal", nxt)
            return coeff, tuple(exp)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    >>> R = Ring(["x", "y", "z"])
    >>> str(parse_polynomial("x^3 - 2*y^2*z", R))
    'x^3 - 2*y^2*z'
    """
    if not isinstance(text, str):
        raise PolynomialSyntaxError("polynomial text must be a string", "", 0)
    return _Parser(text, ring).parse()


def parse_field_element(text: str, field):
    """Parse a scalar such as ``"-3/4"`` or ``"1 + zeta^2"``."""
    p = parse_polynomial(text, Ring([], field))
    return p.coefficient(())
