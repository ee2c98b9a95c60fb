"""Canonical text format for polynomials and rational functions.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom (("^" | "**") ["-"] INT)?
    atom   := INT | NAME | "(" expr ")"
    NAME   := [A-Za-z_][A-Za-z0-9_]*

Serialization lists monomials in ascending graded-lex order with variable
precedence ``q < a < b < t < others`` (alphabetical), writes the variables
of each monomial alphabetically, and wraps a non-trivial quotient as
``(num)/(den)``, e.g. ``(1 - a*q)/(1 - a*b*q^2)``.  ``parse(str(x))``
reproduces ``x`` exactly.
"""

from __future__ import annotations

import re

from .poly import Poly, var
from .ratfunc import RatFunc

__all__ = ["parse", "parse_poly", "serialize"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group(1) is not None:
            out.append(("int", m.group(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2)))
        else:
            out.append(("op", m.group(3)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'token'}, got {tok[1]!r}")
        self.i += 1
        return tok

    def expr(self) -> RatFunc:
        acc = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RatFunc:
        acc = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def unary(self) -> RatFunc:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek()[1] in ("^", "**"):
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal")
            return base ** (sign * int(val))
        return base

    def atom(self) -> RatFunc:
        kind, val = self.peek()
        if kind == "int":
            self.take()
            return RatFunc(int(val))
        if kind == "name":
            self.take()
            return RatFunc(var(val))
        if val == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def parse(text: str) -> RatFunc:
    """Parse the canonical (or any grammatical) text into a :class:`RatFunc`."""
    p = _Parser(text)
    if not p.toks:
        raise ParseError("empty expression")
    out = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input at token {p.i}: {p.toks[p.i][1]!r}")
    return out


def parse_poly(text: str) -> Poly:
    r = parse(text)
    if not r.is_polynomial:
        raise ParseError(f"{text!r} is not a polynomial")
    return r.as_poly()


def serialize(x) -> str:
    return str(x)
