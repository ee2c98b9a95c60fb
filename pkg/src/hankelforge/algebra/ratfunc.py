"""Rational functions as normalized quotients of :class:`Poly`."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping

from .gcd import poly_gcd
from .poly import Poly, _coerce_coeff, mono_min, var

__all__ = ["RatFunc", "ratfunc_eq", "as_ratfunc"]


def _unshift(p: Poly, m: int) -> Poly:
    if not m:
        return p
    return Poly._from_terms({k - m: c for k, c in p.terms.items()})


class RatFunc:
    """Immutable quotient ``num / den`` kept in lowest terms.

    The denominator is integer-primitive and its first canonical
    coefficient is positive.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, normalize: bool = True):
        num = num if isinstance(num, Poly) else Poly(num)
        den = den if isinstance(den, Poly) else Poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    # -- predicates -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def constant_value(self) -> Fraction | int:
        if not self.is_constant:
            raise ValueError("rational function is not constant")
        v = Fraction(self.num.constant_value()) / self.den.constant_value()
        return v.numerator if v.denominator == 1 else v

    def as_poly(self) -> Poly:
        if not self.den.is_constant:
            raise ValueError(f"{self} is not a polynomial")
        return self.num / self.den.constant_value()

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.num.variables) | set(self.den.variables)))

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc._raw(other, Poly(1))
        if isinstance(other, (int, Fraction, Rational)):
            c = _coerce_coeff(other)
            return RatFunc._raw(Poly(c), Poly(1))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero:
            return self
        if self.num.is_zero:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if self.den.is_constant and o.den.is_constant:
            num = self.num * o.den.constant_value() + o.num * self.den.constant_value()
            return RatFunc(num, self.den.constant_value() * o.den.constant_value())
        g = poly_gcd(self.den, o.den)
        d1 = self.den.exquo(g)
        d2 = o.den.exquo(g)
        num = self.num * d2 + o.num * d1
        return RatFunc(num, d1 * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero or o.num.is_zero:
            return RatFunc._raw(Poly(0), Poly(1))
        # cross-cancel: both operands are already in lowest terms
        g1 = _cheap_gcd(self.num, o.den)
        g2 = _cheap_gcd(o.num, self.den)
        n1 = self.num if g1 is None else self.num.exquo(g1)
        d2 = o.den if g1 is None else o.den.exquo(g1)
        n2 = o.num if g2 is None else o.num.exquo(g2)
        d1 = self.den if g2 is None else self.den.exquo(g2)
        return RatFunc(n1 * n2, d1 * d2, normalize=False)._fix_sign()

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc._raw(self.den, self.num)._fix_sign()

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num**n, self.den**n)._fix_sign()

    def _fix_sign(self) -> "RatFunc":
        """Scale so the denominator is integer-primitive with positive lead."""
        den = self.den
        c = den.content()
        if den.leading_coefficient() < 0:
            c = -c
        if c == 1:
            return self
        inv = 1 / c
        return RatFunc._raw(self.num * inv, den * inv)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ratfunc_eq(self, o)

    def __hash__(self):
        # lowest terms + fixed normalization make this canonical
        return hash((self.num, self.den))

    # -- evaluation -------------------------------------------------------------

    def evaluate(self, bindings: Mapping[str, object]) -> Fraction | int:
        """Exact value at a point; raises ``ZeroDivisionError`` at a pole."""
        d = self.den.evaluate(bindings)
        n = self.num.evaluate(bindings)
        if d == 0:
            raise ZeroDivisionError(f"pole: denominator {self.den} vanishes at {dict(bindings)}")
        v = Fraction(n) / d
        return v.numerator if v.denominator == 1 else v

    def subs(self, mapping: Mapping[str, object]) -> "RatFunc":
        """Substitute rational functions, polynomials or rationals for variables."""
        polys = {}
        rats = {}
        for k, v in mapping.items():
            r = as_ratfunc(v)
            if r.den.is_constant:
                polys[k] = r.num / r.den.constant_value()
            else:
                rats[k] = r
        num, den = self.num.subs(polys), self.den.subs(polys)
        out = RatFunc(num, den)
        if rats:
            out = _subs_rational(out, rats)
        return out

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc('{self}')"


def _subs_rational(r: RatFunc, rats: Mapping[str, RatFunc]) -> RatFunc:
    from .poly import unpack, var_index, var_name

    idx = {var_index(k): v for k, v in rats.items()}

    def sub_poly(p: Poly) -> RatFunc:
        total = RatFunc(0)
        for m, c in p.terms.items():
            term = RatFunc(c)
            for i, e in unpack(m):
                if i in idx:
                    term = term * idx[i] ** e
                else:
                    term = term * var(var_name(i)) ** e
            total = total + term
        return total

    return sub_poly(r.num) / sub_poly(r.den)


def _cheap_gcd(p: Poly, q: Poly) -> Poly | None:
    """gcd for cross-cancellation, ``None`` when it is evidently 1."""
    if p.is_constant or q.is_constant:
        return None
    if not (p.variable_indices() & q.variable_indices()):
        return None
    g = poly_gcd(p, q)
    return None if g.is_constant else g


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero:
        return Poly(0), Poly(1)
    if den.is_constant:
        c = den.constant_value()
        return (num if c == 1 else num / c), Poly(1)
    if num.is_constant:
        g = None
    elif den.is_monomial:
        m = mono_min(num.monomial_content(), next(iter(den.terms)))
        num, den = _unshift(num, m), _unshift(den, m)
        g = None
    else:
        g = poly_gcd(num, den)
        if g.is_constant:
            g = None
    if g is not None:
        num = num.exquo(g)
        den = den.exquo(g)
    c = den.content()
    if den.leading_coefficient() < 0:
        c = -c
    if c != 1:
        inv = 1 / c
        num = num * inv
        den = den * inv
    return num, den


def ratfunc_eq(x: RatFunc, y: RatFunc) -> bool:
    """``x == y`` decided by ``x.num * y.den == y.num * x.den``."""
    if x.den == y.den:
        return x.num == y.num
    return x.num * y.den == y.num * x.den


def as_ratfunc(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc._raw(value, Poly(1))
    if isinstance(value, str):
        from .text import parse

        return parse(value)
    return RatFunc(value)
