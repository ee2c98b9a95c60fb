"""Exact sparse polynomial and rational-function arithmetic."""

from .gcd import cofactors, poly_gcd, poly_lcm
from .poly import NotDivisible, Poly, const, var
from .ratfunc import RatFunc, as_ratfunc, ratfunc_eq
from .series import TruncatedSeries, series_from
from .text import ParseError, parse, parse_poly, serialize

__all__ = [
    "Poly",
    "RatFunc",
    "TruncatedSeries",
    "NotDivisible",
    "ParseError",
    "var",
    "const",
    "poly_mul",
    "poly_gcd",
    "poly_lcm",
    "cofactors",
    "ratfunc_eq",
    "as_ratfunc",
    "evaluate",
    "parse",
    "parse_poly",
    "serialize",
    "series_from",
]


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def evaluate(p, bindings):
    """Exact value of a Poly or RatFunc at a point."""
    return as_ratfunc(p).evaluate(bindings)
