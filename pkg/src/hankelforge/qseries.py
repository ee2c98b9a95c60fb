"""q-shifted factorials, q-binomials and terminating hypergeometric sums.

Everything stays inside the field of rational functions in ``q, a, b``.
Square-root bases never appear: a conjugate pair ``(x;q)_k (-x;q)_k`` is
carried as ``(x^2;q^2)_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Union

from .algebra import Poly, RatFunc, as_ratfunc, var

__all__ = [
    "q",
    "a",
    "b",
    "qpoch",
    "qpoch_poly",
    "qbinom",
    "moment_mu",
    "poch",
    "f21_terminating",
    "Param",
    "HypSpec",
    "phi_terminating",
    "dougall_spec",
    "q_dougall_sides",
    "addition_formula_sides",
    "quadratic_transform_sides",
    "quadratic_transform_check",
    "burchnall_chaundy_sides",
    "burchnall_chaundy_check",
    "NonTerminating",
    "PoleInRange",
]

q = var("q")
a = var("a")
b = var("b")

Scalar = Union[int, Fraction]


class NonTerminating(ValueError):
    """No parameter forces the series to stop."""


class PoleInRange(ZeroDivisionError):
    """A denominator factor vanishes inside the summation range."""


# -- q-shifted factorials ------------------------------------------------------


def qpoch_poly(x: Poly, n: int, step: Poly | None = None) -> Poly:
    """``(x; step)_n`` for polynomial ``x`` as a :class:`Poly`."""
    if n < 0:
        raise ValueError(f"q-shifted factorial length must be nonnegative, got {n}")
    step = q if step is None else step
    out = Poly(1)
    factor = x
    for _ in range(n):
        out = out * (1 - factor)
        factor = factor * step
    return out


def qpoch(x, n: int, step: Poly | None = None) -> RatFunc:
    """``(x; step)_n = prod_{k<n} (1 - x*step^k)``; ``step`` defaults to ``q``."""
    r = as_ratfunc(x)
    if r.is_polynomial:
        return RatFunc(qpoch_poly(r.as_poly(), n, step))
    if n < 0:
        raise ValueError(f"q-shifted factorial length must be nonnegative, got {n}")
    step = q if step is None else step
    out = RatFunc(1)
    for k in range(n):
        out = out * (1 - r * step**k)
    return out


@lru_cache(maxsize=None)
def _qfact(n: int) -> Poly:
    return qpoch_poly(q, n)


@lru_cache(maxsize=None)
def qbinom(m: int, k: int) -> Poly:
    """Gaussian binomial ``[m, k]_q``; zero outside ``0 <= k <= m``."""
    if k < 0 or m < 0 or k > m:
        return Poly(0)
    return _qfact(m).exquo(_qfact(k) * _qfact(m - k))


@lru_cache(maxsize=None)
def moment_mu(n: int) -> RatFunc:
    """``(aq;q)_n / (abq^2;q)_n``."""
    if n < 0:
        raise ValueError(f"moment index must be nonnegative, got {n}")
    return RatFunc(qpoch_poly(a * q, n), qpoch_poly(a * b * q**2, n))


# -- ordinary hypergeometric -------------------------------------------------------


def poch(x: Scalar, k: int) -> Fraction:
    """Rising factorial ``(x)_k``."""
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


def _nonpos_int(x: Fraction) -> int | None:
    x = Fraction(x)
    if x.denominator == 1 and x <= 0:
        return -x.numerator
    return None


def f21_terminating(alpha: Scalar, beta: Scalar, gamma: Scalar, x: Scalar) -> Fraction:
    """Exact value of a terminating ``2F1(alpha, beta; gamma; x)``."""
    alpha, beta, gamma, x = (Fraction(v) for v in (alpha, beta, gamma, x))
    stops = [m for m in (_nonpos_int(alpha), _nonpos_int(beta)) if m is not None]
    if not stops:
        raise NonTerminating(f"2F1({alpha}, {beta}; {gamma}; {x}) does not terminate")
    m = min(stops)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(m + 1):
        total += term
        if k == m:
            break
        den = (k + 1) * (gamma + k)
        if den == 0:
            raise PoleInRange(f"(gamma)_k vanishes at k={k + 1} for gamma={gamma}")
        term = term * (alpha + k) * (beta + k) * x / den
    return total


# -- basic hypergeometric ----------------------------------------------------------


@dataclass(frozen=True)
class Param:
    """One factor ``(base; step)_k`` of a basic hypergeometric term.

    A conjugate pair ``(x, -x; q)_k`` is ``Param(x**2, q**2)``.
    """

    base: RatFunc
    step: Poly = field(default_factory=lambda: q)

    @classmethod
    def of(cls, value) -> "Param":
        if isinstance(value, Param):
            return value
        return cls(as_ratfunc(value))

    def factor(self, k: int) -> RatFunc:
        """The ``k``-th factor ``1 - base*step^k``."""
        return 1 - self.base * self.step**k

    def terminating_index(self) -> int | None:
        """``m`` when ``base = q^-m`` with step ``q``, else ``None``."""
        if self.step != q:
            return None
        base = self.base
        if base == 1:
            return 0
        if base.num == 1 and base.den.is_monomial:
            ((exps, c),) = list(base.den.items())
            if c == 1 and set(exps) == {"q"}:
                return exps["q"]
        return None


@dataclass(frozen=True)
class HypSpec:
    """``sum_k (numer)_k / ((q)_k (denom)_k) * arg^k`` cut at ``terms``."""

    numer: tuple[Param, ...]
    denom: tuple[Param, ...]
    arg: RatFunc
    terms: int

    @classmethod
    def build(cls, numer: Sequence, denom: Sequence, arg) -> "HypSpec":
        num = tuple(Param.of(x) for x in numer)
        den = tuple(Param.of(x) for x in denom)
        stops = [m for m in (p.terminating_index() for p in num) if m is not None]
        if not stops:
            raise NonTerminating("no numerator parameter of the form q^-m")
        return cls(num, den, as_ratfunc(arg), min(stops))


def phi_terminating(spec: HypSpec) -> RatFunc:
    """Exact value of the terminating basic hypergeometric series."""
    total = RatFunc(1)
    term = RatFunc(1)
    for k in range(spec.terms):
        num = RatFunc(1)
        for p in spec.numer:
            num = num * p.factor(k)
        den = 1 - q ** (k + 1)
        for p in spec.denom:
            den = den * p.factor(k)
        den = as_ratfunc(den)
        if den.is_zero:
            raise PoleInRange(f"denominator factor vanishes at k={k + 1}")
        term = term * num * spec.arg / den
        total = total + term
    return total


def dougall_spec(i: int, j: int) -> HypSpec:
    """The terminating 6phi5 whose value is ``mu_{i+j} / (mu_i mu_j)``."""
    ab = a * b
    return HypSpec.build(
        numer=[ab * q, Param(as_ratfunc(ab * q**3), q**2), b * q,
               RatFunc(1, q**i), RatFunc(1, q**j)],
        denom=[Param(as_ratfunc(ab * q), q**2), a * q, ab * q ** (i + 2), ab * q ** (j + 2)],
        arg=a * q ** (i + j + 1),
    )


def q_dougall_sides(i: int, j: int) -> tuple[RatFunc, RatFunc]:
    """Both sides of the q-binomial form of the terminating q-Dougall sum."""
    ab = a * b
    lhs = RatFunc(0)
    for k in range(min(i, j) + 1):
        num = (a**k * q ** (k * k) * qbinom(i, k) * qbinom(j, k)
               * qpoch_poly(q, k) * qpoch_poly(ab * q, k) * qpoch_poly(b * q, k)
               * (1 - ab * q ** (2 * k + 1)))
        den = ((1 - ab * q) * qpoch_poly(a * q, k) * qpoch_poly(ab * q ** (i + 2), k)
               * qpoch_poly(ab * q ** (j + 2), k))
        lhs = lhs + RatFunc(num, den)
    rhs = moment_mu(i + j) / (moment_mu(i) * moment_mu(j))
    return lhs, rhs


# -- the 2F1 apparatus behind the Motzkin LU factorization ---------------------------


def _motzkin_f21(k: int, i: int) -> Fraction:
    return f21_terminating(Fraction(k - i + 1, 2), Fraction(k - i, 2), k + 2, 4)


def addition_formula_sides(i: int, j: int) -> tuple[Fraction, Fraction]:
    """The two sides of the 2F1 addition formula at argument 4."""
    lhs = Fraction(0)
    for k in range(min(i, j) + 1):
        lhs += comb(i, k) * comb(j, k) * _motzkin_f21(k, i) * _motzkin_f21(k, j)
    rhs = f21_terminating(Fraction(1 - i - j, 2), Fraction(-i - j, 2), 2, 4)
    return lhs, rhs


def quadratic_transform_sides(a_int: int, b: Scalar, z: Scalar) -> tuple[Fraction, Fraction]:
    """``(1-z)^a 2F1(a,b;2b;2z)`` and ``2F1(a/2,(a+1)/2;b+1/2;z^2/(1-z)^2)``."""
    if a_int > 0:
        raise ValueError("a must be a nonpositive integer")
    b, z = Fraction(b), Fraction(z)
    if z == 1:
        raise ValueError("z = 1 is excluded")
    lhs = (1 - z) ** a_int * f21_terminating(a_int, b, 2 * b, 2 * z)
    rhs = f21_terminating(Fraction(a_int, 2), Fraction(a_int + 1, 2), b + Fraction(1, 2),
                          z * z / ((1 - z) * (1 - z)))
    return lhs, rhs


def quadratic_transform_check(a_int: int, b: Scalar, z: Scalar) -> bool:
    lhs, rhs = quadratic_transform_sides(a_int, b, z)
    return lhs == rhs


def burchnall_chaundy_sides(a_: Scalar, b_: Scalar, c: Scalar, d: Scalar,
                            x: Scalar) -> tuple[Fraction, Fraction]:
    """Both sides of the Burchnall-Chaundy expansion; ``d`` must be a nonpositive integer."""
    a_, b_, c, d, x = (Fraction(v) for v in (a_, b_, c, d, x))
    stop = _nonpos_int(d)
    if stop is None:
        raise NonTerminating("d must be a nonpositive integer")
    lhs = f21_terminating(c - a_, c - b_, c, x)
    rhs = Fraction(0)
    for k in range(stop + 1):
        coef = poch(c - a_, k) * poch(a_, k) * poch(d, k) * poch(c - b_ - d, k)
        if coef == 0:
            continue
        den = poch(1, k) * poch(c + k - 1, k) * poch(c, 2 * k)
        if den == 0:
            raise PoleInRange(f"denominator vanishes at k={k}")
        rhs += (coef / den * x ** (2 * k)
                * f21_terminating(c - a_ + k, c - b_ - d + k, c + 2 * k, x)
                * f21_terminating(c - a_ + k, d + k, c + 2 * k, x))
    return lhs, rhs


def burchnall_chaundy_check(i: int, j: int) -> bool:
    """The specialization ``a=3/2, b=3+i+j, c=3, d=-j, x=4``."""
    lhs, rhs = burchnall_chaundy_sides(Fraction(3, 2), 3 + i + j, 3, -j, 4)
    return lhs == rhs
