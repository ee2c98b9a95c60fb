"""Closed-form right-hand sides of the determinant identities, evaluated exactly.

Printed formulas are reproduced as printed.  Where a printed formula
disagrees with the determinant, an ``*_amended`` evaluator gives the
repaired form so both can be reported side by side.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from .algebra import Poly, RatFunc, var
from .linalg import ExactMatrix, Variant, det_exact, q_schroder_matrix
from .qseries import a, b, poch, q, qpoch_poly

__all__ = [
    "IdentityId",
    "rhs_q_catalan_det",
    "rhs_q_general",
    "rhs_q_kratt",
    "rhs_kratt_classical",
    "rhs_classical",
    "rhs_classical_amended",
    "rhs_classical_limit",
    "rhs_q_schroder",
    "rhs_s3_at_1",
    "kratt_lemma_sides",
    "kratt_symbols",
    "q_schroder_det",
    "lemma_sides",
    "LEMMAS",
]


class IdentityId(Enum):
    Q_CATALAN_DET = "q-catalan-det"
    Q_GENERAL_HANKEL = "q-general-hankel"
    Q_KRATT = "q-kratt"
    KRATT_CLASSICAL = "kratt-classical"
    CATALAN_T = "catalan-t"
    B_T = "b-t"
    D_T = "d-t"
    AIGNER_M0 = "aigner-m0"
    AIGNER_M1 = "aigner-m1"
    SCHRODER_01 = "schroder-01"
    SCHRODER_2 = "schroder-2"
    Q_SCHRODER_01 = "q-schroder-01"
    Q_SCHRODER_2 = "q-schroder-2"
    Q_SCHRODER_3_AT_1 = "q-schroder-3-at-1"
    DELANNOY_0 = "delannoy-0"
    DELANNOY_1 = "delannoy-1"
    DELANNOY_2 = "delannoy-2"
    KRATT_LEMMA = "kratt-lemma"
    VIENNOT_T = "viennot-t"


def _need_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")


# -- q-moment determinants ---------------------------------------------------------------


def rhs_q_general(n: int, t: int) -> RatFunc:
    """``det(mu_{i+j+t})`` in closed form; ``t = 0`` is the q-Catalan case."""
    _need_positive(n)
    if t < 0:
        raise ValueError("t must be nonnegative")
    ab = a * b
    e = n * (n - 1) * (2 * n - 1) // 6 + n * (n - 1) * t // 2
    num = a ** (n * (n - 1) // 2) * q**e * qpoch_poly(a * q, t) ** n
    den = qpoch_poly(ab * q**2, t) ** n
    for k in range(1, n + 1):
        m = n - k
        num = num * qpoch_poly(q, m) * qpoch_poly(a * q ** (t + 1), m) * qpoch_poly(b * q, m)
        den = den * qpoch_poly(ab * q ** (m + t + 1), m) * qpoch_poly(ab * q ** (t + 2), 2 * m)
    return RatFunc(num, den)


def rhs_q_catalan_det(n: int) -> RatFunc:
    return rhs_q_general(n, 0)


def rhs_q_kratt(n: int, ks: Sequence[int]) -> RatFunc:
    """``det(mu_{k_i+j})`` in closed form, difference product taken as printed."""
    _need_positive(n)
    ks = list(ks)
    if len(ks) != n:
        raise ValueError(f"expected {n} exponents, got {len(ks)}")
    if any(k < 0 for k in ks):
        raise ValueError("exponents must be nonnegative")
    ab = a * b
    num = a ** comb(n, 2) * q ** comb(n + 1, 3)
    den = Poly(1)
    for i, k in enumerate(ks):
        num = num * qpoch_poly(a * q, k) * qpoch_poly(b * q, i)
        den = den * qpoch_poly(ab * q**2, k + n - 1)
    for i in range(n):
        for j in range(i + 1, n):
            num = num * (q ** ks[i] - q ** ks[j])
    return RatFunc(num, den)


def rhs_kratt_classical(n: int, ks: Sequence[int]) -> int | Fraction:
    """Integer closed form for ``det(C_{k_i+j})``."""
    _need_positive(n)
    ks = list(ks)
    if len(ks) != n:
        raise ValueError(f"expected {n} exponents, got {len(ks)}")
    out = Fraction(prod(ks[j] - ks[i] for i in range(n) for j in range(i + 1, n)))
    for i, k in enumerate(ks):
        out *= Fraction(factorial(i + n) * factorial(2 * k),
                        factorial(2 * i) * factorial(k) * factorial(k + n))
    return _int_if_whole(out)


# -- classical integer evaluations --------------------------------------------------------


def _int_if_whole(x: Fraction) -> int | Fraction:
    return x.numerator if x.denominator == 1 else x


def _delannoy_rhs(tag: IdentityId, n: int) -> int:
    c1, c2, c3 = comb(n + 1, 2), comb(n + 2, 2), comb(n + 3, 2)
    if tag is IdentityId.DELANNOY_0:
        return 2 ** (c1 - 1)
    if tag is IdentityId.DELANNOY_1:
        return 2 ** (c2 - 2) + 2 ** (c1 - 1)
    return 2 ** (c3 - 3) + (2 * n + 1) * 2 ** (c2 - 2) - 2 ** (c1 - 1)


def rhs_classical(tag: IdentityId | str, n: int, t: int = 0) -> int | Fraction:
    """Printed closed form of an integer Hankel identity.

    ``t`` is ignored by tags that fix the shift.  A non-integral value is
    returned as a ``Fraction`` so the caller sees the formula's output
    unchanged.
    """
    tag = IdentityId(tag)
    _need_positive(n)
    if tag is IdentityId.CATALAN_T:
        out = Fraction(1)
        for i in range(1, t):
            for j in range(i, t):
                out *= Fraction(i + j + 2 * n, i + j)
        return _int_if_whole(out)
    if tag is IdentityId.B_T:
        out = Fraction(1)
        for i in range(1, t):
            for j in range(i, t):
                out *= Fraction(i + j - 1 + 2 * n, i + j - 1)
        return _int_if_whole(out)
    if tag is IdentityId.D_T:
        out = Fraction(2**n)
        for i in range(1, t):
            for j in range(i + 1, t):
                out *= Fraction(i + j + 2 * n, i + j)
        return _int_if_whole(out)
    if tag is IdentityId.AIGNER_M0:
        return 1
    if tag is IdentityId.AIGNER_M1:
        return {0: 1, 1: 1, 2: 0, 5: 0, 3: -1, 4: -1}[n % 6]
    if tag is IdentityId.SCHRODER_01:
        if t not in (0, 1):
            raise ValueError("SCHRODER_01 covers t = 0 and t = 1")
        return 2 ** comb(n + t, 2)
    if tag is IdentityId.SCHRODER_2:
        return 2 ** comb(n + 1, 2) * (2 ** (n + 1) - 1)
    if tag in (IdentityId.DELANNOY_0, IdentityId.DELANNOY_1, IdentityId.DELANNOY_2):
        return _delannoy_rhs(tag, n)
    raise ValueError(f"{tag.value} has no classical integer form")


def rhs_classical_amended(tag: IdentityId | str, n: int, t: int) -> int | Fraction:
    """B and D shifted determinants with the product ranges repaired.

    ``B``: product over ``1 <= i <= j <= t``.  ``D``: product over
    ``0 <= i < j <= t-1``, and ``2^(n-1)`` at ``t = 0``.
    """
    tag = IdentityId(tag)
    _need_positive(n)
    out = Fraction(1)
    if tag is IdentityId.B_T:
        for i in range(1, t + 1):
            for j in range(i, t + 1):
                out *= Fraction(i + j - 1 + 2 * n, i + j - 1)
        return _int_if_whole(out)
    if tag is IdentityId.D_T:
        if t == 0:
            return 2 ** (n - 1)
        out = Fraction(2**n)
        for i in range(0, t):
            for j in range(i + 1, t):
                out *= Fraction(i + j + 2 * n, i + j)
        return _int_if_whole(out)
    return rhs_classical(tag, n, t)


_LIMIT_PARAMS = {
    IdentityId.CATALAN_T: (Fraction(-1, 2), Fraction(1, 2)),
    IdentityId.B_T: (Fraction(1, 2), Fraction(-1, 2)),
    IdentityId.D_T: (Fraction(-1, 2), Fraction(-1, 2)),
}


def rhs_classical_limit(tag: IdentityId | str, n: int, t: int) -> int | Fraction:
    """The ``q -> 1`` limit of the general q-moment determinant, rescaled by ``2^(2n(n+t-1))``."""
    tag = IdentityId(tag)
    _need_positive(n)
    if tag not in _LIMIT_PARAMS:
        raise ValueError(f"{tag.value} is not a Catalan-type identity")
    al, be = _LIMIT_PARAMS[tag]
    nu_t = poch(al + 1, t) / poch(al + be + 2, t)
    out = Fraction(2) ** (2 * n * (n + t - 1)) * nu_t**n
    for k in range(1, n + 1):
        m = n - k
        out *= (factorial(m) * poch(al + t + 1, m) * poch(be + 1, m)
                / (poch(al + be + t + m + 1, m) * poch(al + be + t + 2, 2 * m)))
    return _int_if_whole(out)


# -- q-Schroder --------------------------------------------------------------------------


def _factor(k: int) -> Poly:
    return q ** (2 * k - 1) + 1


def rhs_q_schroder(n: int, t: int) -> RatFunc:
    """Closed form of ``det S^(t)_n(q)`` for ``t`` in ``{0, 1, 2}``."""
    _need_positive(n)
    if t == 0:
        return RatFunc(prod((_factor(k) ** (n - k) for k in range(1, n)), start=Poly(1)))
    if t == 1:
        return rhs_q_schroder(n + 1, 0)
    if t == 2:
        head = prod((_factor(k) ** (n + 1 - k) for k in range(1, n + 1)), start=Poly(1))
        tail = prod((_factor(k) for k in range(1, n + 2)), start=Poly(1)) - 1
        return RatFunc(head * tail, q)
    raise ValueError("t must be 0, 1 or 2")


def rhs_s3_at_1(n: int) -> int:
    _need_positive(n)
    return 2 ** comb(n + 3, 2) - (2 * n + 3) * 2 ** comb(n + 2, 2) - 2 ** comb(n + 1, 2)


@lru_cache(maxsize=None)
def q_schroder_det(n: int, t: int, variant: str = "plain") -> RatFunc:
    """Memoized ``det`` of a q-Schroder matrix; size zero gives 1."""
    if n == 0:
        return RatFunc(1)
    return det_exact(q_schroder_matrix(n, t, Variant(variant)))


def _sr1(n: int) -> list[tuple[RatFunc, RatFunc]]:
    out = []
    for t in range(3):
        out.append((q_schroder_det(n, t, "hat"),
                     q ** (n * (n - 1) * (2 * n + 3 * t - 4) // 3) * q_schroder_det(n, t)))
    return out


def _sr2(n: int) -> list[tuple[RatFunc, RatFunc]]:
    out = []
    for t in range(3):
        e = n * (4 * n * n + 3 * (2 * t + 1) * n + 3 * t * t + 3 * t - 1) // 3
        out.append((q_schroder_det(n, t, "tilde"), q_schroder_det(n, t) / q**e))
    return out


def _h1(n: int) -> list[tuple[RatFunc, RatFunc]]:
    return [(q_schroder_det(n, 0, "hat"), q ** ((n - 1) * (n - 2)) * q_schroder_det(n - 1, 1, "hat"))]


def _h2(n: int) -> list[tuple[RatFunc, RatFunc]]:
    rhs = (q ** (n * n - n + 1) * q_schroder_det(n - 1, 2, "hat")
           + q ** (2 * (n - 1) ** 2) * q_schroder_det(n - 1, 1, "hat"))
    return [(q_schroder_det(n, 1, "hat"), rhs)]


def _t1(n: int) -> list[tuple[RatFunc, RatFunc]]:
    lhs = q_schroder_det(n, 0, "tilde") * q_schroder_det(n - 2, 2, "tilde")
    rhs = (q_schroder_det(n - 1, 0, "tilde") * q_schroder_det(n - 1, 2, "tilde")
           - q_schroder_det(n - 1, 1, "tilde") ** 2)
    return [(lhs, rhs)]


def _esr1(n: int) -> list[tuple[RatFunc, RatFunc]]:
    return [(q_schroder_det(n, 1), q * q_schroder_det(n - 1, 2) + q_schroder_det(n - 1, 1))]


def _esr2(n: int) -> list[tuple[RatFunc, RatFunc]]:
    lhs = q_schroder_det(n, 0) * q_schroder_det(n - 2, 2)
    rhs = (q_schroder_det(n - 1, 0) * q_schroder_det(n - 1, 2)
           - q ** (2 * (n - 1)) * q_schroder_det(n - 1, 1) ** 2)
    return [(lhs, rhs)]


def _dj(n: int) -> list[tuple[RatFunc, RatFunc]]:
    def d(m: int, t: int) -> RatFunc:
        return RatFunc(q_schroder_det(m, t).evaluate({"q": 1}))
    return [(d(n + 1, 1) * d(n - 1, 3), d(n, 1) * d(n, 3) - d(n, 2) ** 2)]


# name -> (evaluator, smallest valid n)
LEMMAS = {
    "hat-scaling": (_sr1, 1),
    "tilde-scaling": (_sr2, 1),
    "hat-shift": (_h1, 2),
    "hat-split": (_h2, 2),
    "tilde-condensation": (_t1, 3),
    "plain-recurrence": (_esr1, 2),
    "plain-condensation": (_esr2, 3),
    "condensation-at-1": (_dj, 2),
}


def lemma_sides(name: str, n: int) -> list[tuple[RatFunc, RatFunc]]:
    """Both sides of a q-Schroder lemma at ``n``, one pair per shift it covers."""
    if name not in LEMMAS:
        raise ValueError(f"unknown lemma {name!r}")
    fn, lo = LEMMAS[name]
    if n < lo:
        raise ValueError(f"{name} needs n >= {lo}")
    return fn(n)


# -- Krattenthaler's lemma ----------------------------------------------------------------


def kratt_lemma_sides(X: Sequence, A: Sequence, B: Sequence) -> tuple[RatFunc, RatFunc]:
    """Determinant and product sides; ``A`` and ``B`` hold ``A_1..A_(n-1)``, ``B_1..B_(n-1)``."""
    n = len(X)
    if len(A) != n - 1 or len(B) != n - 1:
        raise ValueError("A and B need exactly len(X) - 1 entries")
    X = [RatFunc(x) if not isinstance(x, RatFunc) else x for x in X]
    A = [RatFunc(x) if not isinstance(x, RatFunc) else x for x in A]
    B = [RatFunc(x) if not isinstance(x, RatFunc) else x for x in B]

    def entry(i: int, j: int) -> RatFunc:
        out = RatFunc(1)
        for l in range(1, j + 1):
            out = out * (X[i] + B[l - 1])
        for l in range(j + 1, n):
            out = out * (X[i] + A[l - 1])
        return out

    lhs = det_exact(ExactMatrix.build(n, n, entry)) if n else RatFunc(1)
    rhs = RatFunc(1)
    for i in range(n):
        for j in range(i + 1, n):
            rhs = rhs * (X[i] - X[j])
    for i in range(1, n):
        for j in range(i, n):
            rhs = rhs * (B[i - 1] - A[j - 1])
    return lhs, rhs


def kratt_symbols(n: int) -> tuple[list[Poly], list[Poly], list[Poly]]:
    """Fresh indeterminates ``X_0..X_(n-1)``, ``A_1..A_(n-1)``, ``B_1..B_(n-1)``."""
    return ([var(f"X{i}") for i in range(n)],
            [var(f"A{i}") for i in range(1, n)],
            [var(f"B{i}") for i in range(1, n)])
