"""Hypothesis strategies and property bodies shared by the unit and acceptance suites."""

from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from hankelforge.algebra import Poly, RatFunc, parse, poly_gcd, serialize
from hankelforge.linalg import ExactMatrix, desnanot_jacobi_sides, det_cofactor, det_exact

VARS = ("q", "a", "b", "z")

coeffs = st.one_of(
    st.integers(-9, 9),
    st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)),
)
monomials = st.dictionaries(st.sampled_from(VARS), st.integers(0, 3), max_size=3)


@st.composite
def polys(draw, max_terms: int = 5) -> Poly:
    terms = draw(st.lists(st.tuples(monomials, coeffs), max_size=max_terms))
    return Poly.from_exponents(terms)


@st.composite
def nonzero_polys(draw, max_terms: int = 4) -> Poly:
    p = draw(polys(max_terms))
    return p if not p.is_zero else Poly(draw(st.integers(1, 7)))


@st.composite
def ratfuncs(draw) -> RatFunc:
    return RatFunc(draw(polys(4)), draw(nonzero_polys(3)))


@st.composite
def int_matrices(draw, lo: int = 3, hi: int = 6) -> ExactMatrix:
    n = draw(st.integers(lo, hi))
    cells = draw(st.lists(st.integers(-20, 20), min_size=n * n, max_size=n * n))
    return ExactMatrix([[cells[i * n + j] for j in range(n)] for i in range(n)])


@st.composite
def symbolic_matrices(draw) -> ExactMatrix:
    n = draw(st.integers(3, 4))
    cells = draw(st.lists(polys(2), min_size=n * n, max_size=n * n))
    return ExactMatrix([[cells[i * n + j] for j in range(n)] for i in range(n)])


def to_sympy(p: Poly):
    return sympy.sympify(str(p).replace("^", "**"), locals={v: sympy.Symbol(v) for v in VARS})


# -- property bodies: each raises AssertionError on failure -----------------------------------------


def check_ring_axioms(x: Poly, y: Poly, z: Poly) -> None:
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == Poly(0)
    assert x * 1 == x and x + 0 == x


def check_ratfunc_field(x: RatFunc, y: RatFunc) -> None:
    assert x + y == y + x
    assert (x + y) - y == x
    if not y.is_zero:
        assert (x / y) * y == x
        assert y * y.inverse() == 1


def check_gcd(f: Poly, g: Poly, h: Poly) -> None:
    """``gcd(f h, g h)`` divides both inputs and agrees with sympy up to a unit."""
    A, B = f * h, g * h
    if A.is_zero and B.is_zero:
        try:
            poly_gcd(A, B)
        except ValueError:
            return
        raise AssertionError("gcd(0, 0) must raise")
    d = poly_gcd(A, B)
    assert A.try_exquo(d) is not None
    assert B.try_exquo(d) is not None
    assert h.is_zero or d.try_exquo(h) is not None  # the planted factor survives
    ref = sympy.gcd(to_sympy(A), to_sympy(B))
    ratio = sympy.cancel(to_sympy(d) / ref)
    assert ratio.is_number and ratio != 0


def check_roundtrip(x: RatFunc) -> None:
    text = serialize(x)
    back = parse(text)
    assert back == x
    assert serialize(back) == text


def check_desnanot_jacobi(M: ExactMatrix) -> None:
    lhs, rhs = desnanot_jacobi_sides(M)
    assert lhs == rhs
    assert det_exact(M) == det_cofactor(M)
