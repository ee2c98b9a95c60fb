"""Multivariate polynomial gcd over the integers.

The fast path is the heuristic gcd of Char, Geddes and Gonnet: evaluate one
variable at a large integer, recurse, and rebuild the candidate from its
balanced base-``xi`` digits.  A candidate is accepted only after exact
division of both inputs.  When six evaluation points fail, the recursive
primitive PRS takes over, which always succeeds.
"""

from __future__ import annotations

from functools import reduce
from math import gcd as igcd, isqrt

from .poly import FIELD_BITS, FIELD_MASK, Poly, mono_min

__all__ = ["poly_gcd", "poly_lcm", "cofactors"]

_HEU_ATTEMPTS = 6


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor, integer-primitive with positive first coefficient.

    ``p`` and ``q`` may have rational coefficients; the result is determined
    up to the normalization of :meth:`Poly.primitive`.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero:
        return q.primitive()
    if q.is_zero:
        return p.primitive()
    f = p.primitive()
    g = q.primitive()
    return _gcd_primitive(f, g).primitive()


def poly_lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero or q.is_zero:
        return Poly(0)
    g = poly_gcd(p, q)
    return (p.primitive().exquo(g) * q.primitive()).primitive()


def cofactors(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """``(g, p/g, q/g)`` with ``g = poly_gcd(p, q)``."""
    g = poly_gcd(p, q)
    return g, p.exquo(g), q.exquo(g)


def _unshift(p: Poly, m: int) -> Poly:
    if not m:
        return p
    return Poly._from_terms({k - m: c for k, c in p.terms.items()})


def _int_content(p: Poly) -> int:
    return reduce(igcd, p.terms.values(), 0)


def _max_norm(p: Poly) -> int:
    return max(abs(c) for c in p.terms.values())


def _gcd_primitive(f: Poly, g: Poly) -> Poly:
    """gcd of two nonzero integer-primitive polynomials."""
    if f.is_constant or g.is_constant:
        return Poly(1)
    if f == g or f == -g:
        return f
    mf = f.monomial_content()
    mg = g.monomial_content()
    common = mono_min(mf, mg)
    f = _unshift(f, mf)
    g = _unshift(g, mg)
    mono = Poly._from_terms({common: 1})
    if f.is_constant or g.is_constant:
        return mono
    if not (f.variable_indices() & g.variable_indices()):
        return mono
    if f == g or f == -g:
        return f * mono
    # cheap exact-division check: the smaller one often divides the larger
    small, big = (f, g) if len(f) <= len(g) else (g, f)
    if big.try_exquo(small, integral=True) is not None:
        return small * mono
    h = _heugcd(f, g)
    if h is None:
        h = _prs_gcd(f, g)
    return h * mono


def _zz_gcd(f: Poly, g: Poly) -> Poly:
    """gcd over Z including the integer content (sign not normalized)."""
    if f.is_zero:
        return g
    if g.is_zero:
        return f
    cf = _int_content(f)
    cg = _int_content(g)
    c = igcd(cf, cg)
    if f.is_constant or g.is_constant:
        return Poly(c)
    fp = f if cf == 1 else Poly._from_terms({m: v // cf for m, v in f.terms.items()})
    gp = g if cg == 1 else Poly._from_terms({m: v // cg for m, v in g.terms.items()})
    h = _gcd_primitive(fp, gp)
    return h * c if c != 1 else h


def _evaluate_var(p: Poly, index: int, xi: int) -> Poly:
    shift = FIELD_BITS * index
    mask = FIELD_MASK << shift
    out: dict[int, int] = {}
    powers: dict[int, int] = {}
    for m, c in p.terms.items():
        e = (m & mask) >> shift
        if e:
            pw = powers.get(e)
            if pw is None:
                pw = xi**e
                powers[e] = pw
            c = c * pw
        k = m & ~mask
        out[k] = out.get(k, 0) + c
    return Poly._from_terms({m: c for m, c in out.items() if c})


def _interpolate(h: Poly, index: int, xi: int) -> Poly:
    shift = FIELD_BITS * index
    half = xi // 2
    out: dict[int, int] = {}
    for m, c in h.terms.items():
        e = 0
        while c:
            d = c % xi
            if d > half:
                d -= xi
            c = (c - d) // xi
            if d:
                out[m | (e << shift)] = d
            e += 1
    return Poly._from_terms(out)


def _heugcd(f: Poly, g: Poly) -> Poly | None:
    indices = f.variable_indices() | g.variable_indices()
    x = max(indices)
    fn, gn = _max_norm(f), _max_norm(g)
    bound = 2 * min(fn, gn) + 29
    xi = max(bound, 2)
    for _ in range(_HEU_ATTEMPTS):
        ff = _evaluate_var(f, x, xi)
        gg = _evaluate_var(g, x, xi)
        if not ff.is_zero and not gg.is_zero:
            h = _zz_gcd(ff, gg)
            cand = _interpolate(h, x, xi)
            if not cand.is_zero:
                cand = _primitive_int(cand)
                if (
                    f.try_exquo(cand, integral=True) is not None
                    and g.try_exquo(cand, integral=True) is not None
                ):
                    return cand
            cff = ff.try_exquo(h, integral=True)
            if cff is not None:
                cf = _interpolate(cff, x, xi)
                if not cf.is_zero:
                    cand = f.try_exquo(cf, integral=True)
                    if cand is not None and not cand.is_zero:
                        cand = _primitive_int(cand)
                        if g.try_exquo(cand, integral=True) is not None:
                            return cand
        xi = xi * 73794 * isqrt(isqrt(xi)) // 27011 + 1
    return None


def _primitive_int(p: Poly) -> Poly:
    c = _int_content(p)
    if c == 1 or c == -1:
        return p
    return Poly._from_terms({m: v // c for m, v in p.terms.items()})


# -- primitive PRS fallback -------------------------------------------------


def _content_in(p: Poly, x: int) -> Poly:
    parts = p.coefficients_in(x).values()
    return reduce(_zz_gcd, parts, Poly(0))


def _prem(a: dict[int, Poly], b: dict[int, Poly]) -> dict[int, Poly]:
    """Pseudo-remainder of univariate views ``{power: coefficient}``."""
    db = max(b)
    lcb = b[db]
    r = dict(a)
    da = max(r) if r else -1
    steps = da - db + 1
    done = 0
    while r and max(r) >= db:
        dr = max(r)
        lcr = r[dr]
        nr: dict[int, Poly] = {}
        for e, c in r.items():
            if e != dr:
                nr[e] = c * lcb
        for e, c in b.items():
            if e == db:
                continue
            k = e + dr - db
            v = nr.get(k, Poly(0)) - lcr * c
            if v.is_zero:
                nr.pop(k, None)
            else:
                nr[k] = v
        r = nr
        done += 1
    if steps - done > 0:
        scale = lcb ** (steps - done)
        r = {e: c * scale for e, c in r.items()}
    return r


def _from_view(view: dict[int, Poly], x: int) -> Poly:
    out = Poly(0)
    for e, c in view.items():
        out = out + c.shift(e << (FIELD_BITS * x))
    return out


def _prs_gcd(f: Poly, g: Poly) -> Poly:
    fv, gv = f.variable_indices(), g.variable_indices()
    common = fv & gv
    if not common:
        return Poly(1)
    only_f = fv - gv
    if only_f:
        # g is free of that variable, so the gcd divides every coefficient
        return _primitive_int(_zz_gcd(_content_in(f, min(only_f)), g))
    only_g = gv - fv
    if only_g:
        return _primitive_int(_zz_gcd(f, _content_in(g, min(only_g))))
    x = max(common)
    cf = _content_in(f, x)
    cg = _content_in(g, x)
    c = _primitive_int(_zz_gcd(cf, cg))
    a = f.exquo(cf).coefficients_in(x)
    b = g.exquo(cg).coefficients_in(x)
    if max(a) < max(b):
        a, b = b, a
    while True:
        r = _prem(a, b)
        if not r:
            break
        if max(r) == 0:
            b = {0: Poly(1)}
            break
        rp = _from_view(r, x)
        rp = rp.exquo(_content_in(rp, x))
        a, b = b, rp.coefficients_in(x)
    h = _from_view(b, x)
    if max(b) > 0:
        h = h.exquo(_content_in(h, x))
    return _primitive_int(h * c)
