"""Sparse multivariate polynomials over the rationals.

A monomial is packed into a single Python integer: variable number ``i``
occupies bits ``[32*i, 32*i + 32)``.  Multiplying monomials is then integer
addition, and comparing packed integers is a lexicographic monomial order,
which is what exact division needs.  The top bit of every field is kept
clear so divisibility can be tested with one subtraction.

Coefficients are ``int`` or ``fractions.Fraction``; integral fractions are
demoted to ``int`` so the common all-integer case stays on fast paths.
"""

from __future__ import annotations

import heapq
import threading
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Poly",
    "Coefficient",
    "var",
    "const",
    "var_index",
    "var_name",
    "canonical_key",
    "NotDivisible",
]

Coefficient = Union[int, Fraction]

FIELD_BITS = 32
FIELD_MASK = (1 << FIELD_BITS) - 1
_MAX_EXP = 1 << (FIELD_BITS - 1)

# fixed precedence for the canonical monomial order; everything else sorts
# alphabetically after these
PRECEDENCE = ("q", "a", "b", "t")


class NotDivisible(ArithmeticError):
    """Raised by :meth:`Poly.exquo` when the division leaves a remainder."""


class _VarTable:
    """Append-only interning of variable names to field numbers."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.names: list[str] = []
        self.index: dict[str, int] = {}
        for name in PRECEDENCE:
            self.intern(name)

    def intern(self, name: str) -> int:
        i = self.index.get(name)
        if i is not None:
            return i
        with self._lock:
            i = self.index.get(name)
            if i is None:
                i = len(self.names)
                self.names.append(name)
                self.index[name] = i
            return i


_VARS = _VarTable()


def var_index(name: str) -> int:
    if not name or not (name[0].isalpha() or name[0] == "_") or not all(
        ch.isalnum() or ch == "_" for ch in name
    ):
        raise ValueError(f"invalid variable name {name!r}")
    return _VARS.intern(name)


def var_name(index: int) -> str:
    return _VARS.names[index]


def _rank_table(nvars: int) -> tuple[int, ...]:
    return _rank_cache(nvars)


@lru_cache(maxsize=None)
def _rank_cache(nvars: int) -> tuple[int, ...]:
    names = _VARS.names[:nvars]

    def prec(name: str) -> tuple[int, str]:
        if name in PRECEDENCE:
            return (PRECEDENCE.index(name), "")
        return (len(PRECEDENCE), name)

    order = sorted(range(nvars), key=lambda i: prec(names[i]))
    ranks = [0] * nvars
    for r, i in enumerate(order):
        ranks[i] = r
    return tuple(ranks)


@lru_cache(maxsize=1 << 16)
def unpack(m: int) -> tuple[tuple[int, int], ...]:
    """Decode a packed monomial into ``((var_index, exponent), ...)``."""
    out = []
    i = 0
    while m:
        e = m & FIELD_MASK
        if e:
            out.append((i, e))
        m >>= FIELD_BITS
        i += 1
    return tuple(out)


def pack(exps: Mapping[int, int]) -> int:
    m = 0
    for i, e in exps.items():
        if e < 0:
            raise ValueError("negative exponent in a polynomial monomial")
        if e >= _MAX_EXP:
            raise OverflowError("exponent too large")
        if e:
            m |= e << (FIELD_BITS * i)
    return m


def field(m: int, i: int) -> int:
    return (m >> (FIELD_BITS * i)) & FIELD_MASK


@lru_cache(maxsize=64)
def _guard_mask(nfields: int) -> int:
    g = 0
    for i in range(nfields):
        g |= 1 << (FIELD_BITS * i + FIELD_BITS - 1)
    return g


def mono_divides(d: int, m: int) -> bool:
    """True iff monomial ``d`` divides monomial ``m``."""
    if d > m:
        return False
    g = _guard_mask((m.bit_length() + FIELD_BITS - 1) // FIELD_BITS + 1)
    return ((m | g) - d) & g == g


def mono_degree(m: int) -> int:
    return sum(e for _, e in unpack(m))


def mono_min(m1: int, m2: int) -> int:
    """Componentwise minimum (monomial gcd)."""
    out = 0
    i = 0
    while m1 and m2:
        e = min(m1 & FIELD_MASK, m2 & FIELD_MASK)
        if e:
            out |= e << (FIELD_BITS * i)
        m1 >>= FIELD_BITS
        m2 >>= FIELD_BITS
        i += 1
    return out


def canonical_key(m: int, ranks: tuple[int, ...] | None = None) -> tuple:
    """Sort key for the canonical graded-lex order (q < a < b < t < others).

    Ascending keys give the serialization order; the first listed term is
    the one whose coefficient is kept positive by normalization.
    """
    ex = unpack(m)
    if ranks is None or (ex and ex[-1][0] >= len(ranks)):
        ranks = _rank_table(len(_VARS.names))
    deg = 0
    pairs = []
    for i, e in ex:
        deg += e
        pairs.append((-ranks[i], e))
    pairs.sort(reverse=True)
    return (deg, tuple(pairs))


def _coerce_coeff(c) -> Coefficient:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coerce_coeff(Fraction(c.numerator, c.denominator))
    raise TypeError(f"unsupported coefficient {c!r}")


def _demote(c: Coefficient) -> Coefficient:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Immutable sparse polynomial with exact rational coefficients.

    Build them with :func:`var` and :func:`const` and ordinary operators::

        >>> q, a = var("q"), var("a")
        >>> str((1 - a * q) * (1 - a * q**2))
        '1 - a*q - a*q^2 + a^2*q^3'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Poly):
            self._terms = value._terms
        elif isinstance(value, dict):
            # internal: packed monomial -> nonzero coefficient
            self._terms = value
        else:
            c = _coerce_coeff(value)
            self._terms = {0: c} if c else {}
        self._hash = None

    @classmethod
    def _from_terms(cls, terms: dict) -> "Poly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def from_exponents(cls, items: Iterable[tuple[Mapping[str, int], object]]) -> "Poly":
        """Build from ``[({"q": 2, "a": 1}, coeff), ...]``."""
        terms: dict[int, Coefficient] = {}
        for exps, c in items:
            m = pack({var_index(k): e for k, e in exps.items()})
            terms[m] = terms.get(m, 0) + _coerce_coeff(c)
        return cls._from_terms({m: _demote(c) for m, c in terms.items() if c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, Coefficient]:
        return self._terms

    def items(self) -> Iterator[tuple[dict[str, int], Coefficient]]:
        """Terms as ``(exponent dict, coefficient)`` in canonical order."""
        for m in self.sorted_monomials():
            yield {var_name(i): e for i, e in unpack(m)}, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        t = self._terms
        return not t or (len(t) == 1 and 0 in t)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Coefficient:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self._terms.get(0, 0)

    def constant_term(self) -> Coefficient:
        return self._terms.get(0, 0)

    def variable_indices(self) -> set[int]:
        out: set[int] = set()
        for m in self._terms:
            out.update(i for i, _ in unpack(m))
        return out

    @property
    def variables(self) -> tuple[str, ...]:
        names = [var_name(i) for i in self.variable_indices()]
        return tuple(sorted(names))

    def degree(self, name: str | None = None) -> int:
        """Degree in ``name`` (total degree when ``None``); ``-1`` for zero."""
        if not self._terms:
            return -1
        if name is None:
            return max(mono_degree(m) for m in self._terms)
        i = var_index(name)
        return max(field(m, i) for m in self._terms)

    def sorted_monomials(self) -> list[int]:
        ranks = _rank_table(len(_VARS.names))
        return sorted(self._terms, key=lambda m: canonical_key(m, ranks))

    def leading_coefficient(self) -> Coefficient:
        """Coefficient of the first term in canonical listing order."""
        if not self._terms:
            return 0
        if 0 in self._terms:
            return self._terms[0]
        ranks = _rank_table(len(_VARS.names))
        m = min(self._terms, key=lambda m: canonical_key(m, ranks))
        return self._terms[m]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Poly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o._terms) > len(self._terms):
            big, small = o._terms, self._terms
        else:
            big, small = self._terms, o._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _demote(s) if type(s) is Fraction else s
            else:
                out.pop(m, None)
        return Poly._from_terms(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_terms({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = _demote(s) if type(s) is Fraction else s
            else:
                out.pop(m, None)
        return Poly._from_terms(out)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            return _mul(self, other)
        if isinstance(other, (int, Fraction, Rational)):
            c = _coerce_coeff(other)
            if not c:
                return Poly._from_terms({})
            if c == 1:
                return self
            return Poly._from_terms({m: _demote(v * c) for m, v in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        if self.is_monomial:
            ((m, c),) = self._terms.items()
            return Poly._from_terms({m * n: _demote(Fraction(c) ** n) if type(c) is Fraction else c**n})
        result = Poly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * c

    def shift(self, m: int) -> "Poly":
        """Multiply by the packed monomial ``m``."""
        if not m:
            return self
        return Poly._from_terms({k + m: c for k, c in self._terms.items()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            c = _coerce_coeff(other)
            if not c:
                raise ZeroDivisionError("polynomial division by zero")
            inv = Fraction(1, c) if type(c) is int else 1 / c
            return self * inv
        return NotImplemented

    def exquo(self, other: "Poly") -> "Poly":
        """Exact quotient ``self / other``; raises :class:`NotDivisible`."""
        q = self.try_exquo(other)
        if q is None:
            raise NotDivisible("polynomial division is not exact")
        return q

    def try_exquo(self, other: "Poly", integral: bool = False) -> "Poly | None":
        """Exact quotient or ``None``.

        With ``integral=True`` both operands must have integer coefficients
        and the quotient is required to have integer coefficients too.
        """
        o = self._coerce(other)
        if o is None:
            raise TypeError("can only divide by a polynomial or rational")
        return _divexact(self, o, integral)

    def __floordiv__(self, other):
        return self.exquo(other)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- content ------------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self._terms:
            return Fraction(0)
        from math import gcd, lcm

        g = 0
        l = 1
        for c in self._terms.values():
            if type(c) is int:
                g = gcd(g, c)
            else:
                g = gcd(g, c.numerator)
                l = lcm(l, c.denominator)
        return Fraction(g, l)

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._terms.values())

    def primitive(self) -> "Poly":
        """Integer-primitive associate whose first canonical coefficient is positive."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        if c == 1:
            return self
        inv = 1 / c
        if inv.denominator == 1:
            k = inv.numerator
            return Poly._from_terms({m: _demote(v * k) for m, v in self._terms.items()})
        return Poly._from_terms({m: _demote(v * inv) for m, v in self._terms.items()})

    def monomial_content(self) -> int:
        """Largest packed monomial dividing every term."""
        it = iter(self._terms)
        g = next(it, 0)
        for m in it:
            if not g:
                break
            g = mono_min(g, m)
        return g

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, bindings: Mapping[str, object]):
        """Exact value at a point; every variable must be bound."""
        idx = {var_index(k): _coerce_coeff(v) for k, v in bindings.items()}
        total: Coefficient = 0
        cache: dict[tuple[int, int], Coefficient] = {}
        for m, c in self._terms.items():
            val = c
            for i, e in unpack(m):
                if i not in idx:
                    raise KeyError(f"unbound variable {var_name(i)!r}")
                key = (i, e)
                pw = cache.get(key)
                if pw is None:
                    pw = idx[i] ** e
                    cache[key] = pw
                val = val * pw
            total = total + val
        return _demote(Fraction(total)) if isinstance(total, Fraction) else total

    def subs(self, mapping: Mapping[str, object]) -> "Poly":
        """Substitute polynomials (or rationals) for variables."""
        repl = {}
        for k, v in mapping.items():
            vp = v if isinstance(v, Poly) else Poly(v)
            repl[var_index(k)] = vp
        if not repl:
            return self
        out = Poly(0)
        powcache: dict[tuple[int, int], Poly] = {}
        groups: dict[int, Poly] = {}
        # collect the untouched part of each monomial, multiply in replacements
        for m, c in self._terms.items():
            kept = 0
            sub = Poly(c)
            for i, e in unpack(m):
                if i in repl:
                    key = (i, e)
                    pw = powcache.get(key)
                    if pw is None:
                        pw = repl[i] ** e
                        powcache[key] = pw
                    sub = sub * pw
                else:
                    kept |= e << (FIELD_BITS * i)
            groups[kept] = groups[kept] + sub if kept in groups else sub
        for kept, p in groups.items():
            out = out + p.shift(kept)
        return out

    # univariate views --------------------------------------------------------

    def coefficients_in(self, index: int) -> dict[int, "Poly"]:
        """Split into ``{power: coefficient polynomial}`` w.r.t. variable ``index``."""
        shift = FIELD_BITS * index
        mask = FIELD_MASK << shift
        parts: dict[int, dict[int, Coefficient]] = {}
        for m, c in self._terms.items():
            e = (m & mask) >> shift
            parts.setdefault(e, {})[m & ~mask] = c
        return {e: Poly._from_terms(t) for e, t in parts.items()}

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m in self.sorted_monomials():
            pieces.append(_term_str(self._terms[m], m))
        out = pieces[0]
        for s in pieces[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self) -> str:
        return f"Poly('{self}')"


def _mono_str(m: int) -> str:
    parts = []
    for i, e in sorted(unpack(m), key=lambda ie: var_name(ie[0])):
        name = var_name(i)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _term_str(c: Coefficient, m: int) -> str:
    if not m:
        return str(c)
    mono = _mono_str(m)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _mul(p: Poly, q: Poly) -> Poly:
    a, b = p._terms, q._terms
    if not a or not b:
        return Poly._from_terms({})
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        ((mb, cb),) = b.items()
        if cb == 1:
            return Poly._from_terms({m + mb: c for m, c in a.items()} if mb else dict(a))
        return Poly._from_terms({m + mb: _demote(c * cb) for m, c in a.items()})
    out: dict[int, Coefficient] = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            k = ma + mb
            out[k] = get(k, 0) + ca * cb
    frac = False
    for m, c in list(out.items()):
        if not c:
            del out[m]
        elif type(c) is Fraction:
            frac = True
    if frac:
        out = {m: _demote(c) for m, c in out.items()}
    return Poly._from_terms(out)


def _divexact(p: Poly, d: Poly, integral: bool) -> Poly | None:
    dt = d._terms
    if not dt:
        raise ZeroDivisionError("polynomial division by zero")
    pt = p._terms
    if not pt:
        return Poly._from_terms({})
    lm = max(dt)
    lc = dt[lm]
    if len(dt) == 1:
        out = {}
        for m, c in pt.items():
            if not mono_divides(lm, m):
                return None
            if integral:
                qv, r = divmod(c, lc)
                if r:
                    return None
                out[m - lm] = qv
            else:
                out[m - lm] = _demote(Fraction(c) / lc) if (type(c) is Fraction or c % lc) else c // lc
        return Poly._from_terms(out)
    # quick rejections on the extreme monomials
    if not mono_divides(lm, max(pt)):
        return None
    rem = dict(pt)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quo: dict[int, Coefficient] = {}
    rest = [(m, c) for m, c in dt.items() if m != lm]
    lc_is_unit = lc == 1 or lc == -1
    while heap:
        m = -heapq.heappop(heap)
        c = rem.get(m)
        if not c:
            continue
        # duplicates of m may sit in the heap; drop the entry now
        del rem[m]
        while heap and heap[0] == -m:
            heapq.heappop(heap)
        if m < lm or not mono_divides(lm, m):
            return None
        if lc_is_unit:
            qc = c * lc
        elif integral:
            qc, r = divmod(c, lc)
            if r:
                return None
        else:
            qc = _demote(Fraction(c) / lc) if (type(c) is Fraction or c % lc) else c // lc
        qm = m - lm
        quo[qm] = qc
        for dm, dc in rest:
            k = qm + dm
            v = rem.get(k)
            if v is None:
                rem[k] = -qc * dc
                heapq.heappush(heap, -k)
            else:
                s = v - qc * dc
                if s:
                    rem[k] = s
                else:
                    del rem[k]
    if any(rem.values()):
        return None
    if not integral:
        quo = {m: _demote(c) if type(c) is Fraction else c for m, c in quo.items()}
    return Poly._from_terms(quo)


def var(name: str) -> Poly:
    """The polynomial consisting of a single variable."""
    return Poly._from_terms({1 << (FIELD_BITS * var_index(name)): 1})


def const(c) -> Poly:
    return Poly(c)
