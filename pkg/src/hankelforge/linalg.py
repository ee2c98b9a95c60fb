"""Exact matrices, determinants and LU factorizations of Hankel matrices."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, lcm
from typing import Callable, Iterable, Sequence

from .algebra import Poly, RatFunc, as_ratfunc
from .algebra.poly import pack, unpack
from .qseries import a, b, f21_terminating, moment_mu, q, qbinom, qpoch_poly
from .sequences import SequenceKind, parse_kind, q_schroder, seq_value

__all__ = [
    "ExactMatrix",
    "LUPair",
    "LUError",
    "Variant",
    "hankel_matrix",
    "generalized_hankel",
    "q_schroder_matrix",
    "det_exact",
    "det_cofactor",
    "desnanot_jacobi_sides",
    "desnanot_jacobi_check",
    "lu_generic",
    "qcatalan_lu_entry",
    "qcatalan_lu",
    "motzkin_lu_entry",
    "motzkin_lu",
]


class LUError(ArithmeticError):
    """A leading principal minor vanishes; ``index`` is the failing pivot."""

    def __init__(self, index: int):
        super().__init__(f"leading principal minor of size {index + 1} vanishes (pivot {index})")
        self.index = index


class ExactMatrix:
    """Dense immutable matrix of :class:`RatFunc` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_ratfunc(x) for x in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ValueError("matrix rows have different lengths")
        self.rows = data

    @classmethod
    def build(cls, nrows: int, ncols: int, fn: Callable[[int, int], object]) -> "ExactMatrix":
        return cls([[fn(i, j) for j in range(ncols)] for i in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.build(n, n, lambda i, j: int(i == j))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def __getitem__(self, ij: tuple[int, int]) -> RatFunc:
        i, j = ij
        return self.rows[i][j]

    def minor(self, drop_rows: Iterable[int] = (), drop_cols: Iterable[int] = ()) -> "ExactMatrix":
        dr, dc = set(drop_rows), set(drop_cols)
        return ExactMatrix(
            [x for j, x in enumerate(row) if j not in dc]
            for i, row in enumerate(self.rows) if i not in dr
        )

    def map(self, fn: Callable[[RatFunc], object]) -> "ExactMatrix":
        return ExactMatrix([[fn(x) for x in row] for row in self.rows])

    def evaluate(self, bindings) -> "ExactMatrix":
        return self.map(lambda x: x.evaluate(bindings))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = RatFunc(0)
                for s in range(k):
                    x, y = self.rows[i][s], other.rows[s][j]
                    if not x.is_zero and not y.is_zero:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r1, r2 in zip(self.rows, other.rows) for x, y in zip(r1, r2)
        )

    __hash__ = None

    def to_text(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(r) + "]" for r in self.to_text())

    def __repr__(self) -> str:
        return f"ExactMatrix({self.to_text()!r})"


@dataclass(frozen=True)
class LUPair:
    L: ExactMatrix
    U: ExactMatrix

    def product(self) -> ExactMatrix:
        return self.L @ self.U

    def diagonal_product(self) -> RatFunc:
        out = RatFunc(1)
        for i in range(self.U.shape[0]):
            out = out * self.U[i, i]
        return out


class Variant(Enum):
    PLAIN = "plain"
    HAT = "hat"
    TILDE = "tilde"


# -- constructors ---------------------------------------------------------------


def hankel_matrix(kind: SequenceKind | str, n: int, t: int = 0) -> ExactMatrix:
    """``(a_{i+j+t})`` for ``0 <= i, j < n``."""
    if n < 1:
        raise ValueError(f"matrix size must be positive, got {n}")
    if t < 0:
        raise ValueError(f"shift must be nonnegative, got {t}")
    kind = parse_kind(kind)
    vals = [seq_value(kind, k + t) for k in range(2 * n - 1)]
    return ExactMatrix.build(n, n, lambda i, j: vals[i + j])


def generalized_hankel(kind: SequenceKind | str, ks: Sequence[int], n: int | None = None) -> ExactMatrix:
    """``(a_{k_i + j})`` for ``0 <= i, j < n``."""
    n = len(ks) if n is None else n
    if len(ks) != n:
        raise ValueError(f"expected {n} row indices, got {len(ks)}")
    if any(k < 0 for k in ks):
        raise ValueError("row indices must be nonnegative")
    kind = parse_kind(kind)
    return ExactMatrix.build(n, n, lambda i, j: seq_value(kind, ks[i] + j))


def q_schroder_matrix(n: int, t: int, variant: Variant | str = Variant.PLAIN) -> ExactMatrix:
    """The q-Schroder matrices; HAT and TILDE use 1-based ``i, j``."""
    if n < 1:
        raise ValueError(f"matrix size must be positive, got {n}")
    variant = Variant(variant) if not isinstance(variant, Variant) else variant
    if variant is Variant.PLAIN:
        return ExactMatrix.build(
            n, n, lambda i, j: q ** ((i - j) * (i - j - 1)) * q_schroder(i + j + t)
        )
    if variant is Variant.HAT:
        def hat(i: int, j: int) -> Poly:
            return q ** (2 * (n - i) * (t + i + j - 2)) * q_schroder(t + i + j - 2)
        return ExactMatrix.build(n, n, lambda r, c: hat(r + 1, c + 1))

    def tilde(i: int, j: int) -> RatFunc:
        return RatFunc(q_schroder(t + i + j - 2), q ** ((t + i + j) * (t + i + j - 1)))
    return ExactMatrix.build(n, n, lambda r, c: tilde(r + 1, c + 1))


# -- determinants ----------------------------------------------------------------


def det_cofactor(M: ExactMatrix) -> RatFunc:
    """Laplace expansion along the first row; an oracle for small matrices."""
    n, m = M.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return RatFunc(1)
    if n == 1:
        return M[0, 0]
    total = RatFunc(0)
    for j in range(n):
        x = M[0, j]
        if x.is_zero:
            continue
        sub = det_cofactor(M.minor([0], [j]))
        total = total + (x * sub if j % 2 == 0 else -(x * sub))
    return total


def _bareiss(rows: list[list], zero, one, exquo) -> tuple[object, int]:
    """Fraction-free elimination; returns ``(det, sign)`` with row swaps."""
    n = len(rows)
    sign = 1
    prev = one
    for k in range(n - 1):
        if rows[k][k] == zero:
            for r in range(k + 1, n):
                if rows[r][k] != zero:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return zero, 1
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                v = ri[j] * pk - rik * rk[j]
                ri[j] = exquo(v, prev)
            ri[k] = zero
        prev = pk
    return rows[n - 1][n - 1], sign


def _det_constant(M: ExactMatrix) -> RatFunc:
    rows = []
    scale = Fraction(1)
    for row in M.rows:
        vals = [Fraction(x.constant_value()) for x in row]
        d = lcm(*(v.denominator for v in vals))
        scale /= d
        rows.append([int(v * d) for v in vals])
    det, sign = _bareiss(rows, 0, 1, lambda x, y: x // y)
    return RatFunc(Fraction(det * sign) * scale)


def _det_monomial_rows(M: ExactMatrix) -> RatFunc:
    """Clear monomial denominators row by row, then Bareiss over ``Poly``."""
    rows = []
    scale = RatFunc(1)
    for row in M.rows:
        mono = 0
        for x in row:
            (m,) = x.den.terms
            exps = dict(unpack(mono))
            for i, e in unpack(m):
                exps[i] = max(exps.get(i, 0), e)
            mono = pack(exps)
        d = Poly._from_terms({mono: 1})
        scale = scale / d
        rows.append([(x * d).as_poly() for x in row])
    det, sign = _bareiss(rows, Poly(0), Poly(1), lambda x, y: x.exquo(y))
    return scale * (det if sign == 1 else -det)


def _det_fraction_field(M: ExactMatrix) -> RatFunc:
    """Gaussian elimination over the field of rational functions."""
    rows = [list(r) for r in M.rows]
    n = len(rows)
    det = RatFunc(1)
    for k in range(n):
        piv = None
        best = None
        for r in range(k, n):
            x = rows[r][k]
            if not x.is_zero:
                size = len(x.num) + len(x.den)
                if best is None or size < best:
                    piv, best = r, size
        if piv is None:
            return RatFunc(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        pk = rows[k][k]
        det = det * pk
        inv = pk.inverse()
        for i in range(k + 1, n):
            if rows[i][k].is_zero:
                continue
            f = rows[i][k] * inv
            rk, ri = rows[k], rows[i]
            for j in range(k + 1, n):
                if not rk[j].is_zero:
                    ri[j] = ri[j] - f * rk[j]
    return det


def det_exact(M: ExactMatrix) -> RatFunc:
    """Exact determinant.

    Constant matrices and matrices whose entries have monomial
    denominators go through fraction-free Bareiss elimination; anything
    else is eliminated over the fraction field with normalized entries,
    which keeps intermediate sizes far smaller for moment matrices.
    """
    n, m = M.shape
    if n != m:
        raise ValueError(f"determinant of a non-square {n}x{m} matrix")
    if n == 0:
        return RatFunc(1)
    if n == 1:
        return M[0, 0]
    entries = [x for row in M.rows for x in row]
    if all(x.is_constant for x in entries):
        return _det_constant(M)
    if all(x.den.is_monomial for x in entries):
        return _det_monomial_rows(M)
    return _det_fraction_field(M)


def desnanot_jacobi_sides(M: ExactMatrix) -> tuple[RatFunc, RatFunc]:
    """``det M * det M^{1,n}_{1,n}`` and ``det M^1_1 det M^n_n - det M^1_n det M^n_1``."""
    n, m = M.shape
    if n != m:
        raise ValueError("matrix must be square")
    if n < 2:
        raise ValueError("condensation needs a matrix of size at least 2")
    last = n - 1
    lhs = det_exact(M) * det_exact(M.minor([0, last], [0, last]))
    rhs = (det_exact(M.minor([0], [0])) * det_exact(M.minor([last], [last]))
           - det_exact(M.minor([0], [last])) * det_exact(M.minor([last], [0])))
    return lhs, rhs


def desnanot_jacobi_check(M: ExactMatrix) -> bool:
    lhs, rhs = desnanot_jacobi_sides(M)
    return lhs == rhs


# -- LU factorizations -------------------------------------------------------------


def lu_generic(M: ExactMatrix) -> LUPair:
    """Doolittle factorization without pivoting."""
    n, m = M.shape
    if n != m:
        raise ValueError("LU factorization needs a square matrix")
    L = [[RatFunc(int(i == j)) for j in range(n)] for i in range(n)]
    U = [[RatFunc(0)] * n for _ in range(n)]
    for k in range(n):
        for j in range(k, n):
            acc = M[k, j]
            for s in range(k):
                if not L[k][s].is_zero and not U[s][j].is_zero:
                    acc = acc - L[k][s] * U[s][j]
            U[k][j] = acc
        if U[k][k].is_zero:
            raise LUError(k)
        inv = U[k][k].inverse()
        for i in range(k + 1, n):
            acc = M[i, k]
            for s in range(k):
                if not L[i][s].is_zero and not U[s][k].is_zero:
                    acc = acc - L[i][s] * U[s][k]
            L[i][k] = acc * inv
    return LUPair(ExactMatrix(L), ExactMatrix(U))


def qcatalan_lu_entry(which: str, i: int, j: int) -> RatFunc:
    """Closed-form LU entries of ``(mu_{i+j})``."""
    which = which.upper()
    ab = a * b
    if which == "L":
        if j > i:
            return RatFunc(0)
        return (moment_mu(i) / moment_mu(j)
                * RatFunc(qpoch_poly(ab * q ** (j + 2), j) * qbinom(i, j),
                          qpoch_poly(ab * q ** (i + 2), j)))
    if which == "U":
        if i > j:
            return RatFunc(0)
        num = (a**i * q ** (i * i) * qbinom(j, i) * qpoch_poly(q, i) * qpoch_poly(ab * q, i)
               * qpoch_poly(ab * q**3, i, q**2) * qpoch_poly(b * q, i))
        den = (qpoch_poly(ab * q, i, q**2) * qpoch_poly(a * q, i)
               * qpoch_poly(ab * q ** (i + 2), i) * qpoch_poly(ab * q ** (j + 2), i))
        return moment_mu(i) * moment_mu(j) * RatFunc(num, den)
    raise ValueError(f"which must be 'L' or 'U', got {which!r}")


def qcatalan_lu(n: int) -> LUPair:
    return LUPair(
        ExactMatrix.build(n, n, lambda i, j: qcatalan_lu_entry("L", i, j)),
        ExactMatrix.build(n, n, lambda i, j: qcatalan_lu_entry("U", i, j)),
    )


def motzkin_lu_entry(which: str, i: int, j: int) -> Fraction:
    """Closed-form LU entries of the Motzkin Hankel matrix."""
    which = which.upper()
    if which == "L":
        row, col = i, j
    elif which == "U":
        row, col = j, i
    else:
        raise ValueError(f"which must be 'L' or 'U', got {which!r}")
    c = comb(row, col) if row >= col else 0
    if c == 0:
        return Fraction(0)
    return c * f21_terminating(Fraction(col - row + 1, 2), Fraction(col - row, 2), col + 2, 4)


def motzkin_lu(n: int) -> LUPair:
    return LUPair(
        ExactMatrix.build(n, n, lambda i, j: motzkin_lu_entry("L", i, j)),
        ExactMatrix.build(n, n, lambda i, j: motzkin_lu_entry("U", i, j)),
    )
