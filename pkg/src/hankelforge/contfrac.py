"""Moments, S- and J-fractions, and monic orthogonal polynomials.

Conventions: ``JFraction.b = (b_0, b_1, ...)`` and ``JFraction.lam =
(lambda_1, lambda_2, ...)``, so ``lam[k]`` is ``lambda_{k+1}``.  From
``M`` moments ``mu_0..mu_{M-1}`` one recovers ``b_n`` for
``n <= M//2 - 1`` and ``lambda_n`` for ``n <= (M-1)//2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import RatFunc, TruncatedSeries, as_ratfunc
from .linalg import ExactMatrix, det_exact
from .qseries import a, b, moment_mu, q

__all__ = [
    "JFraction",
    "SFraction",
    "OrthoPolySeq",
    "DegenerateMoments",
    "InsufficientCoefficients",
    "hankel_deltas",
    "moments_to_j",
    "j_to_series",
    "s_to_series",
    "s_to_j",
    "little_qjacobi_lambda",
    "little_qjacobi_sfraction",
    "resolve_qjacobi_variant",
    "little_qjacobi_recurrence",
    "qjacobi_jfraction",
    "resolve_recurrence_law",
    "ortho_polys",
    "functional",
    "delta_from_lambdas",
]


class DegenerateMoments(ArithmeticError):
    def __init__(self, k: int):
        super().__init__(f"Hankel determinant Delta_{k} = 0")
        self.k = k


class InsufficientCoefficients(ValueError):
    pass


@dataclass(frozen=True)
class JFraction:
    b: tuple[RatFunc, ...]
    lam: tuple[RatFunc, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(as_ratfunc(x) for x in self.b))
        object.__setattr__(self, "lam", tuple(as_ratfunc(x) for x in self.lam))

    def b_at(self, n: int) -> RatFunc:
        return self.b[n]

    def lam_at(self, n: int) -> RatFunc:
        """``lambda_n`` with 1-based ``n``."""
        return self.lam[n - 1]


@dataclass(frozen=True)
class SFraction:
    lam: tuple[RatFunc, ...]
    variant: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(as_ratfunc(x) for x in self.lam))


@dataclass(frozen=True)
class OrthoPolySeq:
    """``coeffs[n][k]`` is the coefficient of ``x^k`` in ``p_n``."""

    coeffs: tuple[tuple[RatFunc, ...], ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> tuple[RatFunc, ...]:
        return self.coeffs[n]

    def text(self, n: int, x: str = "x") -> str:
        parts = []
        for k in range(len(self.coeffs[n]) - 1, -1, -1):
            c = self.coeffs[n][k]
            if c.is_zero:
                continue
            mono = "" if k == 0 else (x if k == 1 else f"{x}^{k}")
            if not mono:
                parts.append(f"({c})" if not c.is_constant else str(c))
            elif c == 1:
                parts.append(mono)
            else:
                cs = str(c) if c.is_constant else f"({c})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts) if parts else "0"


# -- moments to J-fraction -----------------------------------------------------------


def hankel_deltas(moments: Sequence) -> list[RatFunc]:
    """``Delta_k = det(mu_{i+j})_{0<=i,j<=k}`` for every ``k`` the moments allow."""
    mus = [as_ratfunc(m) for m in moments]
    out = []
    k = 0
    while 2 * k < len(mus):
        out.append(det_exact(ExactMatrix.build(k + 1, k + 1, lambda i, j: mus[i + j])))
        k += 1
    return out


def moments_to_j(moments: Sequence) -> JFraction:
    """J-fraction coefficients from Hankel determinant ratios.

    ``lambda_n = Delta_{n-2} Delta_n / Delta_{n-1}^2`` and
    ``b_n = chi_n / Delta_n - chi_{n-1} / Delta_{n-1}`` with
    ``Delta_{-1} = 1`` and ``chi_{-1} = 0``.  The ratios are read off the
    pivots of plain Gaussian elimination on the Hankel block: pivot
    ``n`` is ``Delta_n / Delta_{n-1}`` and the entry right of it is
    ``chi_n / Delta_{n-1}``.  This never forms the large determinants
    themselves.
    """
    mus = [as_ratfunc(m) for m in moments]
    if not mus:
        raise InsufficientCoefficients("no moments given")
    if mus[0] != 1:
        raise ValueError("moments must be normalized so that mu_0 = 1")
    M = len(mus)
    nb = M // 2
    nl = (M - 1) // 2
    # row i keeps the columns mu_{i+j} that exist
    rows = [[mus[i + j] for j in range(M - i)] for i in range(nl + 1)]
    pivots: list[RatFunc] = []
    for i, row in enumerate(rows):
        for k in range(i):
            f = row[k] / pivots[k]
            if f.is_zero:
                continue
            above = rows[k]
            for j in range(k, len(row)):
                row[j] = row[j] - f * above[j]
        if row[i].is_zero:
            raise DegenerateMoments(i)
        pivots.append(row[i])

    def ratio(n: int) -> RatFunc:
        return RatFunc(0) if n < 0 else rows[n][n + 1] / pivots[n]

    bs = [ratio(n) - ratio(n - 1) for n in range(nb)]
    lams = [pivots[n] / pivots[n - 1] for n in range(1, nl + 1)]
    return JFraction(tuple(bs), tuple(lams))


# -- expansions -------------------------------------------------------------------------


def j_to_series(jf: JFraction, order: int, var: str = "t") -> TruncatedSeries:
    """Expansion of the J-fraction modulo ``var^order``.

    Coefficient ``n`` is the weighted count of Motzkin paths of length ``n``
    (level ``b_k``, fall from ``k`` weighted ``lambda_k``), so only sums and
    products occur.
    """
    if order <= 0:
        return TruncatedSeries((), 0, var)
    need_b = (order - 2) // 2
    need_l = (order - 1) // 2
    if len(jf.b) < need_b + 1 or len(jf.lam) < need_l:
        raise InsufficientCoefficients(
            f"order {order} needs b_0..b_{need_b} and lambda_1..lambda_{need_l}; "
            f"got {len(jf.b)} b's and {len(jf.lam)} lambdas"
        )
    heights = [RatFunc(1)]
    coeffs = [RatFunc(1)]
    for n in range(1, order):
        top = min(len(heights), order - 1 - n)  # higher paths cannot come back in time
        nxt = [RatFunc(0)] * (top + 1)
        for k, v in enumerate(heights):
            if v.is_zero:
                continue
            if k + 1 <= top:
                nxt[k + 1] = nxt[k + 1] + v
            if k <= top and not jf.b[k].is_zero:
                nxt[k] = nxt[k] + jf.b[k] * v
            if 1 <= k <= top + 1 and not jf.lam[k - 1].is_zero:
                nxt[k - 1] = nxt[k - 1] + jf.lam[k - 1] * v
        heights = nxt
        coeffs.append(heights[0])
    return TruncatedSeries(tuple(coeffs), order, var)


def s_to_series(sf: SFraction, order: int, var: str = "t") -> TruncatedSeries:
    """Expansion of the S-fraction ``1/(1 - l1 x/(1 - l2 x/...))`` modulo ``var^order``.

    In ``sqrt(x)`` this is a J-fraction with every ``b_k = 0``, so the
    coefficients are the even ones of that expansion.
    """
    if order <= 0:
        return TruncatedSeries((), 0, var)
    need = order - 1
    if len(sf.lam) < need:
        raise InsufficientCoefficients(f"order {order} needs {need} S-fraction coefficients")
    if order == 1:
        return TruncatedSeries.constant(1, 1, var)
    jf = JFraction((RatFunc(0),) * (order - 1), sf.lam[:need])
    doubled = j_to_series(jf, 2 * order - 1, var)
    return TruncatedSeries(tuple(doubled[2 * k] for k in range(order)), order, var)


def s_to_j(sf: SFraction) -> JFraction:
    """Contraction: ``b_0 = l1``, ``b_n = l_2n + l_2n+1``, ``lambda_n = l_2n-1 l_2n``."""
    lam = sf.lam
    if len(lam) < 2:
        raise InsufficientCoefficients("contraction needs at least two coefficients")
    N = len(lam)

    def L(k: int) -> RatFunc:
        return lam[k - 1]

    bs = [L(1)]
    n = 1
    while 2 * n + 1 <= N:
        bs.append(L(2 * n) + L(2 * n + 1))
        n += 1
    lams = []
    n = 1
    while 2 * n <= N:
        lams.append(L(2 * n - 1) * L(2 * n))
        n += 1
    return JFraction(tuple(bs), tuple(lams))


# -- little q-Jacobi data ------------------------------------------------------------------------

VARIANTS = ("printed", "weight")


def little_qjacobi_lambda(h: int, variant: str = "weight") -> RatFunc:
    """S-fraction coefficient ``lambda_h`` (``h >= 1``) of the q-moment generating series.

    ``variant="printed"`` keeps the odd-index denominator factor
    ``1 - a q^(2n+1)`` exactly as it was printed; ``"weight"`` uses
    ``1 - ab q^(2n+1)`` as in the Dyck fall weights.
    """
    if h < 1:
        raise ValueError("S-fraction coefficients start at lambda_1")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    ab = a * b
    n, odd = divmod(h, 2)
    if odd:
        first = (1 - a * q ** (2 * n + 1)) if variant == "printed" else (1 - ab * q ** (2 * n + 1))
        return RatFunc((1 - a * q ** (n + 1)) * (1 - ab * q ** (n + 1)) * q**n,
                       first * (1 - ab * q ** (2 * n + 2)))
    return RatFunc((1 - q**n) * (1 - b * q**n) * a * q**n,
                   (1 - ab * q ** (2 * n)) * (1 - ab * q ** (2 * n + 1)))


def _sfraction(n_max: int, variant: str) -> SFraction:
    return SFraction(tuple(little_qjacobi_lambda(h, variant) for h in range(1, n_max + 1)), variant)


@lru_cache(maxsize=None)
def resolve_qjacobi_variant(order: int = 6) -> dict[str, bool]:
    """Which coefficient variant reproduces ``mu_0..mu_{order-1}``."""
    target = [moment_mu(k) for k in range(order)]
    out = {}
    for v in VARIANTS:
        # grow the order so a wrong variant fails on cheap low-order terms
        ok = True
        for o in range(2, order + 1):
            series = j_to_series(s_to_j(_sfraction(max(o, 2), v)), o)
            if series[o - 1] != target[o - 1]:
                ok = False
                break
        out[v] = ok
    return out


def little_qjacobi_sfraction(n_max: int) -> SFraction:
    """``lambda_1..lambda_{n_max}`` in whichever variant reproduces the moments."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    verdict = resolve_qjacobi_variant()
    chosen = next((v for v in ("printed", "weight") if verdict[v]), None)
    if chosen is None:
        raise ArithmeticError("no coefficient variant reproduces the moments")
    return _sfraction(n_max, chosen)


def little_qjacobi_recurrence(n: int) -> tuple[RatFunc, RatFunc]:
    """``(A_n, C_n)`` of the three-term recurrence."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    ab = a * b
    A = RatFunc(q**n * (1 - a * q ** (n + 1)) * (1 - ab * q ** (n + 1)),
                (1 - ab * q ** (2 * n + 1)) * (1 - ab * q ** (2 * n + 2)))
    C = RatFunc(a * q**n * (1 - q**n) * (1 - b * q**n),
                (1 - ab * q ** (2 * n)) * (1 - ab * q ** (2 * n + 1)))
    return A, C


RECURRENCE_LAWS = ("A(n-1)C(n-1)", "A(n-1)C(n)")


def qjacobi_jfraction(depth: int, law: str = "A(n-1)C(n)") -> JFraction:
    """``b_n = A_n + C_n`` for ``n < depth`` and ``lambda_n`` by the chosen law."""
    if law not in RECURRENCE_LAWS:
        raise ValueError(f"law must be one of {RECURRENCE_LAWS}")
    AC = [little_qjacobi_recurrence(n) for n in range(depth + 1)]
    bs = tuple(A + C for A, C in AC[:depth])
    if law == "A(n-1)C(n-1)":
        lams = tuple(AC[n - 1][0] * AC[n - 1][1] for n in range(1, depth))
    else:
        lams = tuple(AC[n - 1][0] * AC[n][1] for n in range(1, depth))
    return JFraction(bs, lams)


@lru_cache(maxsize=None)
def resolve_recurrence_law(depth: int = 3) -> dict[str, bool]:
    """Which ``lambda`` law agrees with the determinant-ratio coefficients."""
    ref = moments_to_j([moment_mu(k) for k in range(2 * depth)])
    out = {}
    for law in RECURRENCE_LAWS:
        jf = qjacobi_jfraction(depth, law)
        out[law] = (all(x == y for x, y in zip(jf.b, ref.b))
                    and all(x == y for x, y in zip(jf.lam, ref.lam)))
    return out


# -- orthogonal polynomials ---------------------------------------------------------------------


def ortho_polys(jf: JFraction, N: int) -> OrthoPolySeq:
    """``p_0..p_N`` from ``p_{n+1} = (x - b_n) p_n - lambda_n p_{n-1}``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if len(jf.b) < N or len(jf.lam) < max(N - 1, 0):
        raise InsufficientCoefficients(f"p_{N} needs b_0..b_{N - 1} and lambda_1..lambda_{N - 1}")
    zero = RatFunc(0)
    polys: list[list[RatFunc]] = [[RatFunc(1)]]
    prev: list[RatFunc] = []
    for n in range(N):
        cur = polys[-1]
        nxt = [zero] * (n + 2)
        for k, c in enumerate(cur):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - jf.b[n] * c
        if n >= 1:
            lam = jf.lam[n - 1]
            for k, c in enumerate(prev):
                nxt[k] = nxt[k] - lam * c
        prev = cur
        polys.append(nxt)
    return OrthoPolySeq(tuple(tuple(p) for p in polys))


def _polymul(p: Sequence[RatFunc], r: Sequence[RatFunc]) -> list[RatFunc]:
    out = [RatFunc(0)] * (len(p) + len(r) - 1)
    for i, x in enumerate(p):
        if x.is_zero:
            continue
        for j, y in enumerate(r):
            if not y.is_zero:
                out[i + j] = out[i + j] + x * y
    return out


def functional(coeffs: Sequence[RatFunc], moments: Sequence, second: Sequence[RatFunc] | None = None) -> RatFunc:
    """``L(p)`` or ``L(p * r)`` for the functional ``x^k -> mu_k``."""
    poly = list(coeffs) if second is None else _polymul(coeffs, second)
    if len(poly) > len(moments):
        raise InsufficientCoefficients(f"need {len(poly)} moments, got {len(moments)}")
    total = RatFunc(0)
    for c, m in zip(poly, moments):
        if not c.is_zero:
            total = total + c * as_ratfunc(m)
    return total


def delta_from_lambdas(jf: JFraction, n: int) -> RatFunc:
    """``Delta_{n-1} = lambda_1^(n-1) lambda_2^(n-2) ... lambda_(n-1)`` with ``mu_0 = 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    if len(jf.lam) < n - 1:
        raise InsufficientCoefficients(f"need lambda_1..lambda_{n - 1}")
    out = RatFunc(1)
    for k in range(1, n):
        out = out * jf.lam[k - 1] ** (n - k)
    return out
