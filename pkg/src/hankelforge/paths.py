"""Weighted lattice paths: enumeration, transfer-matrix sums and LGV checks.

A step's height is the y-coordinate of its origin.  Weight schemes may
look at the full origin ``(x, y)``; most only use the height.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .algebra import Poly, RatFunc, var
from .linalg import ExactMatrix, det_exact
from .qseries import a, b, q, qbinom, qpoch_poly

__all__ = [
    "StepType",
    "PathFamily",
    "Path",
    "GuardExceeded",
    "STEP_GUARD",
    "WeightScheme",
    "UnitWeights",
    "GenericWeights",
    "QCatalanWeights",
    "MotzkinRemarkWeights",
    "OmegaWeights",
    "SchroderEdgeWeights",
    "RandomWeights",
    "weight_qcatalan",
    "qcatalan_lambda",
    "enumerate_paths",
    "path_weight",
    "gf_between",
    "gf_paths_dp",
    "closed_gf_dyck",
    "MotzkinGFReport",
    "closed_gf_motzkin",
    "omega_schroder",
    "LGVResult",
    "lgv_endpoints",
    "lgv_check",
    "viennot_rhs",
    "viennot_rhs_amended",
]

STEP_GUARD = 24


class GuardExceeded(ValueError):
    """Exhaustive enumeration would exceed the step guard."""


class StepType(Enum):
    RISE = (1, 1)
    FALL = (1, -1)
    LEVEL = (1, 0)
    LONG_LEVEL = (2, 0)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]


class PathFamily(Enum):
    DYCK = "dyck"
    MOTZKIN = "motzkin"
    SCHRODER = "schroder"

    @property
    def steps(self) -> tuple[StepType, ...]:
        return _FAMILY_STEPS[self]


_FAMILY_STEPS = {
    PathFamily.DYCK: (StepType.RISE, StepType.FALL),
    PathFamily.MOTZKIN: (StepType.RISE, StepType.FALL, StepType.LEVEL),
    PathFamily.SCHRODER: (StepType.RISE, StepType.FALL, StepType.LONG_LEVEL),
}

Point = tuple[int, int]


@dataclass(frozen=True)
class Path:
    start: Point
    steps: tuple[StepType, ...]

    def points(self) -> list[Point]:
        x, y = self.start
        out = [(x, y)]
        for s in self.steps:
            x, y = x + s.dx, y + s.dy
            out.append((x, y))
        return out

    def origins(self) -> Iterator[tuple[StepType, int, int]]:
        x, y = self.start
        for s in self.steps:
            yield s, x, y
            x, y = x + s.dx, y + s.dy

    @property
    def end(self) -> Point:
        return self.points()[-1]

    def heights(self) -> list[int]:
        return [y for _, _, y in self.origins()]

    def __str__(self) -> str:
        code = {StepType.RISE: "U", StepType.FALL: "D", StepType.LEVEL: "L", StepType.LONG_LEVEL: "H"}
        return "".join(code[s] for s in self.steps) or "(empty)"


# -- weight schemes ---------------------------------------------------------------------


class WeightScheme:
    """Maps a step with origin ``(x, y)`` to a :class:`RatFunc`."""

    name = "custom"

    def weight(self, step: StepType, height: int) -> RatFunc:
        raise NotImplementedError

    def weight_at(self, step: StepType, x: int, y: int) -> RatFunc:
        return self.weight(step, y)


class UnitWeights(WeightScheme):
    name = "count"

    def weight(self, step, height):
        return RatFunc(1)


class GenericWeights(WeightScheme):
    """``a_h``, ``b_h``, ``c_h`` for rises, falls and level steps of height ``h``."""

    name = "generic"

    def __init__(self, height_bound: int):
        self.height_bound = height_bound

    def weight(self, step, height):
        if height > self.height_bound:
            raise ValueError(f"height {height} exceeds the declared bound {self.height_bound}")
        prefix = {StepType.RISE: "a", StepType.FALL: "b"}.get(step, "c")
        return RatFunc(var(f"{prefix}_{height}"))


@lru_cache(maxsize=None)
def qcatalan_lambda(h: int) -> RatFunc:
    """Fall weight ``lambda_h``; the even formula gives ``lambda_0 = 0``."""
    if h < 0:
        raise ValueError("height must be nonnegative")
    ab = a * b
    k, odd = divmod(h, 2)
    if odd:
        return RatFunc(q**k * (1 - a * q ** (k + 1)) * (1 - ab * q ** (k + 1)),
                       (1 - ab * q ** (2 * k + 1)) * (1 - ab * q ** (2 * k + 2)))
    return RatFunc(a * q**k * (1 - q**k) * (1 - b * q**k),
                   (1 - ab * q ** (2 * k)) * (1 - ab * q ** (2 * k + 1)))


def weight_qcatalan(step: StepType, h: int) -> RatFunc:
    if step is StepType.RISE:
        return RatFunc(1)
    if step is StepType.FALL:
        if h < 1:
            raise ValueError("a fall step has height at least 1")
        return qcatalan_lambda(h)
    raise ValueError(f"the q-Catalan scheme weights Dyck steps only, not {step.name}")


class QCatalanWeights(WeightScheme):
    name = "qcatalan"

    def weight(self, step, height):
        return weight_qcatalan(step, height)


class MotzkinRemarkWeights(WeightScheme):
    """Rise ``lambda_{2h+1}``, fall ``lambda_{2h}``, level ``lambda_{2h} + lambda_{2h+1}``."""

    name = "motzkin-remark"

    def weight(self, step, height):
        if step is StepType.RISE:
            return qcatalan_lambda(2 * height + 1)
        if step is StepType.FALL:
            return qcatalan_lambda(2 * height)
        if step is StepType.LEVEL:
            return qcatalan_lambda(2 * height) + qcatalan_lambda(2 * height + 1)
        raise ValueError("the Motzkin scheme has no long level steps")


class SchroderEdgeWeights(WeightScheme):
    """Rise ``q^(x-y-x0+2(n-1))``, fall ``1``, long level ``q^(x-y-x0+2n-1)``."""

    name = "schroder-edge"

    def __init__(self, n: int, x0: int):
        self.n, self.x0 = n, x0

    def weight(self, step, height):
        raise TypeError("this scheme depends on the x-coordinate; use weight_at")

    def weight_at(self, step, x, y):
        base = x - y - self.x0
        if step is StepType.RISE:
            return RatFunc(q ** (base + 2 * (self.n - 1)))
        if step is StepType.LONG_LEVEL:
            return RatFunc(q ** (base + 2 * self.n - 1))
        if step is StepType.FALL:
            return RatFunc(1)
        raise ValueError("Schroder edges have no short level steps")


class OmegaWeights(SchroderEdgeWeights):
    """``q^omega`` for a single Schroder path starting at the origin."""

    name = "omega"

    def __init__(self):
        super().__init__(1, 0)


class RandomWeights(WeightScheme):
    """Deterministic pseudo-random rational weight per (step, height)."""

    name = "random"

    def __init__(self, seed: int = 0, max_num: int = 9):
        self.seed, self.max_num = seed, max_num
        self._cache: dict[tuple[StepType, int], RatFunc] = {}

    def weight(self, step, height):
        key = (step, height)
        w = self._cache.get(key)
        if w is None:
            rng = random.Random(f"{self.seed}:{step.name}:{height}")
            w = RatFunc(Fraction(rng.randint(-self.max_num, self.max_num),
                                 rng.randint(1, self.max_num)))
            self._cache[key] = w
        return w


# -- enumeration and transfer sums -------------------------------------------------------------


def _check_guard(start: Point, end: Point, force: bool) -> None:
    span = end[0] - start[0]
    if span > STEP_GUARD and not force:
        raise GuardExceeded(f"path span {span} exceeds the {STEP_GUARD}-step enumeration guard")


def enumerate_paths(family: PathFamily | str, start: Point, end: Point,
                    *, force: bool = False) -> list[Path]:
    """All paths of the family from ``start`` to ``end`` staying at ``y >= 0``."""
    family = PathFamily(family) if not isinstance(family, PathFamily) else family
    _check_guard(start, end, force)
    if start[1] < 0 or end[1] < 0:
        return []
    steps = family.steps
    out: list[Path] = []
    trail: list[StepType] = []
    ex, ey = end

    def walk(x: int, y: int) -> None:
        if x == ex:
            if y == ey:
                out.append(Path(start, tuple(trail)))
            return
        for s in steps:
            nx, ny = x + s.dx, y + s.dy
            # remaining span must still allow reaching the target height
            if ny < 0 or nx > ex or abs(ey - ny) > ex - nx:
                continue
            trail.append(s)
            walk(nx, ny)
            trail.pop()

    walk(*start)
    return out


def path_weight(p: Path, w: WeightScheme) -> RatFunc:
    out = RatFunc(1)
    for s, x, y in p.origins():
        out = out * w.weight_at(s, x, y)
    return out


def gf_between(family: PathFamily | str, start: Point, end: Point, w: WeightScheme) -> RatFunc:
    """Weighted sum over all family paths from ``start`` to ``end`` by a column sweep."""
    family = PathFamily(family) if not isinstance(family, PathFamily) else family
    x0, y0 = start
    ex, ey = end
    if ex < x0 or y0 < 0 or ey < 0:
        return RatFunc(0)
    cols: dict[int, dict[int, RatFunc]] = {x0: {y0: RatFunc(1)}}
    for x in range(x0, ex):
        col = cols.pop(x, {})
        for y, acc in col.items():
            for s in family.steps:
                nx, ny = x + s.dx, y + s.dy
                if ny < 0 or nx > ex or abs(ey - ny) > ex - nx:
                    continue
                contrib = acc * w.weight_at(s, x, y)
                target = cols.setdefault(nx, {})
                target[ny] = target[ny] + contrib if ny in target else contrib
    return cols.get(ex, {}).get(ey, RatFunc(0))


def gf_paths_dp(family: PathFamily | str, m: int, n: int, w: WeightScheme) -> RatFunc:
    """Generating function of the family's paths from ``(0, 0)`` to ``(m, n)``."""
    return gf_between(family, (0, 0), (m, n), w)


def closed_gf_dyck(m: int, n: int) -> RatFunc:
    """Closed form of the q-Catalan-weighted Dyck paths from the origin to ``(m, n)``."""
    if m < 0 or n < 0 or n > m or (m - n) % 2:
        return RatFunc(0)
    r = (m - n) // 2
    num = qbinom(m // 2, n // 2) * qpoch_poly(a * q ** (1 + (n + 1) // 2), r)
    return RatFunc(num, qpoch_poly(a * b * q ** (2 + n), r))


@dataclass(frozen=True)
class MotzkinGFReport:
    m: int
    n: int
    dp: RatFunc
    printed: RatFunc
    printed_matches: bool
    binom_n2: RatFunc
    binom_n2_matches: bool

    @property
    def observed_law(self) -> str:
        if self.printed_matches and self.binom_n2_matches:
            return "both"
        if self.binom_n2_matches:
            return "q^binom(n,2)"
        if self.printed_matches:
            return "q^binom(m,n)"
        return "neither"


def _motzkin_closed(m: int, n: int, exponent: int) -> RatFunc:
    ab = a * b
    num = q**exponent * qbinom(m, n) * qpoch_poly(a * q, m) * (1 - ab * q ** (2 * n + 1))
    return RatFunc(num, qpoch_poly(ab * q ** (n + 1), m + 1))


def closed_gf_motzkin(m: int, n: int) -> MotzkinGFReport:
    """DP value of the Motzkin generating function with the printed closed form alongside.

    The printed prefactor ``q^binom(m, n)`` is compared as is and with the
    exponent ``binom(n, 2)``.
    """
    from math import comb

    if n < 0 or n > m:
        raise ValueError(f"need 0 <= n <= m, got m={m}, n={n}")
    dp = gf_paths_dp(PathFamily.MOTZKIN, m, n, MotzkinRemarkWeights())
    printed = _motzkin_closed(m, n, comb(m, n))
    alt = _motzkin_closed(m, n, comb(n, 2))
    return MotzkinGFReport(m, n, dp, printed, printed == dp, alt, alt == dp)


def omega_schroder(p: Path) -> int:
    """Number of lattice triangles below a Schroder path from its start to the axis.

    A rise from ``(x, y)`` adds ``x - y`` (coordinates relative to the start),
    a long level adds ``x - y + 1`` and a fall adds nothing.
    """
    if p.start[1] != 0 or p.end[1] != 0:
        raise ValueError("a Schroder path must start and end on the x-axis")
    x0 = p.start[0]
    total = 0
    for s, x, y in p.origins():
        if s is StepType.RISE:
            total += x - x0 - y
        elif s is StepType.LONG_LEVEL:
            total += x - x0 - y + 1
        elif s is StepType.LEVEL:
            raise ValueError("Schroder paths have no short level steps")
    return total


# -- Lindstrom-Gessel-Viennot ------------------------------------------------------------------


@dataclass(frozen=True)
class LGVResult:
    matrix: ExactMatrix
    det: RatFunc
    brute_force: RatFunc
    tuples: int

    @property
    def agrees(self) -> bool:
        return self.det == self.brute_force


def lgv_endpoints(n: int, t: int, x0: int | None = None) -> tuple[list[Point], list[Point]]:
    """``u_i = (x0 - 2(i-1), 0)`` and ``v_j = (x0 + 2(j+t-1), 0)`` for ``i, j = 1..n``."""
    x0 = 2 * (n - 1) if x0 is None else x0
    us = [(x0 - 2 * (i - 1), 0) for i in range(1, n + 1)]
    vs = [(x0 + 2 * (j + t - 1), 0) for j in range(1, n + 1)]
    return us, vs


def _nonintersecting_sum(families: Sequence[list[tuple[frozenset, RatFunc]]]) -> tuple[RatFunc, int]:
    total = RatFunc(0)
    count = 0

    def rec(k: int, used: frozenset, acc: RatFunc) -> None:
        nonlocal total, count
        if k == len(families):
            total = total + acc
            count += 1
            return
        for pts, wt in families[k]:
            if used.isdisjoint(pts):
                rec(k + 1, used | pts, acc * wt)

    rec(0, frozenset(), RatFunc(1))
    return total, count


def lgv_check(n: int, t: int, w: WeightScheme, height_bound: int | None = None,
              x0: int | None = None, family: PathFamily | str = PathFamily.DYCK,
              *, force: bool = False) -> LGVResult:
    """Path-matrix determinant and brute-force sum over vertex-disjoint n-paths."""
    family = PathFamily(family) if not isinstance(family, PathFamily) else family
    if (n > 3 or t > 3) and not force:
        raise GuardExceeded("LGV brute force is limited to n <= 3 and t <= 3")
    if height_bound is not None and isinstance(w, GenericWeights) and w.height_bound < height_bound:
        raise ValueError("weight scheme is declared to a smaller height than requested")
    us, vs = lgv_endpoints(n, t, x0)
    matrix = ExactMatrix.build(n, n, lambda i, j: gf_between(family, us[i], vs[j], w))
    det = det_exact(matrix)
    fams = []
    for i in range(n):
        paths = enumerate_paths(family, us[i], vs[i], force=force)
        fams.append([(frozenset(p.points()), path_weight(p, w)) for p in paths])
    brute, count = _nonintersecting_sum(fams)
    return LGVResult(matrix, det, brute, count)


# -- printed Dyck Hankel product formulas ---------------------------------------------------------


def _av(i: int) -> Poly:
    return var(f"a_{i}")


def _bv(i: int) -> Poly:
    return var(f"b_{i}")


def _prod(factors: Iterable[Poly]) -> Poly:
    out = Poly(1)
    for f in factors:
        out = out * f
    return out


def viennot_rhs(t: int, n: int) -> Poly:
    """Right-hand side of the Dyck Hankel product formula for shift ``t``, read literally."""
    if n < 1:
        raise ValueError("n must be positive")
    if t == 0:
        return _prod((_av(2 * i - 2) * _bv(2 * i - 1) * _av(2 * i - 1) * _bv(2 * i)) ** (n - i)
                     for i in range(1, n + 1))
    if t == 1:
        return _prod((_av(2 * i - 2) * _bv(2 * i - 1)) ** (n - i + 1)
                     * (_av(2 * i - 1) * _bv(2 * i)) ** (n - i) for i in range(1, n + 1))
    if t == 2:
        total = Poly(0)
        for k in range(n + 1):
            first = _prod(_prod(_av(s) for s in range(2 * i - 2)) * _av(2 * i - 2) ** 2
                          * _prod(_bv(s) for s in range(1, 2 * i)) * _bv(2 * i - 1) ** 2
                          for i in range(1, k + 1))
            second = _prod(_prod(_av(s) for s in range(2 * i)) * _prod(_bv(s) for s in range(1, 2 * i + 1))
                           for i in range(1, k + 1))
            total = total + first * second
        return total
    if t == 3:
        total = Poly(0)
        for k in range(n + 1):
            left = Poly(0)
            right = Poly(0)
            for l in range(k + 1):
                left = left + (
                    _prod(_prod(_av(s) for s in range(2 * i - 2)) * _av(2 * i - 2) ** 2 * _bv(2 * i - 1)
                          for i in range(1, l + 1))
                    * _prod(_prod(_av(s) for s in range(2 * i - 2)) * _av(2 * i - 2) * _av(2 * i - 1)
                            * _bv(2 * i) for i in range(l + 1, k + 1)))
                right = right + (
                    _prod(_prod(_bv(s) for s in range(1, 2 * i - 1)) * _bv(2 * i - 1) ** 2 * _av(2 * i - 2)
                          for i in range(1, l + 1))
                    * _prod(_prod(_bv(s) for s in range(1, 2 * i - 1)) * _bv(2 * i - 1) * _bv(2 * i)
                            * _av(2 * i - 1) for i in range(l + 1, k + 1)))
            tail = _prod(_prod(_av(s) for s in range(2 * i + 1)) * _prod(_bv(s) for s in range(1, 2 * i + 2))
                         for i in range(k + 1, n + 1))
            total = total + left * right * tail
        return total
    raise ValueError(f"the product formulas cover t in 0..3, got {t}")


def viennot_rhs_amended(t: int, n: int) -> Poly:
    """The shift-2 formula with its index slips repaired; other shifts as printed.

    The first product reads ``b_1...b_(2i-2) b_(2i-1)^2`` and the second
    runs over ``i = k+1..n``, matching the exact determinant.
    """
    if t != 2:
        return viennot_rhs(t, n)
    total = Poly(0)
    for k in range(n + 1):
        first = _prod(_prod(_av(s) for s in range(2 * i - 2)) * _av(2 * i - 2) ** 2
                      * _prod(_bv(s) for s in range(1, 2 * i - 1)) * _bv(2 * i - 1) ** 2
                      for i in range(1, k + 1))
        second = _prod(_prod(_av(s) for s in range(2 * i)) * _prod(_bv(s) for s in range(1, 2 * i + 1))
                       for i in range(k + 1, n + 1))
        total = total + first * second
    return total
