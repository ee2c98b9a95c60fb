"""Dense truncated power series with rational-function coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ratfunc import RatFunc, as_ratfunc

__all__ = ["TruncatedSeries"]

_ZERO = RatFunc(0)


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum(coeffs[k] * var**k)`` modulo ``var**order``.

    Arithmetic never extends the order: combining two series truncates at
    the smaller of their orders.
    """

    coeffs: tuple[RatFunc, ...]
    order: int
    var: str = "t"

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        cs = tuple(as_ratfunc(c) for c in self.coeffs[: self.order])
        cs = cs + (_ZERO,) * (self.order - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def constant(cls, c, order: int, var: str = "t") -> "TruncatedSeries":
        return cls((as_ratfunc(c),), order, var)

    @classmethod
    def monomial(cls, c, power: int, order: int, var: str = "t") -> "TruncatedSeries":
        cs = [_ZERO] * order
        if power < order:
            cs[power] = as_ratfunc(c)
        return cls(tuple(cs), order, var)

    def __getitem__(self, k: int) -> RatFunc:
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def _check(self, other: "TruncatedSeries") -> int:
        if other.var != self.var:
            raise ValueError(f"series in {self.var!r} and {other.var!r} do not mix")
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries.constant(other, self.order, self.var)
        n = self._check(other)
        return TruncatedSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n)), n, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_ratfunc(other)
            return TruncatedSeries(tuple(x * c for x in self.coeffs), self.order, self.var)
        n = self._check(other)
        out = []
        for k in range(n):
            acc = _ZERO
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if not a.is_zero and not b.is_zero:
                    acc = acc + a * b
            out.append(acc)
        return TruncatedSeries(tuple(out), n, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self.coeffs[0] if self.order else _ZERO
        if c0.is_zero:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = c0.inverse()
        out = [inv0]
        for k in range(1, self.order):
            acc = _ZERO
            for i in range(1, k + 1):
                a = self.coeffs[i]
                if not a.is_zero and not out[k - i].is_zero:
                    acc = acc + a * out[k - i]
            out.append(-(acc * inv0))
        return TruncatedSeries(tuple(out), self.order, self.var)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * as_ratfunc(other).inverse()

    def __rtruediv__(self, other):
        return TruncatedSeries.constant(other, self.order, self.var) * self.inverse()

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``var**k``."""
        return TruncatedSeries((_ZERO,) * k + self.coeffs, self.order, self.var)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order), self.var)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.var == other.var
            and self.order == other.order
            and all(x == y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.var, self.order, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            s = str(c)
            if k and not (c.is_constant and c.num.is_monomial):
                s = f"({s})"
            if k == 0:
                parts.append(s)
            elif k == 1:
                parts.append(f"{s}*{self.var}")
            else:
                parts.append(f"{s}*{self.var}^{k}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.var}^{self.order})"


def series_from(values: Sequence, order: int | None = None, var: str = "t") -> TruncatedSeries:
    vals = tuple(as_ratfunc(v) for v in values)
    return TruncatedSeries(vals, len(vals) if order is None else order, var)
