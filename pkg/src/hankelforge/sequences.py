"""Exact generators for the sequences whose Hankel determinants are studied."""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from math import comb

from .algebra import Poly
from .qseries import moment_mu, q

__all__ = ["SequenceKind", "seq_value", "seq_prefix", "delannoy", "q_schroder", "parse_kind"]


class SequenceKind(Enum):
    CATALAN = "catalan"
    B = "b"
    D = "d"
    MOTZKIN = "motzkin"
    SCHRODER = "schroder"
    Q_SCHRODER = "q-schroder"
    DELANNOY_DIAG = "delannoy-diag"
    Q_MOMENT = "q-moment"

    @property
    def symbolic(self) -> bool:
        return self in (SequenceKind.Q_SCHRODER, SequenceKind.Q_MOMENT)


def parse_kind(name: str | SequenceKind) -> SequenceKind:
    if isinstance(name, SequenceKind):
        return name
    try:
        return SequenceKind(name.lower().replace("_", "-"))
    except ValueError:
        known = ", ".join(k.value for k in SequenceKind)
        raise ValueError(f"unknown sequence kind {name!r} (known: {known})") from None


def _check(n: int) -> None:
    if n < 0:
        raise ValueError(f"sequence index must be nonnegative, got {n}")


@lru_cache(maxsize=None)
def _motzkin(n: int) -> int:
    if n < 2:
        return 1
    # iterate to keep recursion depth flat for large n
    vals = [_motzkin(k) for k in range(n - 1)]
    return _motzkin(n - 1) + sum(vals[k] * vals[n - 2 - k] for k in range(n - 1))


@lru_cache(maxsize=None)
def _schroder(n: int) -> int:
    if n == 0:
        return 1
    vals = [_schroder(k) for k in range(n)]
    return vals[n - 1] + sum(vals[k] * vals[n - 1 - k] for k in range(n))


@lru_cache(maxsize=None)
def q_schroder(n: int) -> Poly:
    """``S_n(q)`` from ``S_n = q^(2n-1) S_(n-1) + sum_k q^(2(k+1)(n-1-k)) S_(n-1-k) S_k``."""
    _check(n)
    if n == 0:
        return Poly(1)
    vals = [q_schroder(k) for k in range(n)]
    out = q ** (2 * n - 1) * vals[n - 1]
    for k in range(n):
        out = out + q ** (2 * (k + 1) * (n - 1 - k)) * vals[n - 1 - k] * vals[k]
    return out


@lru_cache(maxsize=None)
def _delannoy_table(size: int) -> tuple[tuple[int, ...], ...]:
    rows = [[1] * (size + 1)]
    for i in range(1, size + 1):
        row = [1]
        prev = rows[-1]
        for j in range(1, size + 1):
            row.append(prev[j] + prev[j - 1] + row[j - 1])
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def delannoy(a: int, b: int) -> int:
    """Number of E/N/NE lattice paths from the origin to ``(b, a)``."""
    if a < 0 or b < 0:
        raise ValueError("Delannoy arguments must be nonnegative")
    size = 1 << max(a, b, 1).bit_length()  # share tables across nearby sizes
    return _delannoy_table(size)[a][b]


def seq_value(kind: SequenceKind | str, n: int):
    """The ``n``-th term: an ``int``, a :class:`Poly` in ``q`` or a ``RatFunc``."""
    kind = parse_kind(kind)
    _check(n)
    if kind is SequenceKind.CATALAN:
        return comb(2 * n, n) // (n + 1)
    if kind is SequenceKind.B:
        return comb(2 * n + 1, n)
    if kind is SequenceKind.D:
        return comb(2 * n, n)
    if kind is SequenceKind.MOTZKIN:
        for k in range(0, n, 256):  # warm the cache bottom-up
            _motzkin(k)
        return _motzkin(n)
    if kind is SequenceKind.SCHRODER:
        for k in range(0, n, 256):
            _schroder(k)
        return _schroder(n)
    if kind is SequenceKind.Q_SCHRODER:
        return q_schroder(n)
    if kind is SequenceKind.DELANNOY_DIAG:
        return delannoy(n, n)
    return moment_mu(n)


def seq_prefix(kind: SequenceKind | str, n: int) -> list:
    """Values at ``0..n`` inclusive."""
    return [seq_value(kind, k) for k in range(n + 1)]
