"""Acceptance criteria 1-13, one PASS/FAIL line each.

Run under pytest or directly with ``python3 tests/test_acceptance.py``.
Each criterion lists the registry identities it covers plus the grid options
that pin it to the stated bounds.  Identities graded ``report`` never fail.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest
from hypothesis import given, settings

sys.path.insert(0, str(Path(__file__).parent))

from properties import (  # noqa: E402
    check_desnanot_jacobi,
    check_gcd,
    check_ring_axioms,
    check_roundtrip,
    int_matrices,
    nonzero_polys,
    polys,
    ratfuncs,
    symbolic_matrices,
)

from hankelforge.verify import Status, VerifyOptions, run_identity  # noqa: E402

CRITERIA: dict[int, tuple[str, list[tuple[str, VerifyOptions]], float | None]] = {
    1: ("q-Catalan Hankel determinant, n <= 6",
        [("q-catalan-det", VerifyOptions(n_max=6))], 60.0),
    2: ("shifted q-moment Hankel determinants, n <= 4, t <= 3",
        [("q-general-hankel", VerifyOptions(n_max=4, t=(0, 1, 2, 3)))], 60.0),
    3: ("free-shift determinants, q-analogue n <= 4 and classical n <= 5",
        [("q-kratt", VerifyOptions(n_max=4)), ("kratt-classical", VerifyOptions(n_max=5))], 120.0),
    4: ("Catalan, B and D shifted determinants as printed, n <= 7, t <= 4",
        [(k, VerifyOptions(n_max=7, t=(0, 1, 2, 3, 4))) for k in ("catalan-t", "b-t", "d-t")], None),
    5: ("Motzkin Hankel determinants, n <= 13",
        [("aigner-m0", VerifyOptions(n_max=13)), ("aigner-m1", VerifyOptions(n_max=13))], None),
    6: ("Schroder Hankel determinants, shifts 0 to 2, n <= 8",
        [("schroder-01", VerifyOptions(n_max=8)), ("schroder-2", VerifyOptions(n_max=8))], None),
    7: ("q-Schroder determinants, lemma chain, shift 3 at 1 and path sum",
        [("q-schroder-01", VerifyOptions(n_max=6)), ("q-schroder-2", VerifyOptions(n_max=6)),
         ("q-schroder-lemmas", VerifyOptions(n_max=6)), ("q-schroder-3-at-1", VerifyOptions(n_max=6)),
         ("q-schroder-paths", VerifyOptions(n_max=7))], None),
    8: ("Delannoy determinants (conjecture), n <= 7",
        [(k, VerifyOptions(n_max=7)) for k in ("delannoy-0", "delannoy-1", "delannoy-2")], None),
    9: ("non-intersecting paths and Dyck product formulas, n <= 3",
        [("lgv", VerifyOptions(n_max=3, t=(0, 1, 2, 3))),
         ("viennot-t", VerifyOptions(n_max=3, t=(0, 1, 2, 3)))], None),
    10: ("Dyck path generating functions, m <= 10, and the worked example",
         [("dyck-gf", VerifyOptions(n_max=10)), ("dyck-gf-example", VerifyOptions())], None),
    11: ("J-fraction roundtrip, determinant product and b_n = A_n + C_n",
         [("jfraction-roundtrip", VerifyOptions(order=10)), ("delta-product", VerifyOptions(n_max=5)),
          ("qjacobi-b", VerifyOptions(n_max=4))], None),
    12: ("LU factors and hypergeometric checks",
         [("q-catalan-lu", VerifyOptions(n_max=5)), ("motzkin-lu", VerifyOptions(n_max=9)),
          ("addition-formula", VerifyOptions(n_max=8)), ("q-dougall", VerifyOptions(n_max=5)),
          ("quadratic-transform", VerifyOptions()), ("burchnall-chaundy", VerifyOptions())], None),
}

PROPERTY_TARGET = 1000


def run_criterion(number: int) -> tuple[bool, str]:
    title, checks, budget = CRITERIA[number]
    start = time.perf_counter()
    parts, ok = [], True
    for ident, opts in checks:
        rep = run_identity(ident, opts)
        c = rep.counts()
        skipped = c[Status.SKIPPED.value]
        good = rep.ok and skipped == 0 and len(rep.instances) > 0
        ok &= good
        shown = f"{ident} {c[Status.EQUAL.value]} equal"
        if c[Status.MISMATCH.value]:
            shown += f", {c[Status.MISMATCH.value]} mismatch"
        if c[Status.REPORTED.value]:
            shown += f", {c[Status.REPORTED.value]} reported"
        if skipped:
            shown += f", {skipped} skipped"
        parts.append(shown)
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed > budget:
        ok = False
        parts.append(f"over budget {elapsed:.0f}s > {budget:.0f}s")
    return ok, f"{title}: " + "; ".join(parts)


def run_properties() -> tuple[bool, str]:
    """Drive the shared property bodies and count every generated case."""
    counts = {"ring": 0, "gcd": 0, "desnanot-jacobi": 0, "roundtrip": 0}

    @settings(max_examples=300, deadline=None, database=None)
    @given(polys(), polys(), polys())
    def ring(x, y, z):
        counts["ring"] += 1
        check_ring_axioms(x, y, z)

    @settings(max_examples=250, deadline=None, database=None)
    @given(polys(4), polys(4), nonzero_polys(3))
    def gcd(f, g, h):
        counts["gcd"] += 1
        check_gcd(f, g, h)

    @settings(max_examples=170, deadline=None, database=None)
    @given(int_matrices())
    def dj_int(m):
        counts["desnanot-jacobi"] += 1
        check_desnanot_jacobi(m)

    @settings(max_examples=80, deadline=None, database=None)
    @given(symbolic_matrices())
    def dj_sym(m):
        counts["desnanot-jacobi"] += 1
        check_desnanot_jacobi(m)

    @settings(max_examples=250, deadline=None, database=None)
    @given(ratfuncs())
    def roundtrip(x):
        counts["roundtrip"] += 1
        check_roundtrip(x)

    failure = None
    for fn in (ring, gcd, dj_int, dj_sym, roundtrip):
        try:
            fn()
        except AssertionError as exc:
            failure = f"{fn.__name__}: {exc}"
            break
    total = sum(counts.values())
    detail = ", ".join(f"{k} {v}" for k, v in counts.items())
    ok = failure is None and total >= PROPERTY_TARGET
    text = f"property suites, {total} randomized cases ({detail})"
    if failure:
        text += f"; failed {failure}"
    return ok, text


def _line(number: int, ok: bool, text: str) -> str:
    return f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, text = run_criterion(number)
    with capsys.disabled():
        print("\n" + _line(number, ok, text))
    assert ok, text


def test_criterion_13_properties(capsys):
    ok, text = run_properties()
    with capsys.disabled():
        print("\n" + _line(13, ok, text))
    assert ok, text


def main() -> int:
    failed = 0
    for number in sorted(CRITERIA):
        ok, text = run_criterion(number)
        failed += not ok
        print(_line(number, ok, text), flush=True)
    ok, text = run_properties()
    failed += not ok
    print(_line(13, ok, text), flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
