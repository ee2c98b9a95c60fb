"""Identity registry and the verification harness behind ``hankelforge verify``.

Each identity expands into a grid of instances.  An instance computes both
sides exactly and compares them.  Identities graded ``report`` never fail a
run: their instances are marked REPORTED with the comparison in the note.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable

from . import closed_forms as cf
from . import contfrac as ctf
from . import linalg as la
from . import paths as pa
from . import qseries as qs
from .algebra import RatFunc, as_ratfunc
from .sequences import q_schroder, seq_prefix

__all__ = [
    "Status",
    "Instance",
    "VerifyOptions",
    "VerifyReport",
    "Identity",
    "REGISTRY",
    "UnknownIdentity",
    "registry_json",
    "thread_count",
    "run_identity",
    "SYMBOLIC_GUARD",
    "INTEGER_GUARD",
]

SYMBOLIC_GUARD = 6
INTEGER_GUARD = 16


class UnknownIdentity(KeyError):
    pass


class Status(Enum):
    EQUAL = "EQUAL"
    MISMATCH = "MISMATCH"
    SKIPPED = "SKIPPED"
    REPORTED = "REPORTED"


@dataclass(frozen=True)
class Instance:
    params: tuple[tuple[str, Any], ...]
    status: Status
    lhs: str = ""
    rhs: str = ""
    note: str = ""
    value: str = ""

    def param_text(self) -> str:
        return " ".join(f"{k}={_fmt_param(v)}" for k, v in self.params)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"params": {k: v for k, v in self.params}, "status": self.status.value}
        if self.lhs or self.rhs:
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        if self.value:
            out["value"] = self.value
        if self.note:
            out["note"] = self.note
        return out


def _fmt_param(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(str(x) for x in v) + "]"
    return str(v)


@dataclass(frozen=True)
class VerifyOptions:
    n_max: int | None = None
    t: tuple[int, ...] | None = None
    ks: tuple[int, ...] | None = None
    order: int | None = None
    force: bool = False
    threads: int | None = None


@dataclass
class VerifyReport:
    identity: str
    title: str
    grade: str
    instances: list[Instance]
    elapsed: float | None = None

    @property
    def mismatches(self) -> int:
        return sum(i.status is Status.MISMATCH for i in self.instances)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def counts(self) -> dict[str, int]:
        return {s.value: sum(i.status is s for i in self.instances) for s in Status}

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "title": self.title,
            "grade": self.grade,
            "verdict": "pass" if self.ok else "fail",
            "counts": self.counts(),
            "instances": [i.to_dict() for i in self.instances],
        }
        if self.elapsed is not None:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def to_text(self) -> str:
        lines = [f"{self.identity}: {self.title} [{self.grade}]"]
        for inst in self.instances:
            line = f"  {inst.param_text():<28} {inst.status.value}"
            if inst.value:
                line += f"  = {inst.value}"
            if inst.note:
                line += f"  {inst.note}"
            lines.append(line)
            if inst.status is Status.MISMATCH or (inst.status is Status.REPORTED and inst.lhs != inst.rhs):
                lines.append(f"    lhs: {inst.lhs}")
                lines.append(f"    rhs: {inst.rhs}")
        c = self.counts()
        summary = ", ".join(f"{v} {k.lower()}" for k, v in c.items() if v)
        lines.append(f"  verdict: {'pass' if self.ok else 'FAIL'} ({summary or 'no instances'})")
        if self.elapsed is not None:
            lines.append(f"  elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)


# -- identity definitions ---------------------------------------------------------------------

Params = dict[str, Any]
Grid = Callable[[VerifyOptions], list[Params]]
Sides = Callable[[Params], tuple[Any, Any]]


@dataclass(frozen=True)
class Identity:
    id: str
    title: str
    run: Sides
    grid: Grid
    grade: str = "theorem"  # theorem | conjecture | report
    symbolic: bool = True
    size_key: str | None = "n"
    note: Callable[[Params], str] | None = None

    def describe(self) -> dict:
        return {"id": self.id, "title": self.title, "grade": self.grade,
                "arithmetic": "symbolic" if self.symbolic else "integer"}


def _nrange(opts: VerifyOptions, default: int, lo: int = 1) -> range:
    top = default if opts.n_max is None else opts.n_max
    return range(lo, top + 1)


def _trange(opts: VerifyOptions, default: Iterable[int]) -> tuple[int, ...]:
    return tuple(default) if opts.t is None else opts.t


def _grid_n(default: int, lo: int = 1) -> Grid:
    return lambda o: [{"n": n} for n in _nrange(o, default, lo)]


def _grid_nt(default_n: int, default_t: Iterable[int], lo: int = 1) -> Grid:
    ts = tuple(default_t)
    return lambda o: [{"n": n, "t": t} for n in _nrange(o, default_n, lo) for t in _trange(o, ts)]


def _grid_ij(default: int) -> Grid:
    return lambda o: [{"i": i, "j": j} for i in _nrange(o, default, 0) for j in _nrange(o, default, 0)]


def _grid_ks(default_n: int, extra: int) -> Grid:
    def grid(o: VerifyOptions) -> list[Params]:
        if o.ks is not None:
            return [{"n": len(o.ks), "ks": list(o.ks)}]
        return [{"n": n, "ks": list(ks)}
                for n in _nrange(o, default_n)
                for ks in itertools.combinations(range(n + extra + 1), n)]
    return grid


def _det_hankel(kind: str, n: int, t: int) -> RatFunc:
    return la.det_exact(la.hankel_matrix(kind, n, t))


def _int(x: Any) -> Any:
    r = as_ratfunc(x)
    return r.constant_value() if r.is_constant else r


# q-moment determinants


def _q_catalan(p: Params):
    return _det_hankel("q-moment", p["n"], 0), cf.rhs_q_catalan_det(p["n"])


def _q_general(p: Params):
    return _det_hankel("q-moment", p["n"], p["t"]), cf.rhs_q_general(p["n"], p["t"])


def _q_kratt(p: Params):
    return la.det_exact(la.generalized_hankel("q-moment", p["ks"], p["n"])), cf.rhs_q_kratt(p["n"], p["ks"])


def _kratt_classical(p: Params):
    return (_int(la.det_exact(la.generalized_hankel("catalan", p["ks"], p["n"]))),
            cf.rhs_kratt_classical(p["n"], p["ks"]))


# classical integer determinants

_CLASSICAL_KIND = {
    "catalan-t": "catalan", "b-t": "b", "d-t": "d",
    "aigner-m0": "motzkin", "aigner-m1": "motzkin",
    "schroder-01": "schroder", "schroder-2": "schroder",
    "delannoy-0": "delannoy-diag", "delannoy-1": "delannoy-diag", "delannoy-2": "delannoy-diag",
}
_FIXED_SHIFT = {"aigner-m0": 0, "aigner-m1": 1, "schroder-2": 2,
                "delannoy-0": 0, "delannoy-1": 1, "delannoy-2": 2}


def _classical(tag: str, evaluator=cf.rhs_classical) -> Sides:
    def run(p: Params):
        t = p.get("t", _FIXED_SHIFT.get(tag, 0))
        return _int(_det_hankel(_CLASSICAL_KIND[tag], p["n"], t)), evaluator(tag, p["n"], t)
    return run


def _classical_limit(p: Params):
    tag = p["family"]
    return (_int(_det_hankel(_CLASSICAL_KIND[tag], p["n"], p["t"])),
            cf.rhs_classical_limit(tag, p["n"], p["t"]))


def _grid_limit(o: VerifyOptions) -> list[Params]:
    return [{"family": f, "n": n, "t": t} for f in ("catalan-t", "b-t", "d-t")
            for n in _nrange(o, 7) for t in _trange(o, range(5))]


# q-Schroder


def _q_schroder(p: Params):
    t = p.get("t", 2)
    return cf.q_schroder_det(p["n"], t), cf.rhs_q_schroder(p["n"], t)


def _q_schroder_3(p: Params):
    return _int(cf.q_schroder_det(p["n"], 3).evaluate({"q": 1})), cf.rhs_s3_at_1(p["n"])


def _q_schroder_lemma(p: Params):
    pairs = cf.lemma_sides(p["lemma"], p["n"])
    return tuple(l for l, _ in pairs), tuple(r for _, r in pairs)


def _grid_lemmas(o: VerifyOptions) -> list[Params]:
    return [{"lemma": name, "n": n} for name, (_, lo) in cf.LEMMAS.items() for n in _nrange(o, 6, lo)]


def _q_schroder_paths(p: Params):
    n = p["n"]
    total = RatFunc(0)
    for path in pa.enumerate_paths(pa.PathFamily.SCHRODER, (0, 0), (2 * n, 0)):
        total = total + qs.q ** pa.omega_schroder(path)
    return q_schroder(n), total


# lattice paths


def _dyck_moment(m: int, bound: int) -> RatFunc:
    return pa.gf_paths_dp(pa.PathFamily.DYCK, 2 * m, 0, pa.GenericWeights(bound))


def _lgv(p: Params):
    n, t = p["n"], p["t"]
    res = pa.lgv_check(n, t, pa.GenericWeights(n + t + 1))
    return res.brute_force, res.det


def _viennot(amended: bool) -> Sides:
    def run(p: Params):
        n, t = p["n"], p["t"]
        bound = 2 * n + t  # semilength m reaches height m
        lhs = la.det_exact(la.ExactMatrix.build(n, n, lambda i, j: _dyck_moment(i + j + t, bound)))
        rhs = pa.viennot_rhs_amended(t, n) if amended else pa.viennot_rhs(t, n)
        return lhs, rhs
    return run


def _dyck_gf(p: Params):
    m, k = p["m"], p["k"]
    return pa.gf_paths_dp(pa.PathFamily.DYCK, m, k, pa.QCatalanWeights()), pa.closed_gf_dyck(m, k)


def _grid_dyck(o: VerifyOptions) -> list[Params]:
    top = 10 if o.n_max is None else o.n_max
    return [{"m": m, "k": k} for m in range(top + 1) for k in range(m + 1)]


def _dyck_example(p: Params):
    ab = qs.a * qs.b
    printed = RatFunc((1 - qs.a * qs.q) * (1 - qs.a * qs.q**2), (1 - ab * qs.q**2) * (1 - ab * qs.q**3))
    return pa.gf_paths_dp(pa.PathFamily.DYCK, 4, 0, pa.QCatalanWeights()), printed


def _motzkin_gf(p: Params):
    rep = pa.closed_gf_motzkin(p["m"], p["k"])
    return rep.dp, rep.printed


def _motzkin_note(p: Params) -> str:
    return "observed exponent law: " + pa.closed_gf_motzkin(p["m"], p["k"]).observed_law


def _grid_motzkin(o: VerifyOptions) -> list[Params]:
    top = 5 if o.n_max is None else o.n_max
    return [{"m": m, "k": k} for m in range(top + 1) for k in range(m + 1)]


# continued fractions


def _roundtrip(p: Params):
    order = p["order"]
    mus = seq_prefix(p["kind"], order - 1)
    series = ctf.j_to_series(ctf.moments_to_j(mus), order)
    return tuple(series[k] for k in range(order)), tuple(as_ratfunc(m) for m in mus)


def _grid_roundtrip(o: VerifyOptions) -> list[Params]:
    order = 10 if o.order is None else o.order
    return [{"kind": k, "order": order} for k in ("catalan", "motzkin", "q-moment")]


def _delta_product(p: Params):
    n = p["n"]
    jf = ctf.s_to_j(ctf.little_qjacobi_sfraction(2 * n))
    return _det_hankel("q-moment", n, 0), ctf.delta_from_lambdas(jf, n)


def _recurrence(p: Params):
    n = p["n"]
    ref = ctf.moments_to_j([qs.moment_mu(k) for k in range(2 * n + 2)])
    A, C = ctf.little_qjacobi_recurrence(n)
    return ref.b[n], A + C


def _recurrence_lambda(p: Params):
    n = p["n"]
    ref = ctf.moments_to_j([qs.moment_mu(k) for k in range(2 * n + 1)])
    A_prev, _ = ctf.little_qjacobi_recurrence(n - 1)
    _, C = ctf.little_qjacobi_recurrence(n)
    return ref.lam[n - 1], A_prev * C


def _sfraction(p: Params):
    order = p["order"]
    series = ctf.s_to_series(ctf.little_qjacobi_sfraction(order), order)
    return tuple(series[k] for k in range(order)), tuple(qs.moment_mu(k) for k in range(order))


def _grid_order(default: int) -> Grid:
    return lambda o: [{"order": default if o.order is None else o.order}]


# LU factorizations and hypergeometric sums


def _q_catalan_lu(p: Params):
    return la.qcatalan_lu(p["n"]).product(), la.hankel_matrix("q-moment", p["n"], 0)


def _motzkin_lu(p: Params):
    return la.motzkin_lu(p["n"]).product(), la.hankel_matrix("motzkin", p["n"], 0)


def _addition(p: Params):
    return qs.addition_formula_sides(p["i"], p["j"])


def _dougall(p: Params):
    return qs.q_dougall_sides(p["i"], p["j"])


def _dougall_phi(p: Params):
    i, j = p["i"], p["j"]
    return qs.phi_terminating(qs.dougall_spec(i, j)), qs.moment_mu(i + j) / (qs.moment_mu(i) * qs.moment_mu(j))


QUADRATIC_GRID = [(0, Fraction(3, 2), 2), (-2, Fraction(3, 2), 2), (-4, Fraction(5, 2), 2),
                  (-1, Fraction(1, 2), Fraction(1, 3)), (-3, 2, -1), (-5, Fraction(7, 2), Fraction(2, 5))]


def _quadratic(p: Params):
    return qs.quadratic_transform_sides(p["a"], Fraction(p["b"]), Fraction(p["z"]))


def _grid_quadratic(o: VerifyOptions) -> list[Params]:
    return [{"a": a_, "b": str(b_), "z": str(z)} for a_, b_, z in QUADRATIC_GRID]


def _burchnall(p: Params):
    i, j = p["i"], p["j"]
    return qs.burchnall_chaundy_sides(Fraction(3, 2), 3 + i + j, 3, -j, 4)


def _kratt_lemma(p: Params):
    return cf.kratt_lemma_sides(*cf.kratt_symbols(p["n"]))


def _viennot_grade_note(p: Params) -> str:
    return "printed formula compared, not asserted" if p["t"] >= 2 else ""


_IDENTITIES = [
    Identity("q-catalan-det", "q-Catalan Hankel determinant", _q_catalan, _grid_n(6)),
    Identity("q-general-hankel", "shifted q-moment Hankel determinant", _q_general, _grid_nt(4, range(4))),
    Identity("q-kratt", "q-moment determinant with free row shifts", _q_kratt, _grid_ks(4, 2)),
    Identity("kratt-classical", "Catalan determinant with free row shifts", _kratt_classical,
             _grid_ks(5, 3), symbolic=False),
    Identity("catalan-t", "shifted Catalan Hankel determinant", _classical("catalan-t"),
             _grid_nt(7, range(5)), symbolic=False),
    Identity("b-t", "shifted B Hankel determinant (as printed)", _classical("b-t"),
             _grid_nt(7, range(5)), symbolic=False),
    Identity("d-t", "shifted D Hankel determinant (as printed)", _classical("d-t"),
             _grid_nt(7, range(5)), symbolic=False),
    Identity("b-t-amended", "shifted B Hankel determinant, product range 1<=i<=j<=t",
             _classical("b-t", cf.rhs_classical_amended), _grid_nt(7, range(5)), symbolic=False),
    Identity("d-t-amended", "shifted D Hankel determinant, product range 0<=i<j<=t-1",
             _classical("d-t", cf.rhs_classical_amended), _grid_nt(7, range(5)), symbolic=False),
    Identity("catalan-family-limit", "Catalan, B and D determinants via the q -> 1 limit",
             _classical_limit, _grid_limit, symbolic=False),
    Identity("aigner-m0", "Motzkin Hankel determinant", _classical("aigner-m0"), _grid_n(13), symbolic=False),
    Identity("aigner-m1", "shifted Motzkin Hankel determinant, period-6 pattern", _classical("aigner-m1"),
             _grid_n(13), symbolic=False),
    Identity("schroder-01", "Schroder Hankel determinants, shifts 0 and 1", _classical("schroder-01"),
             _grid_nt(8, (0, 1)), symbolic=False),
    Identity("schroder-2", "Schroder Hankel determinant, shift 2", _classical("schroder-2"),
             _grid_n(8), symbolic=False),
    Identity("q-schroder-01", "q-Schroder determinants, shifts 0 and 1", _q_schroder, _grid_nt(6, (0, 1))),
    Identity("q-schroder-2", "q-Schroder determinant, shift 2", _q_schroder, _grid_n(6)),
    Identity("q-schroder-3-at-1", "q-Schroder determinant, shift 3 at q = 1", _q_schroder_3, _grid_n(6)),
    Identity("q-schroder-lemmas", "q-Schroder scaling, shift and condensation lemmas",
             _q_schroder_lemma, _grid_lemmas),
    Identity("q-schroder-paths", "q-Schroder recurrence equals the triangle-weighted path sum",
             _q_schroder_paths, _grid_n(7, 0), size_key=None),
    Identity("delannoy-0", "central Delannoy Hankel determinant", _classical("delannoy-0"),
             _grid_n(7), grade="conjecture", symbolic=False),
    Identity("delannoy-1", "central Delannoy Hankel determinant, shift 1", _classical("delannoy-1"),
             _grid_n(7), grade="conjecture", symbolic=False),
    Identity("delannoy-2", "central Delannoy Hankel determinant, shift 2", _classical("delannoy-2"),
             _grid_n(7), grade="conjecture", symbolic=False),
    Identity("kratt-lemma", "Krattenthaler's determinant lemma", _kratt_lemma, _grid_n(4)),
    Identity("lgv", "non-intersecting Dyck paths equal the path-matrix determinant", _lgv,
             _grid_nt(3, range(4))),
    Identity("viennot-t", "Dyck Hankel product formulas, shifts 0 to 3", _viennot(False),
             _grid_nt(3, range(4)), note=_viennot_grade_note),
    Identity("viennot-t-amended", "Dyck Hankel product formula, shift 2 repaired", _viennot(True),
             _grid_nt(3, (2,))),
    Identity("dyck-gf", "q-Catalan weighted Dyck path generating function", _dyck_gf, _grid_dyck,
             size_key=None),
    Identity("dyck-gf-example", "Dyck paths to (4,0) against the printed value", _dyck_example,
             lambda o: [{}], size_key=None),
    Identity("motzkin-gf", "Motzkin path generating function (printed prefactor)", _motzkin_gf,
             _grid_motzkin, grade="report", size_key=None, note=_motzkin_note),
    Identity("jfraction-roundtrip", "moments to J-fraction and back", _roundtrip, _grid_roundtrip,
             size_key=None),
    Identity("sfraction-moments", "little q-Jacobi S-fraction expands to the moments", _sfraction,
             _grid_order(8), size_key=None),
    Identity("delta-product", "Hankel determinant as a product of J-fraction coefficients",
             _delta_product, _grid_n(5)),
    Identity("qjacobi-b", "J-fraction b_n equals A_n + C_n", _recurrence, _grid_n(4, 0)),
    Identity("qjacobi-lambda", "J-fraction lambda_n equals A_(n-1) C_n", _recurrence_lambda, _grid_n(4)),
    Identity("q-catalan-lu", "closed-form LU factors of the q-moment Hankel matrix", _q_catalan_lu,
             _grid_n(5)),
    Identity("motzkin-lu", "closed-form LU factors of the Motzkin Hankel matrix", _motzkin_lu,
             _grid_n(9), symbolic=False),
    Identity("addition-formula", "2F1 addition formula at argument 4", _addition, _grid_ij(8),
             symbolic=False, size_key="i"),
    Identity("q-dougall", "terminating q-Dougall sum", _dougall, _grid_ij(5), size_key="i"),
    Identity("q-dougall-phi", "q-Dougall sum as a very-well-poised 6phi5", _dougall_phi, _grid_ij(5),
             size_key="i"),
    Identity("quadratic-transform", "quadratic 2F1 transformation, terminating cases", _quadratic,
             _grid_quadratic, symbolic=False, size_key=None),
    Identity("burchnall-chaundy", "Burchnall-Chaundy expansion, terminating cases", _burchnall,
             _grid_ij(8), symbolic=False, size_key="i"),
]

REGISTRY: dict[str, Identity] = {i.id: i for i in sorted(_IDENTITIES, key=lambda x: x.id)}


def registry_json() -> str:
    return json.dumps([REGISTRY[k].describe() for k in REGISTRY], indent=2)


# -- running ------------------------------------------------------------------------------------


def thread_count(requested: int | None = None) -> int:
    """Pool size: ``requested`` or the CPU count, capped by ``HANKELFORGE_THREADS``."""
    n = requested or os.cpu_count() or 1
    cap = os.environ.get("HANKELFORGE_THREADS")
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise ValueError(f"HANKELFORGE_THREADS must be an integer, got {cap!r}") from None
    return max(1, n)


def _text(x: Any) -> str:
    if isinstance(x, tuple):
        return "[" + ", ".join(_text(y) for y in x) + "]"
    return str(x)


def _equal(lhs: Any, rhs: Any) -> bool:
    if isinstance(lhs, tuple) or isinstance(rhs, tuple):
        return (isinstance(lhs, tuple) and isinstance(rhs, tuple) and len(lhs) == len(rhs)
                and all(_equal(x, y) for x, y in zip(lhs, rhs)))
    if isinstance(lhs, (RatFunc, la.ExactMatrix)) or isinstance(rhs, (RatFunc, la.ExactMatrix)):
        if isinstance(lhs, la.ExactMatrix) or isinstance(rhs, la.ExactMatrix):
            return lhs == rhs
        return as_ratfunc(lhs) == as_ratfunc(rhs)
    try:
        return as_ratfunc(lhs) == as_ratfunc(rhs)
    except TypeError:
        return lhs == rhs


def _guard(ident: Identity, p: Params, force: bool) -> str | None:
    if force or ident.size_key is None or ident.size_key not in p:
        return None
    limit = SYMBOLIC_GUARD if ident.symbolic else INTEGER_GUARD
    if p[ident.size_key] > limit:
        kind = "symbolic" if ident.symbolic else "integer"
        return f"guard: {kind} {ident.size_key} <= {limit} (use --force)"
    return None


def _run_one(ident: Identity, p: Params, force: bool) -> Instance:
    params = tuple(p.items())
    reason = _guard(ident, p, force)
    if reason:
        return Instance(params, Status.SKIPPED, note=reason)
    try:
        lhs, rhs = ident.run(p)
    except pa.GuardExceeded as exc:
        return Instance(params, Status.SKIPPED, note=f"guard: {exc}")
    same = _equal(lhs, rhs)
    note = ident.note(p) if ident.note else ""
    report_only = ident.grade == "report" or (ident.id == "viennot-t" and p.get("t", 0) >= 2)
    if report_only:
        verdict = "sides agree" if same else "sides differ"
        return Instance(params, Status.REPORTED, _text(lhs), _text(rhs),
                        f"{verdict}; {note}" if note else verdict)
    if same:
        shown = _text(rhs)
        return Instance(params, Status.EQUAL, note=note, value=shown if len(shown) <= VALUE_WIDTH else "")
    return Instance(params, Status.MISMATCH, _text(lhs), _text(rhs), note)


VALUE_WIDTH = 40


def _sort_key(inst: Instance) -> tuple:
    return tuple(tuple(v) if isinstance(v, list) else v for _, v in inst.params)


def run_identity(identity: str, opts: VerifyOptions | None = None, *, timing: bool = False) -> VerifyReport:
    """Expand the identity's grid and verify every instance in a bounded pool."""
    opts = opts or VerifyOptions()
    if identity not in REGISTRY:
        raise UnknownIdentity(identity)
    ident = REGISTRY[identity]
    grid = ident.grid(opts)
    start = time.perf_counter()
    workers = min(thread_count(opts.threads), max(1, len(grid)))
    if workers == 1:
        instances = [_run_one(ident, p, opts.force) for p in grid]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            instances = list(pool.map(lambda p: _run_one(ident, p, opts.force), grid))
    instances.sort(key=_sort_key)
    grade = "conjecture: verified-to-n" if ident.grade == "conjecture" else ident.grade
    elapsed = time.perf_counter() - start if timing else None
    return VerifyReport(ident.id, ident.title, grade, instances, elapsed)
