"""``hankelforge`` command line: verify, table, det, paths, contfrac.

Exit codes: 0 when everything checked agrees, 1 on a mismatch, 2 on a
usage error (bad arguments, unknown names, degenerate input).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .algebra import ParseError, RatFunc, parse
from .contfrac import (
    DegenerateMoments,
    InsufficientCoefficients,
    JFraction,
    j_to_series,
    little_qjacobi_sfraction,
    moments_to_j,
    resolve_qjacobi_variant,
    s_to_j,
)
from .linalg import Variant, det_exact, generalized_hankel, hankel_matrix, q_schroder_matrix
from .paths import (
    GenericWeights,
    GuardExceeded,
    OmegaWeights,
    PathFamily,
    QCatalanWeights,
    UnitWeights,
    enumerate_paths,
    gf_paths_dp,
    lgv_check,
)
from .sequences import SequenceKind, parse_kind, seq_prefix
from .verify import REGISTRY, UnknownIdentity, VerifyOptions, registry_json, run_identity

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _value_text(v: Any) -> str:
    if isinstance(v, RatFunc) and v.is_constant:
        return str(v.constant_value())
    return str(v)


# -- verify ------------------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list or args.identity is None:
        if args.json:
            print(registry_json())
        else:
            for ident in REGISTRY.values():
                print(f"{ident.id:<24} {ident.grade:<11} {ident.title}")
        return EXIT_OK
    ids = list(REGISTRY) if args.identity == "all" else [args.identity]
    if args.identity != "all" and args.identity not in REGISTRY:
        raise UsageError(f"unknown identity {args.identity!r}; run 'hankelforge verify --list'")
    opts = VerifyOptions(n_max=args.n_max, t=args.t, ks=args.ks, order=args.order, force=args.force)
    reports = []
    for ident in ids:
        try:
            reports.append(run_identity(ident, opts, timing=args.timing))
        except UnknownIdentity:
            raise UsageError(f"unknown identity {ident!r}") from None
    ok = all(r.ok for r in reports)
    if args.json:
        payload: Any = reports[0].to_dict() if len(reports) == 1 else {
            "verdict": "pass" if ok else "fail", "reports": [r.to_dict() for r in reports]}
        print(json.dumps(payload, indent=2))
    else:
        print("\n\n".join(r.to_text() for r in reports))
        if len(reports) > 1:
            failed = [r.identity for r in reports if not r.ok]
            print(f"\noverall: {'pass' if ok else 'FAIL'}" + (f" ({', '.join(failed)})" if failed else ""))
    return EXIT_OK if ok else EXIT_MISMATCH


# -- table and det ------------------------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    kind = parse_kind(args.kind)
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    values = seq_prefix(kind, args.n)
    texts = [_value_text(RatFunc(v) if not isinstance(v, RatFunc) else v) for v in values]
    if kind.symbolic:
        text = "\n".join(f"{k}: {t}" for k, t in enumerate(texts))
    else:
        text = " ".join(texts)
    _emit(args, {"kind": kind.value, "values": texts}, text)
    return EXIT_OK


def cmd_det(args: argparse.Namespace) -> int:
    kind = parse_kind(args.kind)
    if args.n < 1:
        raise UsageError("n must be positive")
    t = args.shift if args.shift is not None else (args.t[0] if args.t else 0)
    if args.variant != "hankel":
        if kind is not SequenceKind.Q_SCHRODER:
            raise UsageError("--variant applies only to q-schroder")
        M = q_schroder_matrix(args.n, t, Variant(args.variant))
        desc = {"kind": kind.value, "n": args.n, "t": t, "variant": args.variant}
    elif args.ks is not None:
        if len(args.ks) != args.n:
            raise UsageError(f"--ks needs exactly n={args.n} entries")
        M = generalized_hankel(kind, args.ks, args.n)
        desc = {"kind": kind.value, "n": args.n, "ks": list(args.ks)}
    else:
        M = hankel_matrix(kind, args.n, t)
        desc = {"kind": kind.value, "n": args.n, "t": t}
    value = _value_text(det_exact(M))
    _emit(args, {**desc, "det": value}, value)
    return EXIT_OK


# -- paths --------------------------------------------------------------------------------------

_WEIGHTS = {
    "count": lambda m: UnitWeights(),
    "qcatalan": lambda m: QCatalanWeights(),
    "generic": lambda m: GenericWeights(m),
    "omega": lambda m: OmegaWeights(),
}


def cmd_paths(args: argparse.Namespace) -> int:
    if args.action == "lgv":
        n, t = args.m, args.k
        res = lgv_check(n, t, GenericWeights(2 * n + t), force=args.force)
        payload = {"n": n, "t": t, "det": str(res.det), "brute_force": str(res.brute_force),
                   "tuples": res.tuples, "agrees": res.agrees}
        text = (f"det:         {res.det}\nbrute force: {res.brute_force}\n"
                f"tuples: {res.tuples}  agrees: {'yes' if res.agrees else 'NO'}")
        _emit(args, payload, text)
        return EXIT_OK if res.agrees else EXIT_MISMATCH
    family = PathFamily(args.family)
    w = _WEIGHTS[args.weights](max(args.m, 1))
    if args.action == "list":
        paths = enumerate_paths(family, (0, 0), (args.m, args.k), force=args.force)
        words = [str(p) for p in paths]
        _emit(args, {"family": family.value, "end": [args.m, args.k], "count": len(words), "paths": words},
              "\n".join(words + [f"({len(words)} paths)"]))
        return EXIT_OK
    gf = gf_paths_dp(family, args.m, args.k, w)
    _emit(args, {"family": family.value, "end": [args.m, args.k], "weights": args.weights, "gf": str(gf)},
          _value_text(gf))
    return EXIT_OK


# -- contfrac -----------------------------------------------------------------------------------


def _parse_moments(text: str) -> list[RatFunc]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            out.append(parse(piece))
        except ParseError as exc:
            raise UsageError(f"cannot parse moment {piece!r}: {exc}") from None
    return out


def cmd_contfrac(args: argparse.Namespace) -> int:
    depth = args.depth
    if depth is not None and depth < 1:
        raise UsageError("--depth must be positive")
    note = None
    if args.qjacobi:
        d = depth or 3
        sf = little_qjacobi_sfraction(2 * d)
        jf = s_to_j(sf)
        jf = JFraction(jf.b[:d], jf.lam[: d - 1])
        note = f"S-fraction variant: {sf.variant} (checked: {resolve_qjacobi_variant()})"
        moments = None
    else:
        if args.moments is not None:
            moments = _parse_moments(args.moments)
            if depth is not None:
                moments = moments[: 2 * depth]
        elif args.kind is not None:
            moments = seq_prefix(args.kind, max(2 * (depth or 4), args.order or 0) - 1)
        else:
            raise UsageError("give --kind, --moments or --qjacobi")
        jf = moments_to_j(moments)
        if depth is not None:
            jf = JFraction(jf.b[:depth], jf.lam[: depth - 1])
    b_txt = [_value_text(x) for x in jf.b]
    l_txt = [_value_text(x) for x in jf.lam]
    payload: dict[str, Any] = {"b": b_txt, "lambda": l_txt}
    lines = ["b: " + " ".join(b_txt) if all(x.lstrip("-").isdigit() for x in b_txt)
             else "b:\n" + "\n".join(f"  b_{k} = {x}" for k, x in enumerate(b_txt)),
             "λ: " + " ".join(l_txt) if all(x.lstrip("-").isdigit() for x in l_txt)
             else "λ:\n" + "\n".join(f"  λ_{k + 1} = {x}" for k, x in enumerate(l_txt))]
    if note:
        payload["note"] = note
        lines.append(note)
    status = EXIT_OK
    if args.order is not None:
        order = args.order
        series = j_to_series(jf, order)
        coeffs = [_value_text(series[k]) for k in range(order)]
        payload["series"] = coeffs
        lines.append("series: " + ", ".join(coeffs))
        if moments is not None:
            ok = all(series[k] == moments[k] for k in range(min(order, len(moments))))
            payload["roundtrip"] = ok
            lines.append(f"roundtrip: {'ok' if ok else 'MISMATCH'}")
            status = EXIT_OK if ok else EXIT_MISMATCH
    _emit(args, payload, "\n".join(lines))
    return status


# -- parser -------------------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hankelforge",
                                     description="Exact Hankel determinant identities and their tooling.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify identities over parameter grids")
    v.add_argument("identity", nargs="?", help="identity id, or 'all'")
    v.add_argument("--list", action="store_true", help="list registered identities")
    v.add_argument("--n-max", type=int, help="largest size parameter")
    v.add_argument("--t", type=_int_list, help="shifts, e.g. 0,1,2")
    v.add_argument("--ks", type=_int_list, help="row offsets for free-shift identities")
    v.add_argument("--order", type=int, help="series order for continued-fraction identities")
    v.add_argument("--force", action="store_true", help="lift desk-scale guards")
    v.add_argument("--timing", action="store_true", help="include wall time (breaks byte-stable output)")
    _common(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print sequence terms 0..n")
    t.add_argument("kind")
    t.add_argument("n", type=int)
    _common(t)
    t.set_defaults(func=cmd_table)

    d = sub.add_parser("det", help="determinant of a Hankel-type matrix")
    d.add_argument("kind")
    d.add_argument("n", type=int)
    d.add_argument("shift", type=int, nargs="?", help="Hankel shift t (default 0)")
    d.add_argument("--t", type=_int_list, help="shift, alternative to the positional")
    d.add_argument("--ks", type=_int_list, help="row offsets k_0..k_(n-1)")
    d.add_argument("--variant", choices=["hankel"] + [x.value for x in Variant], default="hankel",
                   help="q-Schroder matrix variant")
    _common(d)
    d.set_defaults(func=cmd_det)

    p = sub.add_parser("paths", help="lattice path enumeration and generating functions")
    p.add_argument("action", choices=["gf", "list", "lgv"])
    p.add_argument("--family", default="dyck", choices=[f.value for f in PathFamily])
    p.add_argument("m", type=int, help="end abscissa (lgv: number of paths n)")
    p.add_argument("k", type=int, nargs="?", default=0, help="end height (lgv: shift t)")
    p.add_argument("--weights", choices=sorted(_WEIGHTS), default="count")
    p.add_argument("--force", action="store_true", help="lift the brute-force step guard")
    _common(p)
    p.set_defaults(func=cmd_paths)

    c = sub.add_parser("contfrac", help="J-fraction coefficients from moments")
    src = c.add_mutually_exclusive_group()
    src.add_argument("--kind", help="sequence kind supplying the moments")
    src.add_argument("--moments", help="comma-separated moments, mu_0 = 1")
    src.add_argument("--qjacobi", action="store_true", help="little q-Jacobi coefficients by contraction")
    c.add_argument("--depth", type=int, help="number of b coefficients to show")
    c.add_argument("--order", type=int, help="also expand the J-fraction to this order")
    _common(c)
    c.set_defaults(func=cmd_contfrac)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors and --help this way
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, GuardExceeded, InsufficientCoefficients) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hankelforge: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateMoments as exc:
        print(f"hankelforge: error: degenerate moments, Δ_{exc.k} = 0", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
