"""Command-line interface: ``iwalink <command> [options]``.

Exit status is 0 on success, 1 on a domain error (for example a vanishing
reduced polynomial) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .covers import (
    CoverSpec,
    homology_orders,
    invariants_from_reduced,
    iwasawa_invariants,
    orders_from_reduced,
)
from .errors import (
    ArityError,
    InvalidDirection,
    IwalinkError,
    NotPrime,
    PolySyntaxError,
    VariableMismatch,
    ZeroDirection,
)
from .expr import format_poly, format_unipoly, parse_poly
from .greenberg import pseudonull, structured_factor
from .laurent import unit_normal
from .repro import run_checks

USAGE_ERRORS = (PolySyntaxError, ArityError, NotPrime, InvalidDirection, ZeroDirection, VariableMismatch)

FAMILY_HELP = {
    "figure1": "m(t1-1)(t2-1)^3; --m",
    "conway": "C(2a,2b,-2a) two-bridge link; --a --b",
    "c4": "two-bridge link C(4), delta = t1*t2+1",
    "torus": "torus link T(2,2k); --k",
    "hopf": "Hopf link, delta = 1",
    "bailey": "2^m(t1-1)(t2-1)(t1t2+1/(t1t2))^max(0,l-2); --ell --m",
    "bezout": "p=2 construction with lambda=2, mu=m at z=(2,-1); --m --s",
    "hosokawa": "reduced polynomial p^m (t-1)^(r-1+2l) at z=1; --r --ell --m --p",
    "knot": "one-component input; --delta with --r 1",
}


class UsageError(Exception):
    pass


def _csv_ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_input_args(sp, need_p=True, need_z=True):
    sp.add_argument("--delta", help="Alexander polynomial expression, e.g. 't1*t2+1'")
    sp.add_argument("--family", choices=sorted(FAMILY_HELP), help="catalog family instead of --delta")
    sp.add_argument("--r", type=int, help="number of components (variables) for --delta")
    if need_z:
        sp.add_argument("--z", type=_csv_ints, help="direction vector, e.g. 1,2")
    sp.add_argument("--p", type=int, required=need_p, help="prime")
    sp.add_argument("--knot-polys", dest="knot_polys", help="component knot polynomials 'expr;expr' in t")
    for name in ("m", "a", "b", "k", "ell", "s"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--json", action="store_true", help="machine-readable output")


def _family(args) -> catalog.LinkFamily:
    name = args.family

    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            raise UsageError(f"family {name!r} needs " + ", ".join("--" + n for n in missing))
        return [getattr(args, n) for n in names]

    if name == "figure1":
        return catalog.figure1_link(args.m if args.m is not None else 1)
    if name == "conway":
        a, b = need("a", "b")
        return catalog.conway_two_bridge(a, b)
    if name == "c4":
        return catalog.c4_link()
    if name == "torus":
        (k,) = need("k")
        return catalog.torus_link(k)
    if name == "hopf":
        return catalog.hopf_link()
    if name == "bailey":
        ell, m = need("ell", "m")
        return catalog.bailey_even_family(ell, m)
    if name == "bezout":
        (m,) = need("m")
        return catalog.bezout_link(m, args.s or 0)
    if name == "knot":
        if args.delta is None:
            raise UsageError("family 'knot' needs --delta")
        return catalog.knot_family(parse_poly(args.delta, 1))
    raise UsageError(f"family {name!r} cannot be used here")


def _delta_and_z(args, need_z=True):
    """Return ``(delta, z, knot_polys)``; ``delta`` is None for the hosokawa family."""
    if (args.delta is None) == (args.family is None) and args.family != "knot":
        raise UsageError("give exactly one of --delta or --family")
    z = getattr(args, "z", None)
    if args.family == "hosokawa":
        return None, z, None
    if args.family:
        fam = _family(args)
        delta = fam.delta
        z = z or fam.recommended_z
    else:
        if args.r is None:
            raise UsageError("--delta needs --r")
        delta = parse_poly(args.delta, args.r)
    if z is None and need_z:
        if delta.num_vars == 1:
            z = (1,)
        else:
            raise UsageError("--z is required for this input")
    knots = None
    if args.knot_polys:
        knots = tuple(
            unit_normal(parse_poly(src, 1)).poly for src in args.knot_polys.split(";")
        )
    return delta, z, knots


def _hosokawa(args):
    missing = [n for n in ("r", "ell", "m") if getattr(args, n) is None]
    if missing:
        raise UsageError("family 'hosokawa' needs " + ", ".join("--" + n for n in missing))
    return catalog.hosokawa_reduced(args.r, args.ell, args.m, args.p)


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_invariants(args) -> int:
    delta, z, knots = _delta_and_z(args)
    if delta is None:
        inv = invariants_from_reduced(_hosokawa(args), args.p)
    else:
        inv = iwasawa_invariants(CoverSpec(delta, z, args.p, knots))
    payload = {
        "lambda": inv.lambda_,
        "mu": inv.mu,
        "nu": inv.nu,
        "v": inv.v,
        "n0": inv.n0,
        "vanishing": list(inv.vanishing_levels),
        "reduced_poly": format_unipoly(inv.reduced.poly),
    }
    width = max(len(k) for k in payload)
    text = "\n".join(
        f"{k:<{width}}  {'undefined' if v is None else v}" for k, v in payload.items()
    )
    _emit(args, payload, text)
    return 0


def cmd_orders(args) -> int:
    delta, z, knots = _delta_and_z(args)
    if delta is None:
        table = orders_from_reduced(_hosokawa(args), args.p, args.nmax)
    else:
        table = homology_orders(CoverSpec(delta, z, args.p, knots), args.nmax)
    rows = [{"n": r.n, "order": str(r.order), "e": r.e} for r in table.rows]
    es = ["vanishing" if r["e"] is None else str(r["e"]) for r in rows]
    ow = max([len("order")] + [len(r["order"]) for r in rows])
    ew = max([1] + [len(e) for e in es])
    lines = [f"{'n':>3}  {'order':>{ow}}  {'e':>{ew}}"]
    for r, e in zip(rows, es):
        lines.append(f"{r['n']:>3}  {r['order']:>{ow}}  {e:>{ew}}")
    _emit(args, {"rows": rows}, "\n".join(lines))
    return 0


def cmd_family(args) -> int:
    if args.action == "list":
        payload = {"families": [{"name": k, "description": v} for k, v in sorted(FAMILY_HELP.items())]}
        text = "\n".join(f"{k:<9} {v}" for k, v in sorted(FAMILY_HELP.items()))
        _emit(args, payload, text)
        return 0
    if not args.family:
        raise UsageError("family make needs --family")
    if args.family == "hosokawa":
        red = _hosokawa(args)
        lam, mu = catalog.hosokawa_prediction(args.r, args.ell, args.m)
        payload = {"name": "hosokawa", "reduced_poly": format_unipoly(red.poly), "lambda": lam, "mu": mu}
        _emit(args, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
        return 0
    fam = _family(args)
    payload = {
        "name": fam.name,
        "params": fam.params,
        "r": fam.r,
        "delta": format_poly(fam.delta),
        "linking_number": fam.linking_number,
        "recommended_z": list(fam.recommended_z) if fam.recommended_z else None,
    }
    _emit(args, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return 0


def cmd_torres(args) -> int:
    delta, _, _ = _delta_and_z(args, need_z=False)
    if args.l12 is None:
        if args.family:
            l12 = _family(args).linking_number
        else:
            raise UsageError("--l12 is required with --delta")
    else:
        l12 = args.l12
    verdict = catalog.torres_check(delta, l12)
    payload = {"pass": verdict.passed, "reason": verdict.reason, "l12": l12}
    _emit(args, payload, "pass" if verdict.passed else f"fail: {verdict.reason}")
    return 0


def cmd_pseudonull(args) -> int:
    delta, _, _ = _delta_and_z(args, need_z=False)
    verdict = pseudonull(delta)
    factors = []
    if delta.num_vars > 1:
        cert = structured_factor(delta)
        factors = [
            {"factor": format_poly(f.poly), "multiplicity": f.multiplicity, "primality": f.primality}
            for f in cert.factors
        ]
        factors += [
            {"factor": str(q), "multiplicity": e, "primality": "CatalogCertified"}
            for q, e in cert.integer_content
        ]
    payload = {
        "verdict": verdict.verdict.value,
        "witness": format_poly(verdict.witness.poly) if verdict.witness else None,
        "factors": factors,
    }
    text = verdict.verdict.value
    if verdict.witness:
        text += f" (witness {payload['witness']})"
    _emit(args, payload, text)
    return 0


def cmd_bezout(args) -> int:
    cert = catalog.bezout_certificate(args.m)
    payload = {
        "m": cert.m,
        "N": format_unipoly(cert.N, "x"),
        "B": format_unipoly(cert.B, "x"),
        "F": format_unipoly(cert.F, "x"),
        "G": format_unipoly(cert.G, "x"),
        "res": cert.res,
        "verified": catalog.verify_bezout(cert),
    }
    _emit(args, payload, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return 0


def cmd_repro(args) -> int:
    results = []
    failed = 0
    for check, got, ok in run_checks():
        failed += not ok
        results.append({"name": check.name, "ok": ok, "expected": repr(check.expected), "got": repr(got)})
    if args.json:
        print(json.dumps({"checks": results, "failed": failed}, sort_keys=True))
    else:
        for r in results:
            status = "PASS" if r["ok"] else "FAIL"
            extra = "" if r["ok"] else f"  expected {r['expected']}, got {r['got']}"
            print(f"{status}  {r['name']}{extra}")
        print(f"{len(results) - failed}/{len(results)} reproduced")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iwalink", description="Iwasawa invariants of cyclic cover towers of links."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariants", help="lambda, mu, nu of a cover tower")
    _add_input_args(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("orders", help="homology orders level by level")
    _add_input_args(sp)
    sp.add_argument("--nmax", type=int, default=5)
    sp.set_defaults(func=cmd_orders)

    sp = sub.add_parser("family", help="list or build catalog families")
    sp.add_argument("action", choices=["list", "make"])
    _add_input_args(sp, need_p=False, need_z=False)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("torres", help="Torres-condition check for a 2-variable polynomial")
    _add_input_args(sp, need_p=False, need_z=False)
    sp.add_argument("--l12", type=int, help="linking number")
    sp.set_defaults(func=cmd_torres)

    sp = sub.add_parser("pseudonull", help="pseudonullity criterion on a structured factorization")
    _add_input_args(sp, need_p=False, need_z=False)
    sp.set_defaults(func=cmd_pseudonull)

    sp = sub.add_parser("bezout", help="Bezout certificate N F + B G = 2^m")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bezout)

    sp = sub.add_parser("repro", help="recompute every published value and compare")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_repro)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"iwalink: usage error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"iwalink: usage error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except IwalinkError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True))
        print(f"iwalink: error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"iwalink: usage error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
