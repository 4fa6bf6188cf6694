"""Command-line interface.

Subcommands:
  build           construct a model algebra, print its Hilbert series,
                  optionally dump or consume a presentation JSON file
  zcl             zero-divisor cup length, exact or by certificate search
  groebner-check  Buchberger verification of the torus relation ideal
  tc              topological-complexity report rows, single or swept

Exit codes: build/zcl return 0 on success; groebner-check returns 1 when
the set is not a Groebner basis; tc returns 1 when any computed row is not
tight (unverified rows do not fail the sweep); usage and model errors
return 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import AlgebraError
from .fields import GF2, QQ
from .groebner import gb_hilbert, torus_ideal_check
from .models import resolve_model, resolve_presentation
from .presentation import AlgebraPresentation, quotient
from .tcreport import all_tight, sweep, tc_report
from .zcl import (ZclCertificate, bar_product_certificate, case_certificate,
                  mod_ideal_quotient, zcl_exact)

MODEL_TOKENS = ("surface", "arnold", "punctured-plane", "totaro", "b-sigma",
                "sphere-mod2", "so3-mod2", "mod-ideal")

CASE_FOR_MODEL = {"sphere-mod2": "sphere", "mod-ideal": "punctured-mod-ideal"}


def _field_arg(tok):
    if tok is None:
        return None
    if tok.lower() in ("q", "qq", "rational"):
        return QQ
    if tok.lower() in ("gf2", "f2", "mod2"):
        return GF2
    raise AlgebraError(f"unknown field: {tok}")


def _model_args(p: argparse.ArgumentParser):
    p.add_argument("--model", required=True, choices=MODEL_TOKENS)
    p.add_argument("--g", type=int, default=None, help="genus")
    p.add_argument("--n", type=int, default=None, help="number of points")
    p.add_argument("--punctures", type=int, default=None,
                   help="punctures of the plane (punctured-plane only)")
    p.add_argument("--field", default=None, help="q or gf2 where applicable")


def _resolve(args, want="quotient"):
    if args.model == "mod-ideal":
        return mod_ideal_quotient(args.n or 1, args.g if args.g else 2)
    kw = dict(g=args.g, n=args.n, punctures=args.punctures,
              field=_field_arg(args.field))
    if want == "presentation":
        return resolve_presentation(args.model, **kw)
    return resolve_model(args.model, **kw)


def _cmd_build(args):
    if args.presentation:
        pres = AlgebraPresentation.load(args.presentation)
    else:
        pres = _resolve(args, want="presentation")
    if args.dump_presentation:
        payload = json.dumps(pres.to_json(), indent=2)
        if args.dump_presentation == "-":
            print(payload)
        else:
            with open(args.dump_presentation, "w") as fh:
                fh.write(payload + "\n")
    A = quotient(pres)
    info = {
        "model": args.model or "file",
        "label": A.label,
        "field": A.field.name,
        "generators": [{"name": nm, "degree": dg}
                       for nm, dg in zip(A.free.names, A.free.degrees)],
        "relations": len(pres.relations),
        "hilbert": A.hilbert(),
        "total_dimension": sum(A.hilbert()),
        "exhaustive": A.exhaustive,
    }
    if args.json:
        print(json.dumps(info, indent=2))
    else:
        print(f"{info['label']}: field {info['field']}, "
              f"{len(info['generators'])} generators, "
              f"{info['relations']} relations")
        print(f"hilbert series: {info['hilbert']} "
              f"(total {info['total_dimension']})")
    return 0


def _climb_certificate(A, cap) -> ZclCertificate:
    best = bar_product_certificate(A, 0)
    k = 1
    while cap is None or k <= cap:
        try:
            best = bar_product_certificate(A, k)
        except AlgebraError:
            break
        k += 1
    return best


def _cmd_zcl(args):
    if args.method == "certificate":
        case = CASE_FOR_MODEL.get(args.model)
        if args.model == "totaro" and (args.g is None or args.g == 1):
            case = "torus"
        if args.model == "b-sigma":
            case = "genus2"
        if case == "genus2":
            cert = case_certificate(case, args.n or 1,
                                    genus=args.g if args.g else 2)
        elif case is not None:
            cert = case_certificate(case, args.n or 1)
        else:
            cert = _climb_certificate(_resolve(args), args.cap)
        report = {
            "quantity": "zcl",
            "value": cert.certified_length,
            "exact": False,
            "method": "certificate",
            "algebra": cert.algebra,
            "witness": [cert.tensor_algebra.A.free.mon_str(m)
                        for m in cert.witness],
            "coefficient": cert.tensor_algebra.field.fmt(cert.coefficient),
            "factors": [repr(f) for f in cert.factors],
        }
    else:
        A = _resolve(args)
        bound = zcl_exact(A, cap=args.cap)
        report = bound.to_json()
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        tag = "=" if report.get("exact") else ">="
        print(f"zcl({report.get('algebra', args.model)}) {tag} {report['value']} "
              f"({report['method']})")
    return 0


def _cmd_groebner(args):
    if args.model != "torus-ideal":
        raise AlgebraError(f"unknown ideal family: {args.model}")
    rep = torus_ideal_check(args.n, args.order)
    if args.json:
        out = rep.to_json()
        if rep.is_groebner:
            out["hilbert"] = gb_hilbert(rep)
        print(json.dumps(out, indent=2))
    else:
        print(f"torus ideal n={args.n}, order {rep.order.describe()}")
        print(f"is_groebner: {rep.is_groebner} "
              f"({len(rep.spair_log)} S-pair reductions)")
        if rep.is_groebner:
            print(f"normal monomial counts: {gb_hilbert(rep)}")
    return 0 if rep.is_groebner else 1


def _print_tc_rows(rows, as_json):
    if as_json:
        print(json.dumps([r.to_json() for r in rows], indent=2))
    else:
        for r in rows:
            print(r.table_row())


def _cmd_tc(args):
    if args.sweep:
        gmax, nmax, mmax = args.sweep
        rows = sweep(gmax, nmax, mmax, method=args.method or "auto")
    else:
        if args.n is None:
            raise AlgebraError("tc needs --n (and optionally --g, --m)")
        rows = [tc_report(args.g or 0, args.n, args.m or 0,
                          method=args.method or "auto")]
    _print_tc_rows(rows, args.json)
    return 0 if all_tight(rows) else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="tcsurf",
        description="Exact cohomology models and topological-complexity "
                    "certificates for surface configuration spaces.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a model algebra")
    _model_args(b)
    b.add_argument("--presentation", default=None, metavar="FILE",
                   help="load a presentation JSON file instead of a builder")
    b.add_argument("--dump-presentation", default=None, metavar="FILE",
                   help="write the presentation JSON ('-' for stdout)")
    b.add_argument("--json", action="store_true")
    b.set_defaults(run=_cmd_build)
    # --model is not required when a file is given
    for a in b._actions:
        if a.dest == "model":
            a.required = False

    z = sub.add_parser("zcl", help="zero-divisor cup length")
    _model_args(z)
    z.add_argument("--method", choices=("exact", "certificate"),
                   default="exact")
    z.add_argument("--cap", type=int, default=None,
                   help="stop the iteration or search at this length")
    z.add_argument("--json", action="store_true")
    z.set_defaults(run=_cmd_zcl)

    gb = sub.add_parser("groebner-check", help="verify a Groebner basis")
    gb.add_argument("--model", default="torus-ideal", choices=("torus-ideal",))
    gb.add_argument("--n", type=int, required=True)
    gb.add_argument("--order", choices=("default", "reversed"),
                    default="default")
    gb.add_argument("--json", action="store_true")
    gb.set_defaults(run=_cmd_groebner)

    t = sub.add_parser("tc", help="topological-complexity report")
    t.add_argument("--g", type=int, default=None)
    t.add_argument("--n", type=int, default=None)
    t.add_argument("--m", type=int, default=None)
    t.add_argument("--method", choices=("exact", "certificate"), default=None)
    t.add_argument("--sweep", nargs=3, type=int, default=None,
                   metavar=("GMAX", "NMAX", "MMAX"))
    t.add_argument("--json", action="store_true")
    t.add_argument("--table", action="store_true",
                   help="plain table output (the default)")
    t.set_defaults(run=_cmd_tc)

    args = ap.parse_args(argv)
    try:
        return args.run(args)
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
