"""Command-line front end.

Exit codes: 0 success / permutation / all cells agree, 1 not a permutation
or some cell disagrees, 2 usage error, 3 field-size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .dickson import DicksonParams, dickson_poly
from .gf import CapExceeded, build_field
from .poly import Poly, reduce_mod_qx
from .ppcheck import HERMITE_Q_CAP, brute_force_check, hermite_check
from .theorems import BRUTE_Q_CAP, FAMILIES, THEOREMS, result1_mismatches, scan, verify_theorem

CSV_HEADER = ["p", "e", "l", "k", "family", "predicted", "observed", "agree", "witness"]


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revdickson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, field=True):
        if field:
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--e", type=int, default=1)
            sp.add_argument("--modulus", type=_int_list, default=None,
                            help="ascending coefficients including the leading 1")
        sp.add_argument("--format", choices=("json", "csv", "text"), default=None)
        sp.add_argument("--q-cap", type=int, default=None)

    sp = sub.add_parser("field", help="construct GF(p^e) and print its modulus")
    common(sp)

    sp = sub.add_parser("check", help="test whether a polynomial permutes GF(p^e)")
    common(sp)
    sp.add_argument("--poly", required=True, help="ascending coefficient codes, comma-separated")
    sp.add_argument("--method", choices=("brute", "hermite"), default="brute")

    sp = sub.add_parser("dickson", help="print D_{n,k}(a, x)")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--a", type=int, default=1, help="element code of a")
    sp.add_argument("--reduce", action="store_true", help="reduce modulo x^q - x")

    sp = sub.add_parser("scan", help="verify a family over a (p, e, l, k) grid")
    common(sp, field=False)
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--p-list", type=_int_list, required=True)
    sp.add_argument("--e-max", type=int, default=2)
    sp.add_argument("--l-max", type=int, default=None)
    sp.add_argument("--k", type=_int_list, default=None, help="k values (default: all valid)")
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("verify", help="verify a named classification over its default grid")
    common(sp, field=False)
    sp.add_argument("--theorem", choices=THEOREMS, required=True)
    sp.add_argument("--p-list", type=_int_list, default=None)
    sp.add_argument("--e-max", type=int, default=None)
    sp.add_argument("--l-max", type=int, default=None)
    sp.add_argument("--workers", type=int, default=1)
    return parser


def _field(args):
    modulus = tuple(args.modulus) if args.modulus is not None else None
    F = build_field(args.p, args.e, modulus)
    if args.q_cap is not None and F.q > args.q_cap:
        raise CapExceeded(f"q = {F.q} exceeds the cap {args.q_cap}")
    return F


def _emit_reports(reports, fmt, out):
    rows = [r.to_row() for r in reports]
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r, row in zip(reports, rows):
            row["witness"] = r.witness.to_text() if r.witness else ""
            w.writerow([row[h] for h in CSV_HEADER])
        out.write(buf.getvalue())
    else:
        for r in reports:
            p = r.params
            wit = r.witness.to_text() if r.witness else "-"
            mark = "ok" if r.agree else "MISMATCH"
            out.write(f"{mark:8} {r.family} p={p.p} e={p.e} l={p.l} k={p.k} "
                      f"predicted={r.predicted} observed={r.observed} witness={wit}\n")


def _cmd_field(args, fmt, out):
    F = _field(args)
    if fmt == "json":
        out.write(json.dumps({"p": F.p, "e": F.e, "q": F.q, "modulus": F.modulus_text()}) + "\n")
    elif fmt == "csv":
        out.write(f"p,e,q,modulus\n{F.p},{F.e},{F.q},\"{F.modulus_text()}\"\n")
    else:
        out.write(f"GF({F.p}^{F.e}) q={F.q} modulus={F.modulus_text()}\n")
    return 0


def _cmd_check(args, fmt, out):
    F = _field(args)
    f = Poly.from_text(F, args.poly)
    if args.method == "hermite":
        v = hermite_check(f, F, q_cap=args.q_cap or HERMITE_Q_CAP)
    else:
        if F.q > (args.q_cap or BRUTE_Q_CAP):
            raise CapExceeded(f"q = {F.q} exceeds the brute-force cap")
        v = brute_force_check(f, F)
    if fmt == "json":
        out.write(json.dumps(v.to_json()) + "\n")
    elif fmt == "csv":
        wit = v.witness.to_text() if v.witness else ""
        out.write(f"is_permutation,witness\n{v.is_permutation},{wit}\n")
    elif v.is_permutation:
        out.write("permutation\n")
    else:
        out.write(f"not a permutation, witness {v.witness.to_text()}\n")
    return 0 if v.is_permutation else 1


def _cmd_dickson(args, fmt, out):
    F = _field(args)
    f = dickson_poly(DicksonParams(args.n, args.k, args.a), F)
    if args.reduce:
        f = reduce_mod_qx(f)
    if fmt == "json":
        out.write(json.dumps({"n": args.n, "k": args.k, "a": args.a, "poly": f.to_text()}) + "\n")
    else:
        out.write(f.to_text() + "\n")
    return 0


def _report_exit(reports, err):
    bad = [r for r in reports if not r.agree]
    for r in bad:
        err.write(f"disagreement: {json.dumps(r.to_row())}\n")
    return 1 if bad else 0


def _cmd_scan(args, fmt, out, err):
    reports = scan(args.family, args.p_list, range(1, args.e_max + 1), l_max=args.l_max,
                   k_values=args.k, q_cap=args.q_cap or BRUTE_Q_CAP, workers=args.workers)
    _emit_reports(reports, fmt, out)
    return _report_exit(reports, err)


def _cmd_verify(args, fmt, out, err):
    q_cap = args.q_cap or BRUTE_Q_CAP
    reports = verify_theorem(args.theorem, p_values=args.p_list, e_max=args.e_max,
                             l_max=args.l_max, q_cap=q_cap, workers=args.workers)
    _emit_reports(reports, fmt, out)
    code = _report_exit(reports, err)
    if args.theorem == "result1":
        for r in reports:
            bad = result1_mismatches(build_field(r.params.p, r.params.e))
            if bad:
                err.write(f"closed form differs from D_(q+2,0) for p={r.params.p} e={r.params.e} at {bad}\n")
                code = 1
    return code


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format or ("text" if out.isatty() else "json")
    try:
        if args.command == "field":
            return _cmd_field(args, fmt, out)
        if args.command == "check":
            return _cmd_check(args, fmt, out)
        if args.command == "dickson":
            return _cmd_dickson(args, fmt, out)
        if args.command == "scan":
            return _cmd_scan(args, fmt, out, err)
        return _cmd_verify(args, fmt, out, err)
    except CapExceeded as exc:
        err.write(f"error: {exc}\n")
        return 3
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        parser.print_usage(err)
        return 2


def main():
    sys.exit(run())
