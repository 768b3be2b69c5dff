"""Batch command-line surface: operators, torsion, pairings, verification.

Polynomials on the command line are comma-separated coefficient lists,
constant term first, matching the JSON file format.  Exit codes: 0 on
success, 1 on a verification or mathematical failure, 2 on usage
errors.  DRINFELD_WEIL_WORKERS (if set) caps suite parallelism; suites
currently run on a single worker, which always respects the cap, and
reports are merged in sorted case order either way.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import (BadCharacteristic, NotATree, NotInvertibleModF,
                     NotTorsion, PoleOnModulus, SplittingFieldTooLarge,
                     TruncationTooShallow)
from .fields import FiniteField, embed, is_prime, make_field
from .modules import DrinfeldModule, torsion_basis
from .pairing import weil_pairing
from .polys import PolyRing
from .verify import SUITES, run_suite
from .weil_ops import weil_op_r

USAGE_ERROR = 2
MATH_ERROR = 1

_MATH_ERRORS = (SplittingFieldTooLarge, BadCharacteristic, NotTorsion,
                NotInvertibleModF, PoleOnModulus, NotATree,
                TruncationTooShallow)


class UsageError(Exception):
    pass


def _parse_ints(text: str):
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _factor_prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                raise UsageError(f"{q} is not a prime power")
            e = 0
            qq = q
            while qq % p == 0:
                qq //= p
                e += 1
            if qq != 1:
                raise UsageError(f"{q} is not a prime power")
            return p, e
    raise UsageError(f"{q} is not a prime power")


def _workers_cap():
    raw = os.environ.get("DRINFELD_WEIL_WORKERS")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"DRINFELD_WEIL_WORKERS must be an integer, got {raw!r}")
    if cap < 1:
        raise UsageError("DRINFELD_WEIL_WORKERS must be >= 1")
    return cap


def _q_field(args) -> FiniteField:
    p, e = _factor_prime_power(args.q)
    try:
        return make_field(p, e)
    except ValueError as exc:
        raise UsageError(str(exc))


def _module_from_args(args) -> DrinfeldModule:
    qf = _q_field(args)
    ext = getattr(args, "field_ext", 1) or 1
    if ext < 1:
        raise UsageError("--field-ext must be >= 1")
    try:
        if ext == 1 and args.modulus is None:
            base = qf
        else:
            modulus = _parse_ints(args.modulus) if args.modulus else None
            base = make_field(qf.p, qf.e * ext, modulus)
    except ValueError as exc:
        raise UsageError(str(exc))
    emb = embed(qf, base) if base != qf else (lambda c: c)
    if args.theta is None:
        raise UsageError("--theta is required")
    try:
        theta = base.elem(_parse_ints(args.theta))
        g = [base.elem(_parse_ints(gi)) for gi in args.g or []]
    except ValueError as exc:
        raise UsageError(str(exc))
    if not g:
        raise UsageError("at least one --g coefficient is required")
    try:
        return DrinfeldModule(qf, base, theta, g, emb)
    except ValueError as exc:
        raise UsageError(str(exc))


def _modulus_poly(args, field: FiniteField, var="x"):
    if args.f is None:
        raise UsageError("--f is required")
    coeffs = _parse_ints(args.f)
    ring = PolyRing(field, var)
    f = ring.poly(coeffs)
    if f.is_zero() or not f.is_monic() or f.degree < 1:
        raise UsageError("--f must be monic of degree >= 1 (constant term first)")
    return f


def cmd_weil_op(args) -> int:
    qf = _q_field(args)
    f = _modulus_poly(args, qf, var="t")
    if args.rank < 1:
        raise UsageError("--rank must be >= 1")
    op = weil_op_r(f, args.rank)
    if args.format == "latex":
        print(op.latex())
    elif args.format == "json":
        terms = [[list(exps), [int(c) for c in coeff.coeffs]]
                 for exps, coeff in sorted(op.terms.items())]
        print(json.dumps({"vars": list(op.ring.names), "terms": terms}))
    else:
        print(op.text())
    return 0


def cmd_torsion(args) -> int:
    M = _module_from_args(args)
    f = _modulus_poly(args, M.q_field)
    tb = torsion_basis(M, f)
    out = {"module": M.describe(), "f": _parse_ints(args.f)}
    out.update(tb.describe())
    if args.format == "text":
        print(f"splitting extension s = {tb.s} "
              f"(field GF({tb.field_ext.p}^{tb.field_ext.e}))")
        print(f"cardinality = {tb.cardinality()}")
        for pt in tb.points:
            print(f"basis: {pt}")
    else:
        print(json.dumps(out))
    return 0


def cmd_pairing(args) -> int:
    M = _module_from_args(args)
    f = _modulus_poly(args, M.q_field)
    tb = torsion_basis(M, f)
    Mx = tb.module_ext
    qf = M.q_field
    mus = []
    for sel in args.mu or []:
        coeffs = _parse_ints(sel)
        if len(coeffs) != len(tb.points):
            raise UsageError(f"--mu needs {len(tb.points)} coefficients")
        acc = tb.field_ext.zero()
        for c, pt in zip(coeffs, tb.points):
            acc = acc + Mx.embed_scalars(qf.elem(c)) * pt
        mus.append(acc)
    for sel in args.mu_raw or []:
        try:
            mus.append(tb.field_ext.elem(_parse_ints(sel)))
        except ValueError as exc:
            raise UsageError(f"--mu-raw: {exc} "
                             f"(splitting field has degree {tb.field_ext.e})")
    if len(mus) != M.rank:
        raise UsageError(f"need exactly {M.rank} torsion points "
                         f"(--mu/--mu-raw), got {len(mus)}")
    value = weil_pairing(Mx, f, mus)
    psi_ok = Mx.exterior().phi_of(f).apply(value).is_zero()
    if args.format == "json":
        print(json.dumps({"value": list(value.coeffs), "value_str": str(value),
                          "psi_annihilates": psi_ok}))
    else:
        print(f"W = {value}")
        print(f"psi_f(W) = 0: {psi_ok}")
    return 0 if psi_ok else MATH_ERROR


def cmd_verify(args) -> int:
    if args.suite not in SUITES and args.suite != "all":
        print(f"unknown suite: {args.suite}", file=sys.stderr)
        return USAGE_ERROR
    reports = run_suite(args.suite, seed=args.seed, cases=args.cases)
    failures = sum(len(r["failures"]) for r in reports)
    body = reports[0] if len(reports) == 1 else reports
    if args.format == "text":
        for r in reports:
            status = "ok" if not r["failures"] else f"{len(r['failures'])} FAILURES"
            print(f"{r['suite']}: {r['cases']} cases, {status}, {r['elapsed']}s")
        for r in reports:
            for fl in r["failures"]:
                print(f"  FAIL {r['suite']}/{fl['case']} [{fl['inputs']}] "
                      f"lhs={fl['lhs']} rhs={fl['rhs']}")
    else:
        print(json.dumps(body))
    return min(failures, 1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="drinfeld-weil",
        description="Exact Weil-operator calculus and Drinfeld-module pairings "
                    "over small function fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_module_flags(sp):
        sp.add_argument("--q", type=int, required=True,
                        help="order of the coefficient field F_q (prime power)")
        sp.add_argument("--field-ext", type=int, default=1,
                        help="degree m of the base A-field F_{q^m} over F_q")
        sp.add_argument("--modulus", help="base-field modulus over F_p, "
                                          "comma-separated, constant first")
        sp.add_argument("--theta", help="theta as F_p coefficients of the base field")
        sp.add_argument("--g", action="append",
                        help="module coefficient g_i (repeat once per i)")
        sp.add_argument("--f", help="modulus polynomial over F_q, constant first")

    w = sub.add_parser("weil-op", help="print a rank-r Weil operator")
    w.add_argument("--q", type=int, required=True)
    w.add_argument("--f", required=True)
    w.add_argument("--rank", type=int, required=True)
    w.add_argument("--format", choices=("text", "json", "latex"), default="text")
    w.set_defaults(func=cmd_weil_op)

    t = sub.add_parser("torsion", help="compute an f-torsion basis")
    add_module_flags(t)
    t.add_argument("--format", choices=("text", "json"), default="json")
    t.set_defaults(func=cmd_torsion)

    pr = sub.add_parser("pairing", help="evaluate the Weil pairing on torsion points")
    add_module_flags(pr)
    pr.add_argument("--mu", action="append",
                    help="torsion point as F_q coefficients over the computed basis")
    pr.add_argument("--mu-raw", action="append",
                    help="raw splitting-field element (F_p coefficients)")
    pr.add_argument("--format", choices=("text", "json"), default="text")
    pr.set_defaults(func=cmd_pairing)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True,
                   help="one of: " + ", ".join(sorted(SUITES) + ["all"]))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, default=None,
                   help="override the per-family case count")
    v.add_argument("--trunc", type=int, default=None,
                   help="accepted for symmetry with the file format; suites "
                        "pin their own truncation depths")
    v.add_argument("--format", choices=("text", "json"), default="json")
    v.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _workers_cap()
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except _MATH_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return MATH_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
