"""Command-line front end.

Every command prints deterministic text; ``--json`` switches to a JSON
document carrying ``"schema": 1``.  Exit status is 0 on success, 1 when a
verification fails and 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .accel import InsufficientTerms, euler_accelerate, to_decimal
from .exact import MPoly, format_poly, parse_poly
from .identities import (
    IdentityId,
    QBelowN,
    identity_sides,
    ljunggren_oracle,
    verify_identity,
)
from .legendre import REPRESENTATIONS
from .series import Series, binom_power_series, format_series, negbinom_series
from .transforms import (
    binomial_transform,
    euler_transform,
    generalized_euler_transform,
    inverse_binomial_transform,
    read_sequence,
)

SCHEMA = 1

IDENTITY_NAMES = {}
for _id in IdentityId:
    IDENTITY_NAMES[_id.short] = _id
    IDENTITY_NAMES[_id.name.lower().replace("_", "")] = _id
    IDENTITY_NAMES[_id.name.lower()] = _id
# the generating expression belongs to the Ljunggren identity
IDENTITY_NAMES["eq12"] = IdentityId.LJUNGGREN_11


class UsageError(Exception):
    pass


def identity_from_name(name: str) -> IdentityId:
    key = name.strip().lower()
    if key not in IDENTITY_NAMES:
        known = ", ".join(i.short for i in IdentityId)
        raise UsageError(f"unknown identity {name!r} (known: {known})")
    return IDENTITY_NAMES[key]


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_rat(r: Fraction, digits: Optional[int]) -> str:
    if digits is None:
        return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
    return to_decimal(r, digits)


def render_poly(p: MPoly, digits: Optional[int] = None) -> str:
    if digits is not None and p.is_constant():
        return render_rat(p.constant_value(), digits)
    return format_poly(p)


def series_json(s: Series, digits=None) -> List[str]:
    return [render_poly(c, digits) for c in s.coeffs]


def emit_series(s: Series, args, out, command: str) -> int:
    if args.json:
        out.write(dump_json({"schema": SCHEMA, "command": command, "order": s.order,
                             "coefficients": series_json(s, args.digits)}))
    elif args.digits is not None:
        for m, c in enumerate(s.coeffs):
            out.write(f"t^{m}: {render_poly(c, args.digits)}\n")
    else:
        out.write(format_series(s) + "\n")
    return 0


# --- commands --------------------------------------------------------------


def cmd_verify(args, out, err) -> int:
    if args.all:
        ids = list(IdentityId)
    elif args.identity:
        ids = [identity_from_name(n) for n in args.identity]
    else:
        raise UsageError("verify needs --identity NAME or --all")
    lines, records, warnings_ = [], [], []
    ok = True
    for ident in ids:
        report = verify_identity(ident, args.n_max, args.q)
        for r in report.results:
            if r.q_below_n:
                warnings_.append(f"QBelowN {ident.short} n={r.n} q={args.q}")
            diff = format_poly(r.diff)
            records.append({"identity": ident.short, "n": r.n, "pass": r.passed,
                            "diff": diff, "q_below_n": r.q_below_n})
            if r.passed:
                lines.append(f"PASS {ident.short} n={r.n}")
            else:
                lines.append(f"FAIL {ident.short} n={r.n} diff={diff}")
        ok = ok and report.all_pass
    for w in warnings_:
        err.write(f"WARNING {w}\n")
    if args.json:
        out.write(dump_json({"schema": SCHEMA, "command": "verify", "n_max": args.n_max,
                             "q": args.q, "results": records, "warnings": warnings_,
                             "all_pass": ok}))
    else:
        out.write("".join(line + "\n" for line in lines))
    return 0 if ok else 1


def cmd_transform(args, out, err) -> int:
    seq = read_sequence(args.file)
    if not seq:
        raise UsageError(f"{args.file}: no values")
    fn = inverse_binomial_transform if args.inverse else binomial_transform
    result = fn(seq)
    values = [render_poly(t, args.digits) for t in result.terms]
    if args.json:
        out.write(dump_json({"schema": SCHEMA, "command": "transform",
                             "inverse": args.inverse, "input": [render_rat(v, None) for v in seq],
                             "output": values}))
    else:
        out.write("".join(v + "\n" for v in values))
    return 0


def _series_from_file(path) -> Series:
    seq = read_sequence(path)
    if not seq:
        raise UsageError(f"{path}: no values")
    return Series(tuple(MPoly.const(v) for v in seq))


def cmd_euler(args, out, err) -> int:
    return emit_series(euler_transform(_series_from_file(args.file)), args, out, "euler")


def cmd_gen_euler(args, out, err) -> int:
    f = _series_from_file(args.file)
    result = generalized_euler_transform(f, parse_poly(args.x), parse_poly(args.exponent))
    return emit_series(result, args, out, "gen-euler")


def cmd_series(args, out, err) -> int:
    base, exponent = parse_poly(args.base), parse_poly(args.exponent)
    if args.kind == "negbinom":
        s = negbinom_series(base, exponent, args.order)
    else:
        s = binom_power_series(base, exponent, args.order)
    return emit_series(s, args, out, "series")


def cmd_legendre(args, out, err) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    names = list(REPRESENTATIONS) if args.rep == "all" else [args.rep]
    polys = {name: REPRESENTATIONS[name](args.n) for name in names}
    agree = len({p for p in polys.values()}) == 1
    if args.json:
        doc = {"schema": SCHEMA, "command": "legendre", "n": args.n,
               "polynomials": {k: format_poly(v) for k, v in polys.items()}}
        if args.rep == "all":
            doc["agree"] = agree
        out.write(dump_json(doc))
    else:
        for name, p in polys.items():
            out.write(f"{name}: {format_poly(p)}\n")
        if args.rep == "all":
            out.write("AGREE\n" if agree else "DISAGREE\n")
    return 0 if agree else 1


def cmd_accelerate(args, out, err) -> int:
    c = read_sequence(args.file)
    m = args.terms if args.terms is not None else len(c) - 1
    table = euler_accelerate(c, m, args.reference)
    digits = args.digits

    def show(r):
        return render_rat(r, digits)

    rows = []
    for j in range(m + 1):
        row = {"k": j, "plain": show(table.plain_partials[j]), "accel": show(table.accel_partials[j]),
               "diff": show(table.diffs[j])}
        if table.reference is not None:
            row["plain_error"] = show(abs(table.plain_partials[j] - table.reference))
            row["accel_error"] = show(abs(table.accel_partials[j] - table.reference))
        rows.append(row)
    if args.json:
        out.write(dump_json({"schema": SCHEMA, "command": "accelerate", "terms": m,
                             "reference": args.reference, "rows": rows}))
        return 0
    out.write("# input c_k are positive parts: the series summed is sum (-1)^k c_k\n")
    if table.reference is not None:
        out.write("k\tplain_error\taccel_error\n")
        for row in rows:
            out.write(f"{row['k']}\t{row['plain_error']}\t{row['accel_error']}\n")
    else:
        out.write("k\tplain\taccel\n")
        for row in rows:
            out.write(f"{row['k']}\t{row['plain']}\t{row['accel']}\n")
    return 0


def cmd_expand(args, out, err) -> int:
    ident = identity_from_name(args.identity)
    if ident is IdentityId.LJUNGGREN_11:
        if args.q is None:
            raise UsageError("expand for eq11/eq12 needs an integer --q")
        poly = ljunggren_oracle(args.n, args.q)
        if args.json:
            out.write(dump_json({"schema": SCHEMA, "command": "expand", "identity": ident.short,
                                 "n": args.n, "q": args.q, "oracle": format_poly(poly)}))
        else:
            out.write(format_poly(poly) + "\n")
        return 0
    lhs, rhs = identity_sides(ident, args.n, args.q)
    if args.json:
        out.write(dump_json({"schema": SCHEMA, "command": "expand", "identity": ident.short,
                             "n": args.n, "q": args.q, "lhs": format_poly(lhs),
                             "rhs": format_poly(rhs)}))
    else:
        out.write(f"lhs: {format_poly(lhs)}\nrhs: {format_poly(rhs)}\n")
    return 0


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON (schema 1)")

    parser = argparse.ArgumentParser(
        prog="eulerbinom",
        description="Binomial transforms, Euler series transformations and binomial identity checks.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("verify", parents=[common], help="verify binomial identities exactly")
    p.add_argument("--identity", action="append", metavar="NAME",
                   help="identity name such as eq10, munarini10 (repeatable)")
    p.add_argument("--all", action="store_true", help="verify every identity")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--q", type=int, default=None, help="integer q (default: symbolic)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", parents=[common], help="binomial transform of a sequence file")
    p.add_argument("file")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("euler", parents=[common], help="Euler transform of a coefficient file")
    p.add_argument("file")
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("gen-euler", parents=[common], help="generalized Euler transform")
    p.add_argument("file")
    p.add_argument("--x", default="x", help="polynomial x (default: x)")
    p.add_argument("--exponent", default="alpha", help="polynomial alpha (default: alpha)")
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=cmd_gen_euler)

    p = sub.add_parser("series", parents=[common], help="print a binomial-power series")
    p.add_argument("--kind", choices=["negbinom", "binom-power"], required=True)
    p.add_argument("--base", default="x")
    p.add_argument("--exponent", default="alpha")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("legendre", parents=[common], help="Legendre polynomial representations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", choices=[*REPRESENTATIONS, "all"], default="all")
    p.set_defaults(func=cmd_legendre)

    p = sub.add_parser("accelerate", parents=[common],
                       help="Euler acceleration of sum (-1)^k c_k; the file lists c_k")
    p.add_argument("file")
    p.add_argument("--terms", type=int, default=None, help="number m of differences")
    p.add_argument("--reference", default=None, help="decimal reference value")
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=cmd_accelerate)

    p = sub.add_parser("expand", parents=[common],
                       help="expand an identity; eq11/eq12 prints the generating-expression coefficient")
    p.add_argument("--identity", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(func=cmd_expand)
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "digits", None) is not None and args.digits < 0:
        err.write("error: --digits must be non-negative\n")
        return 2
    if getattr(args, "n_max", 0) < 0:
        err.write("error: --n-max must be non-negative\n")
        return 2
    if getattr(args, "reference", None) is not None:
        try:
            Fraction(args.reference)
        except ValueError:
            err.write(f"error: --reference is not a number: {args.reference!r}\n")
            return 2
    try:
        return args.func(args, out, err)
    except (UsageError, QBelowN, InsufficientTerms, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
