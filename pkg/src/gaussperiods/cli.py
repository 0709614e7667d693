"""Command-line front end.

Exit codes: 0 success/all-match, 1 verification mismatch, 2 usage or
domain error, 3 internal integrity failure. All machine-consumable output
goes to stdout; diagnostics go to stderr.
"""

import argparse
import json
import sys

from .discriminant import analyze, field_discriminant
from .errors import DomainError, IntegrityError
from .numtheory import AuxConfig, aux_primes, is_prime
from .periodpoly import period_polynomial
from .tables import (TableRecord, diff_reference, records_for_reference,
                     table_discriminants, table_polynomials)


def _rank_of(cfg):
    """1-based rank of cfg.q among the totally real auxiliary primes for
    this degree, or None when cfg itself is not totally real (f odd)."""
    if cfg.f % 2:
        return None
    ell = 0
    count = 8
    while True:
        for c in aux_primes(cfg.e, count, totally_real=True):
            ell += 1
            if c.q == cfg.q:
                return ell
        ell = 0
        count *= 2


def _record_line(rec, fmt):
    if fmt == "json":
        return rec.to_json()
    if fmt == "coeffs":
        if rec.coeffs is None:
            return f"{rec.disc.base}^{rec.disc.exponent}"
        return ",".join(rec.coeffs)
    label = f"{rec.degree}, {rec.disc}"
    if rec.coeffs is None:
        return label
    return f"{label}: {', '.join(rec.coeffs)}"


def _cfg_from_args(args):
    return AuxConfig.for_pair(args.aux_prime, args.degree)


def cmd_poly(args):
    cfg = _cfg_from_args(args)
    poly = period_polynomial(cfg)
    coeffs = tuple(str(c) for c in poly.coeffs_descending())
    if args.format == "coeffs":
        print(",".join(coeffs))
    elif args.format == "json":
        rec = TableRecord(cfg.e, _rank_of(cfg), cfg.q, coeffs,
                          field_discriminant(cfg), None, None)
        print(rec.to_json())
    else:
        print(f"{cfg.e}, {field_discriminant(cfg)}: {', '.join(coeffs)}")
    return 0


def cmd_analyze(args):
    cfg = _cfg_from_args(args)
    rep = analyze(cfg, force_sturm=args.force_sturm)
    coeffs = [str(c) for c in rep.poly.coeffs_descending()]
    fields = {
        "q": cfg.q,
        "degree": cfg.e,
        "f": cfg.f,
        "g": cfg.g,
        "coeffs": coeffs,
        "poly_disc": str(rep.poly_disc),
        "field_disc": str(rep.field_disc),
        "index_k": str(rep.index_k),
        "n_real": rep.n_real,
        "n_pairs": rep.n_pairs,
        "monogenic": rep.monogenic,
    }
    if args.format == "json":
        print(json.dumps(fields))
    elif args.format == "coeffs":
        print(",".join(coeffs))
    else:
        for key, value in fields.items():
            if key == "coeffs":
                value = ", ".join(coeffs)
            elif value is None:
                value = "not computed"
            print(f"{key}: {value}")
    return 0


def _parse_range(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise DomainError(f"bad degree range {text!r}, expected a..b")
    if lo < 1 or hi < lo:
        raise DomainError(f"bad degree range {text!r}")
    return lo, hi


def _degrees(args):
    if args.degree is not None:
        return [args.degree]
    lo, hi = _parse_range(args.degree_range)
    if args.allow_composite:
        return [d for d in range(max(lo, 2), hi + 1)]
    return [d for d in range(lo, hi + 1) if is_prime(d)]


def cmd_table(args):
    records = []
    for degree in _degrees(args):
        if args.polys:
            records.extend(table_polynomials(degree, args.count,
                                             args.allow_composite, args.jobs))
        else:
            records.extend(table_discriminants(degree, args.count,
                                               args.allow_composite))
    records.sort(key=TableRecord.key)
    for rec in records:
        print(_record_line(rec, args.format))
    return 0


def cmd_verify(args):
    if args.degree_range is not None:
        lo, hi = _parse_range(args.degree_range)
        records = []
        for degree in range(lo, hi + 1):
            if not is_prime(degree):
                continue
            if args.polys:
                records.extend(table_polynomials(degree, args.count,
                                                 jobs=args.jobs))
            else:
                records.extend(table_discriminants(degree, args.count))
    else:
        records = records_for_reference(args.reference, jobs=args.jobs)
    try:
        report = diff_reference(records, args.reference)
    except OSError as exc:
        raise DomainError(str(exc))
    print(report)
    return 1 if report.has_mismatch else 0


def _add_format(p, default="text"):
    p.add_argument("--format", choices=("text", "json", "coeffs"),
                   default=default)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gaussperiods",
        description="Gaussian period polynomials of prime cyclotomic fields: "
                    "construction, discriminants and tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print one period polynomial")
    p.add_argument("--aux-prime", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("analyze", help="full discriminant report for (q, e)")
    p.add_argument("--aux-prime", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--force-sturm", action="store_true",
                   help="run Sturm counting even above the size policy")
    _add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="generate table records")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--degree", type=int)
    g.add_argument("--degree-range", metavar="A..B")
    p.add_argument("--count", type=int, default=8)
    p.add_argument("--polys", action="store_true",
                   help="include exact coefficients, index and monogenicity")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-composite", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="regenerate and diff against a reference")
    p.add_argument("--reference", required=True)
    p.add_argument("--degree-range", metavar="A..B",
                   help="regenerate this grid instead of the reference's rows")
    p.add_argument("--count", type=int, default=8)
    p.add_argument("--polys", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
