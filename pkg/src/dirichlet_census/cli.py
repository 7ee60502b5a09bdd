"""Command-line front end.

Verbs: count, census, constant, kappa, verify.  Output is deterministic;
exit codes: 0 success, 1 verification failure, 2 usage error,
3 unsupported parameter.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Context, Decimal, ROUND_HALF_EVEN

import mpmath as mp
import numpy as np

from . import arith, census, charcount, eulerprod, series
from .errors import (DomainError, ResourceLimitError, UnsupportedParameterError)
from .lfun import PrecisionContext

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def format_significant(x, digits: int) -> str:
    """Decimal string with exactly `digits` significant digits, half-even."""
    with mp.workdps(digits + 10):
        s = mp.nstr(mp.mpf(x), digits + 8, strip_zeros=False)
    return str(Context(prec=digits, rounding=ROUND_HALF_EVEN).plus(Decimal(s)))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirichlet-census",
        description="Dirichlet character counts, censuses, and Euler-product constants")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", help="a(n) or b(n) for one modulus")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--primitive", action="store_true")
    p.add_argument("--verify-oracle", action="store_true")

    p = sub.add_parser("census", help="partial sums up to a bound")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--kind", choices=("all", "primitive"), default="all")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--fit", action="store_true")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("constant", help="asymptotic leading constants")
    p.add_argument("--name", required=True,
                   choices=("quadratic", "cubic", "quartic", "octic",
                            "landau-ramanujan"))
    p.add_argument("--digits", type=int, default=25)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("kappa", help="generalized Landau-Ramanujan constants")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--digits", type=int, default=25)

    p = sub.add_parser("verify", help="run numerical verification suites")
    p.add_argument("--suite", required=True,
                   choices=("oracle", "inversion", "series", "lambda",
                            "residues", "all"))
    p.add_argument("--max", type=int, default=100000)
    p.add_argument("--digits", type=int, default=15)
    return parser


def _cmd_count(args) -> int:
    value = (charcount.b_value if args.primitive else charcount.a_value)(
        args.ell, args.n)
    if args.verify_oracle:
        oracle = (charcount.b_via_inversion if args.primitive
                  else charcount.count_order_dividing)(args.ell, args.n)
        if oracle != value:
            print(f"oracle mismatch: table {value}, oracle {oracle}",
                  file=sys.stderr)
            return EXIT_VERIFY_FAIL
    print(value)
    return EXIT_OK


def _census_basis(ell: int, kind: str) -> list[str]:
    w = series.growth_exponent(ell, kind)
    return (["N"] if w == 1 else
            ["N*lnN", "N"] if w == 2 else
            ["N*ln2N", "N*lnN", "N"])


def _cmd_census(args) -> int:
    if args.max < 1:
        raise DomainError("--max must be positive")
    lo = min(1000, args.max)
    cps = census.log_checkpoints(lo, args.max) if args.max > lo else [args.max]
    records = census.census_sums(args.ell, args.max, args.kind, cps,
                                 threads=max(1, args.threads))
    model_at = {}
    if args.fit:
        basis = _census_basis(args.ell, args.kind)
        fit = census.fit_growth(records, basis)
        lead = fit.coefficients[0]
        leadf = census._BASIS_FUNCS[basis[0]]
        model_at = {r.N: lead * float(leadf(np.float64(r.N))) for r in records}
    if args.format == "csv":
        print("N,sum,model,ratio")
        for r in records:
            if r.N in model_at:
                m = model_at[r.N]
                print(f"{r.N},{r.sum},{m:.6f},{r.sum / m:.6f}")
            else:
                print(f"{r.N},{r.sum},,")
    else:
        rows = []
        for r in records:
            row = {"N": r.N, "sum": r.sum}
            if r.N in model_at:
                row["model"] = model_at[r.N]
                row["ratio"] = r.sum / model_at[r.N]
            rows.append(row)
        print(json.dumps(rows))
    return EXIT_OK


def _cmd_constant(args) -> int:
    ctx = PrecisionContext(args.digits)
    if args.name == "landau-ramanujan":
        value = eulerprod.landau_ramanujan(ctx)
        record = {"name": args.name, "value": value,
                  "method": "dual-route class product over p mod 4",
                  "truncation_degree": 0}
    else:
        record = eulerprod.coefficient_record(args.name, ctx)
    text = format_significant(record["value"], args.digits)
    if args.format == "json":
        print(json.dumps({"name": record["name"], "digits": args.digits,
                          "value": text, "method": record["method"],
                          "truncation_degree": record["truncation_degree"]}))
    else:
        print(text)
    return EXIT_OK


def _cmd_kappa(args) -> int:
    ctx = PrecisionContext(args.digits)
    value = eulerprod.kappa(args.m, ctx)
    print(format_significant(value, args.digits))
    return EXIT_OK


def _suite_oracle(max_n: int) -> list[dict]:
    spf = arith.spf_sieve(max_n)
    facts = [None, None] + [arith.factorize_with_spf(n, spf)
                            for n in range(2, max_n + 1)]
    reports = []
    for ell in charcount.TABLE_ELLS:
        generic = census.multiplicative_values(ell, max_n, "all", spf)
        mismatches = 0
        for n in range(2, max_n + 1):
            if charcount.a_value(ell, facts[n]) != int(generic[n]):
                mismatches += 1
        reports.append({"identity": "a-table-vs-group-structure",
                        "parameters": {"ell": ell, "max": max_n},
                        "residual": mismatches, "tolerance": 0,
                        "pass": mismatches == 0})
    return reports


def _suite_inversion(max_n: int) -> list[dict]:
    spf = arith.spf_sieve(max_n)
    mu = arith.mobius_sieve(max_n)
    reports = []
    for ell in charcount.TABLE_ELLS:
        a = census.multiplicative_values(ell, max_n, "all", spf)
        b = census.multiplicative_values(ell, max_n, "primitive", spf)
        b_inv = np.zeros(max_n + 1, dtype=np.int64)
        for q in range(1, max_n + 1):
            if mu[q]:
                b_inv[q::q] += mu[q] * a[1: max_n // q + 1]
        mismatches = int(np.count_nonzero(b_inv[1:] != b[1:]))
        reports.append({"identity": "b-vs-mobius-inversion",
                        "parameters": {"ell": ell, "max": max_n},
                        "residual": mismatches, "tolerance": 0,
                        "pass": mismatches == 0})
    return reports


def _suite_series(max_n: int) -> list[dict]:
    spf = arith.spf_sieve(max_n)
    return [series.verify_inversion_identity(ell, 2.0, max_n, spf=spf).to_dict()
            for ell in charcount.TABLE_ELLS]


def _suite_lambda(max_n: int, digits: int) -> list[dict]:
    ctx = PrecisionContext(digits)
    reports = []
    for m, cap in ((1, 10 ** 6), (3, 10 ** 6), (2, 10 ** 5)):
        reports.append(series.verify_lambda_identity(
            m, min(max_n, cap), ctx).to_dict())
    return reports


def _suite_residues(digits: int) -> list[dict]:
    ctx = PrecisionContext(digits)
    return [r.to_dict() for r in eulerprod.verify_residue_formulas(ctx)]


def _cmd_verify(args) -> int:
    suites = (("oracle", "inversion", "series", "lambda", "residues")
              if args.suite == "all" else (args.suite,))
    reports: list[dict] = []
    for suite in suites:
        if suite == "oracle":
            reports += _suite_oracle(args.max)
        elif suite == "inversion":
            reports += _suite_inversion(args.max)
        elif suite == "series":
            reports += _suite_series(args.max)
        elif suite == "lambda":
            reports += _suite_lambda(args.max, args.digits)
        elif suite == "residues":
            reports += _suite_residues(args.digits)
    for r in reports:
        print(json.dumps(r))
    return EXIT_OK if all(r["pass"] for r in reports) else EXIT_VERIFY_FAIL


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb == "count":
            return _cmd_count(args)
        if args.verb == "census":
            return _cmd_census(args)
        if args.verb == "constant":
            return _cmd_constant(args)
        if args.verb == "kappa":
            return _cmd_kappa(args)
        if args.verb == "verify":
            return _cmd_verify(args)
    except UnsupportedParameterError as exc:
        print(f"unsupported parameter: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (DomainError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
