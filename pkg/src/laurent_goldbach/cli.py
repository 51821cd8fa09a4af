"""Command line interface.

Exit codes: 0 success, 1 bad input, 2 precondition violation, 3 internal failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .decompose import decompose
from .errors import InvariantFailure, LaurentGoldbachError, ParseError, PreconditionViolation
from .irreducibility import certify_irreducible, is_hyper_monolithic
from .laurent import LaurentPoly
from .notation import format_poly, parse_poly
from .oracle import (
    OracleBounds,
    SemiringMode,
    enumerate_two_irreducible_splits,
    find_factorization,
    is_monolithic_oracle,
)
from .serialization import result_to_dict, verify_document
from .stress import StressConfig, run_stress

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3


def _cert_text(cert) -> str:
    if cert is None:
        return "none"
    data = ", ".join(f"{k}={v}" for k, v in cert.data().items())
    return f"{cert.kind}({data})" if data else cert.kind


def cmd_decompose(args) -> int:
    f = parse_poly(args.expr)
    result = decompose(f)
    if args.json:
        print(json.dumps(result_to_dict(f, result), indent=2))
        return EXIT_OK
    print(f"f      = {format_poly(f)}   (f(1) = {f.evaluate_at_one()})")
    for name, part, cert in (("A", result.part_a, result.cert_a), ("B", result.part_b, result.cert_b)):
        print(f"{name}      = {format_poly(part)}   [{_cert_text(cert)}]")
    print(f"branch = {result.trace.branch}")
    return EXIT_OK


def cmd_certify(args) -> int:
    f = parse_poly(args.expr)
    cert = certify_irreducible(f, allow_oracle=args.oracle)
    if args.json:
        out = None if cert is None else {"kind": cert.kind, "data": cert.data()}
        print(json.dumps({"input": format_poly(f), "certificate": out}))
    else:
        print(_cert_text(cert))
    return EXIT_OK


def cmd_check(args) -> int:
    f = parse_poly(args.expr)
    mode = SemiringMode(args.mode)
    print(f"f                = {format_poly(f)}")
    print(f"f(1)             = {f.evaluate_at_one()}")
    print(f"terms            = {len(f)}")
    if not f.is_zero():
        print(f"coefficient gcd  = {f.coefficient_gcd()}")
    print(f"hyper-monolithic = {is_hyper_monolithic(f)}")
    print(f"certificate      = {_cert_text(certify_irreducible(f)) if not f.is_zero() else 'none'}")
    if args.oracle:
        if mode is SemiringMode.LAURENT and f.is_unit():
            print("oracle           = unit")
        elif mode is SemiringMode.POLY and f == LaurentPoly.monomial(0):
            print("oracle           = unit")
        else:
            w = find_factorization(f, mode)
            if w.exhausted:
                print(f"oracle           = irreducible ({mode.value})")
            else:
                g, h = w.factors
                print(f"oracle           = reducible ({mode.value}): ({format_poly(g)})*({format_poly(h)})")
        if mode is SemiringMode.LAURENT:
            print(f"monolithic       = {is_monolithic_oracle(f)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    src = args.document
    try:
        if src == "-":
            text = sys.stdin.read()
        elif src.lstrip().startswith("{"):
            text = src
        else:
            with open(src) as fh:
                text = fh.read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: cannot read document: {e}", file=sys.stderr)
        return EXIT_INPUT
    problems = verify_document(doc)
    if problems:
        for p in problems:
            print(f"FAIL: {p}")
        return EXIT_INTERNAL
    print("OK")
    return EXIT_OK


def cmd_stress(args) -> int:
    config = StressConfig(
        trials=args.trials,
        seed=args.seed,
        max_terms=args.max_terms,
        coeff_max=args.coeff_max,
        exp_min=args.exp_min,
        exp_max=args.exp_max,
        value_max=args.value_max,
        oracle_cap=args.oracle_cap,
    )
    report = run_stress(config)
    if args.json:
        out = report.to_dict()
        out["config"] = asdict(config)
        print(json.dumps(out, indent=2))
    else:
        print(f"seed {config.seed}, {report.trials} trials, {len(report.failures)} failures, "
              f"{report.oracle_checked} oracle-checked")
        for branch, n in sorted(report.branches.items()):
            print(f"  {branch:20s} {n}")
        for poly, reason in report.failures:
            print(f"FAIL {poly}: {reason}")
    return EXIT_OK if report.ok else EXIT_INTERNAL


def cmd_demo_nx(args) -> int:
    """x^k + ... + x is not a sum of two irreducibles in N0[x], but is in N0[x^+-1]."""
    status = EXIT_OK
    for k in range(2, 6):
        f = LaurentPoly.from_terms((i, 1) for i in range(1, k + 1))
        splits = enumerate_two_irreducible_splits(f, SemiringMode.POLY)
        line = f"k={k}  {format_poly(f):24s} N0[x] splits: {len(splits)}"
        if splits:
            status = EXIT_INTERNAL
        if f.evaluate_at_one() > 3:
            r = decompose(f)
            line += f"   Laurent: ({format_poly(r.part_a)}) + ({format_poly(r.part_b)})"
        else:
            line += "   Laurent: f(1) <= 3, not covered"
        print(line)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laurent-goldbach",
        description="Write Laurent polynomials with positive integer coefficients as sums of two irreducibles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a polynomial")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("certify", help="issue an irreducibility certificate")
    p.add_argument("expr")
    p.add_argument("--oracle", action="store_true", help="fall back to the brute-force oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("check", help="report the criteria for a polynomial")
    p.add_argument("expr")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--mode", choices=[m.value for m in SemiringMode], default="laurent")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="re-check a JSON decomposition (path, '-' or inline)")
    p.add_argument("document")
    p.set_defaults(func=cmd_verify)

    d = StressConfig()
    p = sub.add_parser("stress", help="seeded random testing")
    p.add_argument("--trials", type=int, default=d.trials)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--max-terms", type=int, default=d.max_terms)
    p.add_argument("--coeff-max", type=int, default=d.coeff_max)
    p.add_argument("--exp-min", type=int, default=d.exp_min)
    p.add_argument("--exp-max", type=int, default=d.exp_max)
    p.add_argument("--value-max", type=int, default=d.value_max)
    p.add_argument("--oracle-cap", type=int, default=OracleBounds.default().max_value)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("demo-nx", help="the N0[x] counterexample x^k + ... + x")
    p.set_defaults(func=cmd_demo_nx)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        if e.text:
            print(f"  {e.text}\n  {' ' * e.position}^", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvariantFailure, LaurentGoldbachError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
