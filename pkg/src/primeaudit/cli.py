"""Command-line front end. One JSON record per line on stdout.

Exit codes: 0 all checks passed, 1 a counterexample or FAIL was found,
2 usage or capacity error (diagnostics go to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import (
    Variant,
    bezout_quadratic,
    bezout_unit,
    complement_product,
    q_and_c1,
    realized_difference,
    smoothness_factorization,
    vieta_coefficients,
)
from .audit import AuditConfig, emit_report, run_suite
from .errors import CapacityError, NoDecompositionError, SieveRangeError
from .partitions import (
    diff_representations,
    goldbach_partitions,
    min_prime_reflective_point,
    polignac_census,
    prime_reflective_points,
    ternary_decomposition,
)
from .primes import build_sieve, prime_pi

DEFAULT_SIEVE_LIMIT = 10**7


def _int_arg(text: str) -> int:
    """Integer flag value; scientific notation like 1e7 is accepted."""
    try:
        return int(text, 10)
    except ValueError:
        pass
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not val.is_integer() or abs(val) > 2**53:
        raise argparse.ArgumentTypeError(f"not an exact integer: {text!r}")
    return int(val)


def _variant_arg(text: str) -> Variant:
    try:
        return Variant(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"variant must be 'sum' or 'diff', got {text!r}")


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record, separators=(",", ":")) + "\n")


def _a_range(args) -> range:
    if args.a is not None:
        return range(args.a, args.a + 1)
    return range(getattr(args, "from"), args.to + 1)


def _add_a_or_range(sub, what="a"):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument(f"--{what}", type=_int_arg)
    group.add_argument("--from", type=_int_arg, dest="from")
    sub.add_argument("--to", type=_int_arg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeaudit",
        description="Exact-arithmetic partition searches, product-polynomial identities, "
                    "and range audits over even numbers 2a.")
    parser.add_argument("--version", action="version", version=f"primeaudit {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("sieve", help="build a sieve and report its prime count")
    p.add_argument("--limit", type=_int_arg, default=DEFAULT_SIEVE_LIMIT)

    p = subs.add_parser("goldbach", help="prime pairs p + q = 2a")
    _add_a_or_range(p)
    p.add_argument("--count-only", action="store_true")

    p = subs.add_parser("diff", help="prime pairs q - p = 2a with p <= a")
    _add_a_or_range(p)

    p = subs.add_parser("prp", help="reflective points b with a - b and a + b prime")
    _add_a_or_range(p)

    p = subs.add_parser("ternary", help="three-odd-prime decomposition 3 + p + q of odd n")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=_int_arg)
    group.add_argument("--from", type=_int_arg, dest="from")
    p.add_argument("--to", type=_int_arg)

    p = subs.add_parser("polignac", help="census of prime pairs with a fixed even gap")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--gap", type=_int_arg)
    group.add_argument("--max-gap", type=_int_arg)
    p.add_argument("--limit", type=_int_arg, default=10**6)

    p = subs.add_parser("vieta", help="coefficients of prod (x -+ p) over primes p <= a")
    p.add_argument("--a", type=_int_arg, required=True)
    p.add_argument("--variant", type=_variant_arg, required=True)
    p.add_argument("--algebra-cap", type=_int_arg, default=10**4)

    p = subs.add_parser("product", help="exact complement product prod (2a -+ p)")
    p.add_argument("--a", type=_int_arg, required=True)
    p.add_argument("--variant", type=_variant_arg, required=True)
    p.add_argument("--factor", action="store_true",
                   help="also trial-divide by primes <= a and by a+1 when prime")
    p.add_argument("--algebra-cap", type=_int_arg, default=10**4)

    p = subs.add_parser("bezout", help="Bezout witnesses on the realized polynomial values")
    p.add_argument("--a", type=_int_arg, required=True)
    p.add_argument("--variant", type=_variant_arg, required=True)
    p.add_argument("--kind", choices=("quadratic", "unit"), required=True)
    p.add_argument("--algebra-cap", type=_int_arg, default=10**4)

    p = subs.add_parser("audit", help="run registered claims over a range of a")
    p.add_argument("--claims", required=True,
                   help="comma-separated claim codes, or 'all'")
    p.add_argument("--from", type=_int_arg, dest="from", required=True)
    p.add_argument("--to", type=_int_arg, required=True)
    p.add_argument("--jobs", type=_int_arg, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="also write the identical bytes to this file")
    p.add_argument("--census-limit", type=_int_arg, default=10**6)
    p.add_argument("--max-gap", type=_int_arg, default=1000,
                   help="largest even gap P-CENSUS checks")
    p.add_argument("--witness-limit", type=_int_arg, default=16)
    p.add_argument("--algebra-cap", type=_int_arg, default=10**4)

    return parser


def _cmd_sieve(args) -> int:
    ps = build_sieve(args.limit)
    count = prime_pi(args.limit, ps)
    largest = int(ps.primes[-1]) if count else None
    _emit({"limit": args.limit, "count": count, "largest": largest})
    return 0


def _cmd_goldbach(args) -> int:
    rng = _a_range(args)
    ps = build_sieve(max(2 * rng[-1], 16))
    worst = 0
    for a in rng:
        pairs = goldbach_partitions(a, ps).pairs
        if args.count_only:
            _emit({"a": a, "n": 2 * a, "count": len(pairs)})
        else:
            _emit({"a": a, "n": 2 * a, "pairs": [list(t) for t in pairs]})
        if not pairs:
            worst = 1
    return worst


def _cmd_diff(args) -> int:
    rng = _a_range(args)
    ps = build_sieve(max(3 * rng[-1], 16))
    worst = 0
    for a in rng:
        pairs = diff_representations(a, ps).pairs
        _emit({"a": a, "n": 2 * a, "pairs": [list(t) for t in pairs]})
        if not pairs and a > 3:
            worst = 1
    return worst


def _cmd_prp(args) -> int:
    rng = _a_range(args)
    ps = build_sieve(max(2 * rng[-1], 16))
    worst = 0
    single = args.a is not None
    for a in rng:
        if single:
            res = prime_reflective_points(a, ps)
            _emit({"a": a, "min_point": res.min_point, "points": res.points})
            found = res.min_point is not None
        else:
            b = min_prime_reflective_point(a, ps)
            _emit({"a": a, "min_point": b})
            found = b is not None
        if not found:
            worst = 1
    return worst


def _cmd_ternary(args) -> int:
    if args.n is not None:
        rng = range(args.n, args.n + 1)
    else:
        rng = range(getattr(args, "from"), args.to + 1)
    ps = build_sieve(max(rng[-1], 16))
    worst = 0
    for n in rng:
        if n % 2 == 0 or n < 9:
            if args.n is not None:
                raise ValueError(f"n must be odd and >= 9, got {n}")
            continue
        try:
            triple = ternary_decomposition(n, ps)
            _emit({"n": n, "triple": list(triple)})
        except NoDecompositionError:
            _emit({"n": n, "triple": None})
            worst = 1
    return worst


def _cmd_polignac(args) -> int:
    gaps = [args.gap] if args.gap is not None else list(range(2, args.max_gap + 1, 2))
    ps = build_sieve(args.limit + max(gaps))
    for gap in gaps:
        res = polignac_census(gap, args.limit, ps)
        _emit({"gap": gap, "limit": args.limit, "count": res.count})
    return 0


def _algebra_sieve(a: int):
    return build_sieve(max(a + 1, 16))


def _cmd_vieta(args) -> int:
    ps = _algebra_sieve(args.a)
    vc = vieta_coefficients(args.a, args.variant, ps, cap=args.algebra_cap)
    _emit({"a": args.a, "variant": args.variant.value, "coeffs": vc.coeffs})
    return 0


def _cmd_product(args) -> int:
    ps = _algebra_sieve(args.a)
    prod = complement_product(args.a, args.variant, ps, cap=args.algebra_cap)
    rec = {"a": args.a, "variant": args.variant.value, "product": prod}
    if args.factor:
        rep = smoothness_factorization(prod, args.a, ps)
        rec["exponents"] = {str(p): e for p, e in sorted(rep.exponents.items())}
        rec["a_plus_1_exponent"] = rep.a_plus_1_exponent
        rec["leftover"] = rep.leftover
    _emit(rec)
    return 0


def _cmd_bezout(args) -> int:
    ps = _algebra_sieve(args.a)
    if args.kind == "quadratic":
        w = bezout_quadratic(args.a, args.variant, ps, cap=args.algebra_cap)
        d = realized_difference(args.a, args.variant, ps, cap=args.algebra_cap)
        rec = {"a": args.a, "variant": args.variant.value, "kind": w.kind,
               "u": w.u, "v": w.v, "c0": -d, "verified": w.verified}
    else:
        w = bezout_unit(args.a, args.variant, ps, cap=args.algebra_cap)
        q_value, c1 = q_and_c1(args.a, args.variant, ps, cap=args.algebra_cap)
        rec = {"a": args.a, "variant": args.variant.value, "kind": w.kind,
               "u": w.u, "v": w.v, "q_plus_c1": q_value + c1, "verified": w.verified}
    _emit(rec)
    return 0 if w.verified else 1


def _cmd_audit(args) -> int:
    claims = "all" if args.claims.strip() == "all" else [c.strip() for c in args.claims.split(",") if c.strip()]
    config = AuditConfig(algebra_cap=args.algebra_cap, census_limit=args.census_limit,
                         census_max_gap=args.max_gap, witness_limit=args.witness_limit)
    report = run_suite(claims, getattr(args, "from"), args.to, jobs=args.jobs, config=config)
    text = emit_report(report, args.format)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return report.exit_code


_HANDLERS = {
    "sieve": _cmd_sieve,
    "goldbach": _cmd_goldbach,
    "diff": _cmd_diff,
    "prp": _cmd_prp,
    "ternary": _cmd_ternary,
    "polignac": _cmd_polignac,
    "vieta": _cmd_vieta,
    "product": _cmd_product,
    "bezout": _cmd_bezout,
    "audit": _cmd_audit,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "from", None) is not None and getattr(args, "to", None) is None:
        parser.error(f"{args.command}: --from requires --to")
    rng_from = getattr(args, "from", None)
    if rng_from is not None and args.to < rng_from:
        parser.error(f"{args.command}: --to must be >= --from")
    try:
        return _HANDLERS[args.command](args)
    except (CapacityError, SieveRangeError, ValueError) as exc:
        print(f"primeaudit {args.command}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
