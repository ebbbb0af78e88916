"""Command-line surface: JSON/TSV emission and the verification suite.

Exit codes: 0 success, 1 verification failure, 2 invalid flags/parameters.
All configuration comes from flags; no environment variables are read.
Vectors are emitted in lexicographic order and integers beyond 2^53 are
serialized as decimal strings so JSON consumers keep them exact.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import gaps as gaps_mod
from . import maximal, membership, oracle
from .curves import curve
from .errors import WsgapsError

SCHEMA_VERSION = "1"
_JSON_SAFE = 2**53


def _encode(obj):
    """Recursively make obj JSON-safe, stringifying oversized integers."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > _JSON_SAFE else obj
    if isinstance(obj, (list, tuple)):
        return [_encode(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    return obj


def _record(dc, payload) -> dict:
    params = {k: v for k, v in asdict(dc.params).items() if v is not None}
    derived = {
        "q": dc.q,
        "pb": dc.pb,
        "M": dc.M,
        "e": dc.e,
        "gens": list(dc.gens),
        "genus": dc.genus,
        "frobenius": dc.frobenius,
        "canonical_degree": dc.canonical_degree,
        "max_m": dc.max_m,
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "params": _encode(params),
        "derived": _encode(derived),
        "payload": _encode(payload),
    }


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, sort_keys=True, separators=(",", ": "), indent=1))
        return
    payload = record["payload"]
    if "vectors" in payload:
        for v in payload["vectors"]:
            print("\t".join(str(x) for x in v))
    else:
        for k in sorted(payload):
            print(f"{k}\t{payload[k]}")


def _add_param_flags(sub):
    sub.add_argument("--family", required=True, choices=["X", "Y"])
    for name in ("p", "a", "b", "q", "n", "s"):
        sub.add_argument(f"--{name}", type=int)
    sub.add_argument("--format", choices=["json", "tsv"], default="json")


def _curve_from_args(args):
    kwargs = {"n": args.n, "s": args.s}
    if args.family == "X":
        kwargs.update(p=args.p, a=args.a, b=args.b)
    else:
        kwargs.update(q=args.q)
    missing = [k for k, v in kwargs.items() if v is None]
    if missing:
        raise WsgapsError(f"missing flags for family {args.family}: {missing}")
    return curve(args.family, **kwargs)


def _parse_vector(text: str, length: int) -> tuple[int, ...]:
    vec = tuple(int(x) for x in text.split(","))
    if len(vec) != length:
        raise WsgapsError(f"--vector must have {length} entries, got {len(vec)}")
    return vec


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wsgaps",
        description="Weierstrass semigroups, gaps and pure gaps at several "
        "points on two families of maximal curves; exact arithmetic only.",
    )
    subs = ap.add_subparsers(dest="command", required=True)
    for name in ("params", "gamma", "lambda", "gaps", "member", "counts", "verify"):
        sub = subs.add_parser(name)
        _add_param_flags(sub)
        if name != "params":
            sub.add_argument("--m", type=int, default=1)
        if name in ("gamma", "lambda"):
            sub.add_argument("--classical", action="store_true")
        if name == "gaps":
            sub.add_argument("--pure", action="store_true")
        if name == "member":
            sub.add_argument("--vector", required=True)
        if name in ("gaps", "verify"):
            sub.add_argument("--box-sum", type=int, default=None)
            sub.add_argument("--jobs", type=int, default=1)
    return ap


def run(argv) -> int:
    args = build_parser().parse_args(argv)
    try:
        dc = _curve_from_args(args)
    except WsgapsError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 2

    try:
        if args.command == "params":
            _emit(_record(dc, {}), args.format)
            return 0

        if args.command == "gamma":
            vecs = (
                maximal.enumerate_classical_Gamma(dc, args.m)
                if args.classical
                else maximal.gamma_hat_in_C(dc, args.m)
            )
            _emit(_record(dc, {"m": args.m, "vectors": sorted(vecs), "count": len(vecs)}), args.format)
            return 0

        if args.command == "lambda":
            vecs = (
                maximal.enumerate_classical_Lambda(dc, args.m)
                if args.classical
                else maximal.lambda_hat_in_C(dc, args.m)
            )
            _emit(_record(dc, {"m": args.m, "vectors": sorted(vecs), "count": len(vecs)}), args.format)
            return 0

        if args.command == "gaps":
            bound = 2 * dc.genus - 1
            if args.box_sum is not None:
                bound = max(args.box_sum, bound)  # never below the proven bound
            fn = gaps_mod.pure_gaps_via_lambda if args.pure else gaps_mod.gaps_via_lambda
            vecs = fn(dc, args.m, bound)
            check = (
                gaps_mod.pure_gaps_via_nabla(dc, args.m, bound)
                if args.pure
                else gaps_mod.gaps_via_complement(dc, args.m, bound, jobs=args.jobs)
            )
            if vecs != check:
                print("route disagreement between formula and complement", file=sys.stderr)
                return 1
            _emit(_record(dc, {"m": args.m, "vectors": sorted(vecs), "count": len(vecs)}), args.format)
            return 0

        if args.command == "member":
            vec = _parse_vector(args.vector, args.m + 1)
            verdict = membership.in_generalized_H(dc, args.m, vec)
            payload = {
                "m": args.m,
                "vector": vec,
                "member": verdict.member,
                "classical_member": membership.in_classical_H(dc, args.m, vec),
                "failing_coordinate": verdict.failing_coordinate,
            }
            _emit(_record(dc, payload), args.format)
            return 0

        if args.command == "counts":
            payload = {
                "m": args.m,
                "lambda_count": maximal.count_Lambda(dc, args.m),
                "gap_count_upper_bound": gaps_mod.gap_count_upper_bound(dc, args.m),
            }
            if args.m == 1:
                payload["two_point_gap_count"] = gaps_mod.count_gaps_two_points(dc)
            _emit(_record(dc, payload), args.format)
            return 0

        if args.command == "verify":
            checks = oracle.consistency_report(dc, args.m, bound=args.box_sum, jobs=args.jobs)
            _emit(_record(dc, {"m": args.m, "checks": checks, "pass": all(checks.values())}), args.format)
            return 0 if all(checks.values()) else 1
    except WsgapsError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
