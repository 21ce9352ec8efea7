"""Command-line front end.

Every command writes line-delimited JSON records to stdout:

    {"schema": 1, "kind": "solution" | "report" | "diff" | "value",
     "payload": {...}, "provenance": "..."}

Integers inside payloads are decimal strings so nothing is lost to float
conversion downstream.  Diagnostics go to stderr.

Exit codes: 0 ok, 1 malformed input, 2 hypotheses fail (report still
written), 3 ``verify`` found a non-solution.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import fields
from math import gcd
from typing import Any, Sequence

from .arith import is_prime
from .lehmer import LehmerPairError, lehmer_number, matches_defect, primitive_divisor, validate_pair
from .model import EquationInstance, SearchBounds, Solution
from .oracle import brute_search, equivalence_report
from .quadforms import class_number, field_discriminant, hypothesis_check
from .solver import HypothesisError, classify, p3_family, p5_families, verify_solution

SCHEMA = 1
CONFIG_ENV = "LRNSOLVE_CONFIG"
EXIT_OK, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_FALSE = 0, 1, 2, 3

_BOUND_FIELDS = [f.name for f in fields(SearchBounds)]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for inadmissible input here
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def emit(kind: str, payload: dict, provenance: str = "", out=None) -> None:
    rec = {"schema": SCHEMA, "kind": kind, "payload": _jsonable(payload), "provenance": provenance}
    (out or sys.stdout).write(json.dumps(rec) + "\n")


def solution_payload(s: Solution) -> dict:
    return {
        "c": s.c, "d": s.d, "x": s.x, "y": s.y, "m": s.m, "n": s.n,
        "trivial": s.trivial, "coords": s.coords,
    }


def load_config(path: str | None) -> dict:
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    unknown = set(cfg) - set(_BOUND_FIELDS)
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return cfg


def bounds_from(args: argparse.Namespace) -> SearchBounds:
    """Defaults, then the config file, then explicit flags."""
    values = dict(load_config(args.config))
    for name in _BOUND_FIELDS:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    try:
        return SearchBounds(**values)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _add_bounds(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("bounds")
    for name in _BOUND_FIELDS:
        g.add_argument("--" + name.replace("_", "-"), dest=name, type=int, default=None)
    p.add_argument("--config", default=None, help=f"JSON file of bounds (default: ${CONFIG_ENV})")


def _report_payload(report, **extra) -> dict:
    payload = {
        "cd": report.cd_value,
        "squarefree": report.squarefree,
        "residue_mod4": report.residue_mod4,
        "class_number": report.class_number,
        "gcd_with_n": report.gcd_with_n,
        "admissible": report.admissible,
        "reducible": report.reducible,
        "reduction_primes": list(report.reduction_primes),
    }
    payload.update(extra)
    return payload


# -- commands -----------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    inst = EquationInstance(args.c, args.d, args.n, args.m)
    bounds = bounds_from(args)
    report = hypothesis_check(inst.c, inst.d, inst.n)
    coprime = gcd(args.c, args.d) == 1
    if not args.relaxed and not (report.reducible and coprime):
        emit("report", _report_payload(report, mode="rejected", coprime_cd=coprime), "hypotheses")
        print(f"inadmissible instance (c, d, n) = ({args.c}, {args.d}, {args.n})", file=sys.stderr)
        return EXIT_INADMISSIBLE
    result = classify(inst, bounds, relaxed=args.relaxed)
    emit(
        "report",
        _report_payload(result.hypotheses, mode=result.mode, prime=result.prime, clauses=list(result.clauses)),
        "hypotheses",
    )
    for s in result.solutions:
        emit("solution", solution_payload(s), s.provenance)
    emit("value", {"completeness": result.completeness, "count": len(result.solutions)}, "completeness")
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    bounds = bounds_from(args)
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    found = brute_search(
        args.c, args.d, bounds,
        n_values=args.n,
        coprime=args.coprime, x_odd=args.x_odd, y_odd=args.y_odd,
        workers=args.workers, checkpoint=args.checkpoint,
    )
    for s in found:
        emit("solution", solution_payload(s), s.provenance)
    emit("value", {"completeness": found.completeness, "count": len(found)}, "oracle")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    bounds = bounds_from(args)
    diff = equivalence_report(args.c, args.d, args.n, bounds)
    emit(
        "diff",
        {"c": diff.c, "d": diff.d, "n": diff.n, "mode": diff.mode, "empty": diff.empty,
         "solver_only": diff.solver_only, "oracle_only": diff.oracle_only},
        "equivalence",
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    ok = verify_solution(args.c, args.d, args.x, args.y, args.m, args.n)
    emit("value", {"c": args.c, "d": args.d, "x": args.x, "y": args.y, "m": args.m, "n": args.n, "valid": ok}, "substitution")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_classnumber(args: argparse.Namespace) -> int:
    disc = field_discriminant(args.d)
    emit("value", {"D": args.d, "discriminant": disc, "class_number": class_number(args.d)}, "reduced-forms")
    return EXIT_OK


def cmd_lehmer(args: argparse.Namespace) -> int:
    params = validate_pair(args.a, args.b)
    value = lehmer_number(params, args.ell)
    payload: dict = {"a": args.a, "b": args.b, "ell": args.ell, "lehmer_number": value}
    if args.ell >= 2:
        pd = primitive_divisor(params, args.ell)
        payload.update(primitive_divisor=pd.status, prime=pd.prime, primitive_part=pd.primitive_part)
    if 3 <= args.ell <= 30 and is_prime(args.ell):
        payload["in_defect_table"] = matches_defect(params, args.ell)
    emit("value", payload, "lehmer-recurrence")
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    bounds = bounds_from(args)
    if args.p == 3:
        if args.c is None:
            raise UsageError("family --p 3 needs --c")
        m = 0 if args.m is None else args.m
        for u in range(1, bounds.u_max + 1, 2):
            s = p3_family(args.c, u, m, sign=args.sign, relaxed=args.relaxed)
            relaxed_only = False
            if s is None and not args.relaxed:
                s = p3_family(args.c, u, m, sign=args.sign, relaxed=True)
                relaxed_only = s is not None
            if s is None:
                continue
            payload = solution_payload(s)
            payload["relaxed"] = relaxed_only
            emit("solution", payload, s.provenance + ("+relaxed" if relaxed_only else ""))
        emit("value", {"completeness": "bounded", "u_max": bounds.u_max}, "p3-family")
    else:
        found = p5_families(bounds, relaxed=args.relaxed)
        for s in found:
            if args.c is not None and s.c != args.c:
                continue
            if args.m is not None and s.m != args.m:
                continue
            emit("solution", solution_payload(s), s.provenance)
        emit("value", {"completeness": found.completeness, "k_max": bounds.k_max, "t_max": bounds.t_max}, "p5-families")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lrnsolve", description="Solve c*x^2 + d^(2m+1) = 2*y^n exactly.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="classify one instance and list its primitive solutions")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="fix the exponent m")
    p.add_argument("--relaxed", action="store_true")
    _add_bounds(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("search", help="exhaustive oracle search")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, action="append", default=None, help="restrict exponents (repeatable)")
    p.add_argument("--coprime", action="store_true")
    p.add_argument("--x-odd", action="store_true")
    p.add_argument("--y-odd", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint", default=None)
    _add_bounds(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("compare", help="diff solver and oracle on one instance")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_bounds(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="check one tuple by substitution")
    for name in ("c", "d", "x", "y", "m", "n"):
        p.add_argument("--" + name, type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classnumber", help="class number of Q(sqrt(-D))")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_classnumber)

    p = sub.add_parser("lehmer", help="Lehmer number and primitive divisor")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_lehmer)

    p = sub.add_parser("family", help="enumerate the cubic or quintic families")
    p.add_argument("--p", type=int, choices=(3, 5), required=True)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--sign", type=int, choices=(-1, 1), default=-1)
    p.add_argument("--relaxed", action="store_true")
    _add_bounds(p)
    p.set_defaults(func=cmd_family)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, HypothesisError, LehmerPairError, ValueError, IndexError) as exc:
        print(f"lrnsolve {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
