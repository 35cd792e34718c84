"""Command-line interface: machine-readable reports over the library.

Every command emits a JSON envelope {command, input, result, version} with
deterministic key order and only exact decimal integers.  Exit codes:
0 success, 1 selftest failure, 2 input error, 3 M-search ceiling exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import __version__
from .chern import chern_of_E
from .dioph import DEFAULT_MAX_M, MSearchExhausted, components_certificate
from .moduli import moduli_report, stability_flags
from .monad import MonadSpec, cohomology_table
from .selftest import run_selftest

MAX_M_ENV = "NULLCORR_MAX_M"

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_INPUT = 2
EXIT_SEARCH = 3


class InputError(Exception):
    pass


def _envelope(command: str, params: dict, result: dict) -> dict:
    return {
        "command": command,
        "input": params,
        "result": result,
        "version": __version__,
    }


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _parse_spec(args: argparse.Namespace) -> MonadSpec:
    try:
        a = tuple(int(s) for s in args.a.split(","))
    except ValueError:
        raise InputError(f"cannot parse --a {args.a!r} as integers")
    try:
        return MonadSpec(n=args.n, c=args.c, a=a)
    except ValueError as exc:
        raise InputError(str(exc))


def _parse_twists(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if not m:
        raise InputError(f"cannot parse --twists {text!r}, expected MIN..MAX")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise InputError(f"empty twist range {text!r}")
    return lo, hi


def cmd_invariants(args: argparse.Namespace) -> int:
    spec = _parse_spec(args)
    flags = stability_flags(spec)
    vec = chern_of_E(spec)
    result: dict = {
        "stability": {
            "e_stable": flags.e_stable,
            "e_simple": flags.e_simple,
            "fg_stable": flags.fg_stable,
            "criteria_used": list(flags.criteria_used),
        }
    }
    if spec.n == 2:
        result["chern"] = list(vec.coeffs[1:5])
    else:
        result["chern"] = list(vec.coeffs)
    if spec.n == 2 and spec.c > 5 * spec.a[0]:
        rep = moduli_report(spec)
        result["moduli"] = {
            "h1_end": rep.h1_end,
            "h2_end": rep.h2_end,
            "dim_N": rep.dim_N,
            "smooth_point": rep.smooth_point,
            "chern": list(rep.chern),
        }
    envelope = _envelope(
        "invariants", {"n": spec.n, "c": spec.c, "a": list(spec.a)}, result
    )
    if args.format == "pretty":
        print(f"spec: n={spec.n} c={spec.c} a={list(spec.a)}")
        print(f"chern: {result['chern']}")
        print(
            f"stability: E {flags.e_stable}, simple {flags.e_simple}, "
            f"F/G {flags.fg_stable}"
        )
        if "moduli" in result:
            m = result["moduli"]
            print(
                f"moduli: dim_N={m['dim_N']} h1_end={m['h1_end']} "
                f"h2_end={m['h2_end']} smooth_point={m['smooth_point']}"
            )
    else:
        _emit(envelope)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    spec = _parse_spec(args)
    if args.twists is not None:
        t_min, t_max = _parse_twists(args.twists)
        table = cohomology_table(spec, t_min, t_max)
    else:
        table = cohomology_table(spec)
    if args.format == "csv":
        N = spec.ambient_dim
        print("t," + ",".join(f"h{i}" for i in range(N + 1)) + ",chi")
        for t in table.twists:
            cells = [t, *table.column(t), table.euler(t)]
            print(",".join(str(x) for x in cells))
        return EXIT_OK
    result = {
        "t_min": table.t_min,
        "t_max": table.t_max,
        "h": [list(row) for row in table.h],
        "chi": list(table.chi),
    }
    _emit(_envelope("table", {"n": spec.n, "c": spec.c, "a": list(spec.a)}, result))
    return EXIT_OK


def cmd_components(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise InputError(f"--count must be positive, got {args.count}")
    if args.ab is not None:
        try:
            a, b = (int(s) for s in args.ab.split(","))
        except ValueError:
            raise InputError(f"cannot parse --ab {args.ab!r} as A,B")
    else:
        a, b = 1, 1
    max_m = args.max_m
    if max_m is None:
        max_m = int(os.environ.get(MAX_M_ENV, DEFAULT_MAX_M))
    try:
        cert = components_certificate(args.count, a, b, max_m)
    except MSearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEARCH
    except ValueError as exc:
        raise InputError(str(exc))
    result = {
        "c": cert.c,
        "s": cert.s,
        "t": cert.t,
        "count": cert.count,
        "components": [
            {"a1": e.a1, "a2": e.a2, "a3": e.a3, "dim_N": e.dim_N}
            for e in cert.components
        ],
        "verified_by_brute_force": cert.verified_by_brute_force,
    }
    _emit(
        _envelope(
            "components",
            {"count": args.count, "ab": [a, b], "max_m": max_m},
            result,
        )
    )
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest(args.grid)
    _emit(_envelope("selftest", {"grid": args.grid}, {"checks": results}))
    return EXIT_OK if all(r["pass"] for r in results) else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullcorr",
        description="Exact invariants of special generalized null correlation bundles.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="ambient space P^{2n+1}")
        p.add_argument("--c", type=int, required=True, help="monad twist c")
        p.add_argument(
            "--a", type=str, required=True, help="comma-separated a_1,...,a_{n+1}"
        )

    p = sub.add_parser("invariants", help="Chern classes, stability, moduli numbers")
    add_spec_flags(p)
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("table", help="cohomology table of E over a twist range")
    add_spec_flags(p)
    p.add_argument("--twists", type=str, default=None, help="range MIN..MAX")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("components", help="many-components certificate")
    p.add_argument("--count", type=int, required=True, help="minimum component count")
    p.add_argument("--ab", type=str, default=None, help="identity parameters A,B")
    p.add_argument("--max-m", type=int, default=None, help="M-search ceiling")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("selftest", help="cross-module consistency checks")
    p.add_argument("--grid", choices=("small", "full"), default="small")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
