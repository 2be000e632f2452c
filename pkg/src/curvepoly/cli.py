"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition
violation (common component, non-reduced input, unsupported input), 3
internal disagreement between independent computations.
"""
from __future__ import annotations

import argparse
import json
import sys

from .arrgeo import Curve, CurveError, GenericityError
from .curvefile import CurveFileError, format_curve_file, load_curve_file
from .generate import KINDS, GenerationError, generate
from .milnor import NoPlateauError, NotReducedError
from .qpoly import PolySyntaxError, parse_poly
from .report import OracleDisagreement, cmd_invariants, cmd_lattice, cmd_union

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_ORACLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for random linear changes (default 0)")
    common.add_argument("--shear-trials", type=int, default=5,
                        help="independent random changes for intersection counting (default 5)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="JSON output (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable output")
    common.set_defaults(pretty=False)
    common.add_argument("--assume-quasi-homogeneous", action="store_true",
                        help="allow mu := tau when mu cannot be computed combinatorially")
    common.add_argument("--e", type=int, default=None,
                        help="number of irreducible components for raw polynomial input")

    parser = argparse.ArgumentParser(
        prog="curvepoly",
        description="Invariants of reduced plane curves and checks of the addition identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="tau, mdr, Poincaré/Betti polynomials, freeness")
    p.add_argument("file", nargs="?", help="curve file")
    p.add_argument("--curve", action="append", help="curve name in the file (repeatable)")
    p.add_argument("--poly", help="a single defining polynomial instead of a file")

    p = sub.add_parser("union", parents=[common], help="addition identities for C1 ∪ C2")
    p.add_argument("file", help="curve file")
    p.add_argument("first", help="name of C1")
    p.add_argument("second", help="name of C2")

    p = sub.add_parser("lattice", parents=[common], help="intersection lattice of a line arrangement")
    p.add_argument("file", help="curve file")
    p.add_argument("--curve", help="curve name (default: the only curve in the file)")

    p = sub.add_parser("generate", parents=[common], help="emit a curve file of random arrangements")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--size", type=int, default=None, help="number of lines (default random in 3..7)")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    return parser


def _load(path: str) -> dict:
    try:
        return load_curve_file(path)
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _pick(curves: dict, name: str | None) -> Curve:
    if name is None:
        if len(curves) != 1:
            raise UsageError(f"file holds {len(curves)} curves; choose one with --curve")
        return next(iter(curves.values()))
    if name not in curves:
        raise UsageError(f"no curve named {name!r} (available: {', '.join(curves)})")
    return curves[name]


def _run(args) -> dict | str:
    if args.command == "invariants":
        if args.poly is not None:
            if args.file:
                raise UsageError("give either a file or --poly, not both")
            curve = Curve((parse_poly(args.poly),), name="poly", raw=True, e=args.e)
            return cmd_invariants(curve, seed=args.seed, assume_qh=args.assume_quasi_homogeneous)
        if not args.file:
            raise UsageError("a curve file or --poly is required")
        curves = _load(args.file)
        names = args.curve or (list(curves) if len(curves) > 1 else [None])
        reports = [
            cmd_invariants(_pick(curves, n), seed=args.seed,
                           assume_qh=args.assume_quasi_homogeneous, e=args.e)
            for n in names
        ]
        if len(reports) == 1:
            return reports[0]
        return {"schema": 1, "command": "invariants", "seed": args.seed, "reports": reports}
    if args.command == "union":
        curves = _load(args.file)
        return cmd_union(_pick(curves, args.first), _pick(curves, args.second), seed=args.seed,
                         trials=args.shear_trials, assume_qh=args.assume_quasi_homogeneous)
    if args.command == "lattice":
        curves = _load(args.file)
        return cmd_lattice(_pick(curves, args.curve), seed=args.seed)
    if args.command == "generate":
        if args.count < 0:
            raise UsageError("--count must be non-negative")
        text = format_curve_file(generate(args.kind, args.count, seed=args.seed, size=args.size))
        header = f"# generated: kind={args.kind} count={args.count} seed={args.seed}\n\n"
        return header + text
    raise UsageError(f"unknown command {args.command}")


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            nested = isinstance(v, dict) or (
                isinstance(v, list) and not all(isinstance(x, (int, str, bool)) or x is None for x in v)
            )
            if nested and v:
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.append(_pretty(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result = _run(args)
    except (UsageError, CurveFileError, PolySyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleDisagreement as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (GenericityError, NoPlateauError) as exc:
        print(f"internal failure: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (NotReducedError, CurveError, GenerationError, ValueError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if isinstance(result, str):
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(result)
        else:
            sys.stdout.write(result)
    elif args.pretty:
        print(_pretty(result))
    else:
        print(json.dumps(result, indent=2))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
