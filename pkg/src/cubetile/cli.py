"""Command line entry point: ``cubetile <command> ...``.

Exit status is 0 when the final verification report is valid, 1 when it is
not, and 2 for usage errors or counts outside a construction's range.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import documents
from .highdim import (BelowThresholdError, MaterializationRefused, materialize, max_pieces,
                      plan_ratio, theorem2_params, theorem2_threshold)
from .core import Tiling
from .planar import OutOfRangeError, plane_tiling
from .threesize import theorem5_params, theorem5_tiling
from .verify import VerifyReport, verify_cube_plan, verify_threesize_plan, verify_tiling

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _finish(report: VerifyReport, out) -> int:
    print(report.summary(), file=out)
    for kind, where in report.violations[:20]:
        print(f"  {kind} {list(where)}", file=out)
    return EXIT_OK if report.valid else EXIT_INVALID


def _write_tiling(t: Tiling, json_path: Optional[str], svg_path: Optional[str]) -> None:
    if json_path:
        documents.save_document(t, json_path)
    if svg_path:
        Path(svg_path).write_text(documents.render_svg(t))


def cmd_plane(args, out) -> int:
    if args.n < 4:
        raise UsageError(f"n={args.n} is out of range (need n >= 4)")
    if args.n == 5:
        raise UsageError("no decomposition of a square into 5 squares exists")
    t = plane_tiling(args.n)
    _write_tiling(t, args.json, args.svg)
    return _finish(verify_tiling(t), out)


def cmd_cube(args, out) -> int:
    try:
        plan = theorem2_params(args.d, args.n)
    except BelowThresholdError as exc:
        raise UsageError(str(exc))
    report = verify_cube_plan(plan)
    if args.out:
        documents.save_document(plan, args.out)
    print(f"certificate: a={plan.a} c={plan.c} m={plan.m} k={plan.k} "
          f"x={list(plan.x)} y1={plan.y1}", file=out)
    print(f"ratio {plan_ratio(plan)}", file=out)
    if args.epsilon is not None:
        n0 = theorem2_threshold(args.d, args.epsilon)
        print(f"threshold n0={n0}; n >= n0: {'yes' if args.n >= n0 else 'no'}; "
              f"ratio <= 1+epsilon: {'yes' if plan_ratio(plan) <= 1 + args.epsilon else 'no'}",
              file=out)
    if args.materialize:
        try:
            t = materialize(plan, args.limit)
        except MaterializationRefused as exc:
            print(str(exc), file=out)
        else:
            _write_tiling(t, args.tiling_out, None)
            report = verify_tiling(t)
    return _finish(report, out)


def cmd_threesize(args, out) -> int:
    try:
        plan = theorem5_params(args.d, args.n)
    except (BelowThresholdError, ValueError) as exc:
        raise UsageError(str(exc))
    report = verify_threesize_plan(plan)
    if args.out:
        documents.save_document(plan, args.out)
    print(f"certificate: a={plan.a} k={plan.k} x1={plan.x1} x2={plan.x2}", file=out)
    if args.materialize:
        try:
            t = theorem5_tiling(plan, args.limit)
        except MaterializationRefused as exc:
            print(str(exc), file=out)
        else:
            _write_tiling(t, args.tiling_out, None)
            report = verify_tiling(t)
    print(f"{len(report.distinct_sides)} distinct sizes", file=out)
    return _finish(report, out)


def cmd_threshold(args, out) -> int:
    if args.d < 2:
        raise UsageError("d must be >= 2")
    print(theorem2_threshold(args.d, args.epsilon), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        doc = documents.load_document(args.file)
    except (OSError, documents.DocumentError, ValueError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    if isinstance(doc, Tiling):
        report = verify_tiling(doc)
    elif hasattr(doc, "y1"):
        report = verify_cube_plan(doc)
    else:
        report = verify_threesize_plan(doc)
    return _finish(report, out)


def cmd_render(args, out) -> int:
    try:
        doc = documents.load_document(args.tiling)
    except (OSError, documents.DocumentError, ValueError) as exc:
        raise UsageError(f"cannot read {args.tiling}: {exc}")
    if not isinstance(doc, Tiling) or doc.dim != 2:
        raise UsageError("render needs a planar (d = 2) tiling document")
    Path(args.svg).write_text(documents.render_svg(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubetile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plane", help="tile a square with exactly n squares")
    p.add_argument("n", type=int)
    p.add_argument("--json", help="write the tiling document here")
    p.add_argument("--svg", help="write an SVG drawing here")
    p.set_defaults(func=cmd_plane)

    p = sub.add_parser("cube", help="certificate for the d-cube cut into n nearly equal cubes")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--epsilon", type=_rational)
    p.add_argument("--materialize", action="store_true")
    p.add_argument("--limit", type=int, default=None,
                   help="max pieces to materialize (default: $CUBETILE_MAX_PIECES or 5000000)")
    p.add_argument("--out", help="write the certificate document here")
    p.add_argument("--tiling-out", help="write the materialized tiling document here")
    p.set_defaults(func=cmd_cube)

    p = sub.add_parser("threesize", help="d-cube cut into n cubes of sides 1, 1/2, 1/(2^d-1)")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--materialize", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out")
    p.add_argument("--tiling-out")
    p.set_defaults(func=cmd_threesize)

    p = sub.add_parser("threshold", help="smallest n covered for dimension d and ratio 1+epsilon")
    p.add_argument("d", type=int)
    p.add_argument("epsilon", type=_rational)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("verify", help="verify a tiling or certificate document")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a planar tiling document as SVG")
    p.add_argument("tiling")
    p.add_argument("svg")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if getattr(args, "limit", None) is None and hasattr(args, "limit"):
        args.limit = max_pieces()
    try:
        return args.func(args, out)
    except (UsageError, OutOfRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
