"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 geometry error,
4 oracle mismatch above the threshold.
"""
from __future__ import annotations

import argparse
import sys

from .classify import classify
from .decompose import decompose_polygon
from .errors import GeometryError, ParseError, PointOnBoundary
from .geom import Orientation, Point, Polygon, Tolerance, orientation_of, signed_area, winding_number
from .oracle import compare_regions
from .pipeline import clip_polygons
from .polyio import emit_svg, read_polygon_file, write_polygon, write_text_atomic

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_GEOMETRY, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _num(v: float) -> str:
    return format(v, ".12g")


def _tolerance(args, *polys) -> Tolerance:
    if getattr(args, "eps", None) is not None:
        if not args.eps > 0:
            raise UsageError("--eps must be positive")
        return Tolerance(args.eps)
    return Tolerance.for_polygons(*polys)


def cmd_clip(args, out) -> int:
    subject = read_polygon_file(args.subject)
    clipper = read_polygon_file(args.clip)
    result = clip_polygons(subject, clipper, _tolerance(args, subject, clipper))
    write_text_atomic(args.out, write_polygon(result.polygon))
    if args.svg:
        emit_svg([(subject, None), (clipper, None), (result.polygon, None)], args.svg)
    for note in result.diagnostics:
        print(f"note: {note}", file=out)
    print(f"contours {len(result.polygon.contours)} dropped_edges {result.dropped_edges} "
          f"unclosed_chains {result.unclosed_chains}", file=out)
    if result.unclosed_chains:
        print(f"error: {result.unclosed_chains} edge chain(s) could not be closed", file=sys.stderr)
        return EXIT_GEOMETRY
    return EXIT_OK


def cmd_split(args, out) -> int:
    poly = read_polygon_file(args.input)
    parts = decompose_polygon(poly, _tolerance(args, poly))
    write_text_atomic(args.out, write_polygon(Polygon(tuple(parts.contours), poly.fill_rule)))
    print(f"contours {len(parts.contours)} dropped_slivers {parts.dropped_slivers}", file=out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    poly = read_polygon_file(args.input)
    tol = _tolerance(args, poly)
    parts = decompose_polygon(poly, tol)
    for i, (raw, cc) in enumerate(zip(parts.contours, classify(parts.contours, poly, tol))):
        orient = "ccw" if orientation_of(raw, tol) is Orientation.CCW else "cw"
        kind = "hole" if cc.is_hole else "nonhole"
        print(f"{i} {_num(abs(signed_area(raw)))} {cc.winding} {kind} {orient}", file=out)
    return EXIT_OK


def cmd_winding(args, out) -> int:
    poly = read_polygon_file(args.input)
    p = Point(*args.point)
    try:
        w = winding_number(p, poly.contours, _tolerance(args, poly))
    except PointOnBoundary:
        print("undefined", file=out)
        print("error: winding number is undefined on the boundary", file=sys.stderr)
        return EXIT_GEOMETRY
    print(w, file=out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    subject = read_polygon_file(args.subject)
    clipper = read_polygon_file(args.clip)
    result = read_polygon_file(args.result)
    if args.grid < 16:
        raise UsageError("--grid must be at least 16")
    rep = compare_regions(subject, clipper, result, args.grid, args.band)
    print(f"{rep.mismatch_fraction:.6g}", file=out)
    if rep.mismatch_fraction > args.threshold:
        print(f"error: mismatch fraction {rep.mismatch_fraction:.6g} exceeds {args.threshold:g}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="selfclip", description="Clip self-intersecting polygons under either fill rule.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("clip", help="intersect two polygon files")
    p.add_argument("--subject", required=True)
    p.add_argument("--clip", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.add_argument("--eps", type=float)
    p.set_defaults(func=cmd_clip)

    p = sub.add_parser("split", help="decompose into simple contours")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--eps", type=float)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("classify", help="list decomposed contours with winding and hole flag")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--eps", type=float)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("winding", help="winding number of a point")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--point", nargs=2, type=float, metavar=("X", "Y"), required=True)
    p.add_argument("--eps", type=float)
    p.set_defaults(func=cmd_winding)

    p = sub.add_parser("oracle", help="grid-sample a clip result against its inputs")
    p.add_argument("--subject", required=True)
    p.add_argument("--clip", required=True)
    p.add_argument("--result", required=True)
    p.add_argument("--grid", type=int, default=512)
    p.add_argument("--band", type=float)
    p.add_argument("--threshold", type=float, default=0.01)
    p.set_defaults(func=cmd_oracle)
    return parser


def _one_line(exc) -> str:
    return " ".join(str(exc).split()) or type(exc).__name__


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required: clip, split, classify, winding or oracle")
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: usage: {_one_line(exc)}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: io: {exc.strerror or _one_line(exc)}: {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"error: parse: {_one_line(exc)}", file=sys.stderr)
        return EXIT_PARSE
    except UnicodeDecodeError:
        print("error: parse: input is not valid UTF-8", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as exc:
        print(f"error: geometry: {type(exc).__name__}: {_one_line(exc)}", file=sys.stderr)
        return EXIT_GEOMETRY


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
