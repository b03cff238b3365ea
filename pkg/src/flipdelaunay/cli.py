"""Command-line driver: ``triangulate``, ``delaunay``, ``check`` and ``stats``.

Exit codes: 0 success, 1 I/O or parse error, 2 invalid or degenerate input,
3 Delaunay oracle failure, 4 flip budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .builder import initial_triangulation
from .engine import (
    TriMap,
    delaunay,
    illegal_edges,
    total_lifted_volume,
)
from .errors import DegenerateInput, FlipBudgetExceeded, NotATriangulation
from .formats import ParseError, dump_map, is_map_text, load_map, parse_points
from .geometry import format_rational
from .hypermap import census
from .svg import render_svg
from .verify import check_triangulation, check_wellembedded, delaunay_oracle, general_position

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_ORACLE, EXIT_BUDGET = range(5)


class _Exit(Exception):
    def __init__(self, code):
        self.code = code


def _err(msg):
    print(msg, file=sys.stderr)


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _err(f"error: {exc}")
        raise _Exit(EXIT_PARSE)


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        _err(f"error: {exc}")
        raise _Exit(EXIT_PARSE)


def _load_points(path, cocircular):
    """Parse a point file and triangulate it; exits 2 on degenerate input."""
    try:
        ps = parse_points(_read(path))
    except ParseError as exc:
        _err(f"{path}: {exc}")
        raise _Exit(EXIT_PARSE)
    try:
        return initial_triangulation(ps, cocircular=cocircular)
    except DegenerateInput as exc:
        report = general_position(ps, cocircular=cocircular)
        lines = report.lines() if not report.passed else [f"VIOLATION general_position {exc}"]
        for line in lines:
            print(line)
        raise _Exit(EXIT_INVALID)


def _load_map(path):
    try:
        return load_map(_read(path))
    except ParseError as exc:
        _err(f"{path}: {exc}")
        raise _Exit(EXIT_PARSE)


def _certified(m):
    try:
        return TriMap.certify(m)
    except NotATriangulation as exc:
        for report in exc.reports:
            for line in report.lines():
                print(line)
        raise _Exit(EXIT_INVALID)


def cmd_triangulate(args):
    t = _load_points(args.input, args.cocircular_scan)
    _write(args.output, dump_map(t))
    return EXIT_OK


def cmd_delaunay(args):
    text = _read(args.input)
    if is_map_text(text):
        t = _certified(_load_map(args.input))
    else:
        t = _load_points(args.input, args.cocircular_scan)

    svg_dir = Path(args.svg) if args.svg else None
    if svg_dir is not None:
        svg_dir.mkdir(parents=True, exist_ok=True)

    def on_flip(before, event, after):
        if svg_dir is not None:
            render_svg(before, svg_dir / f"flip_{len(trace_lines) + 1:04d}.svg")
        trace_lines.append(event.line())

    trace_lines = []
    code = EXIT_OK
    try:
        final, _ = delaunay(t, max_flips=args.max_flips, on_flip=on_flip)
    except FlipBudgetExceeded as exc:
        _err(f"error: {exc}")
        final, code = None, EXIT_BUDGET
    if args.trace:
        _write(args.trace, "".join(line + "\n" for line in trace_lines))
    if final is None:
        return code
    if svg_dir is not None:
        render_svg(final, svg_dir / "final.svg")
    # keep stdout clean when the map itself is written there
    status = sys.stderr if args.output in (None, "-") else sys.stdout
    print(f"flips {len(trace_lines)}", file=status)
    if args.check:
        report = delaunay_oracle(final)
        for line in report.lines():
            print(line, file=status)
        if not report.passed:
            code = EXIT_ORACLE
    _write(args.output, dump_map(final))
    return code


def cmd_check(args):
    m = _load_map(args.input)
    tri = check_triangulation(m)
    reports = [tri]
    if tri.passed:
        reports.append(check_wellembedded(m))
    for report in reports:
        for line in report.lines():
            print(line)
    if not all(r.passed for r in reports):
        print("CHECK delaunay SKIPPED")
        return EXIT_INVALID
    oracle = delaunay_oracle(m)
    for line in oracle.lines():
        print(line)
    return EXIT_OK if oracle.passed else EXIT_ORACLE


def cmd_stats(args):
    m = _load_map(args.input)
    print(census(m))
    t = _certified(m)
    print(f"volume {format_rational(total_lifted_volume(t), always_fraction=True)}")
    print(f"illegal_edges {len(illegal_edges(t))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flipdelaunay",
        description="Exact hypermap triangulations and Delaunay edge flipping.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangulate", help="build the starting triangulation of a point file")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--cocircular-scan", action="store_true",
                   help="also reject four cocircular points (O(n^4))")
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("delaunay", help="flip illegal edges until the map is Delaunay")
    p.add_argument("input", help="point file or HMAP v1 map file")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--trace", help="write one FLIP line per flip to this file")
    p.add_argument("--svg", help="directory for one SVG per flip plus final.svg")
    p.add_argument("--max-flips", type=int, default=None)
    p.add_argument("--check", action="store_true", help="run the brute-force oracle on the result")
    p.add_argument("--cocircular-scan", action="store_true")
    p.set_defaults(func=cmd_delaunay)

    p = sub.add_parser("check", help="validate a map file and run the Delaunay oracle")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("stats", help="census, lifted volume and illegal-edge count")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
