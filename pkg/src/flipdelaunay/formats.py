"""Text formats: point files, map files (``HMAP v1``) and flip traces.

Point file::

    # comment
    0 0          <- the first three data lines: boundary triangle, ccw
    10 0
    0 10
    2.5 1/3      <- interior points

Map file::

    HMAP v1
    D <dart> <x> <y>      one per InsertDart, in constructor order
    L <0|1> <src> <dst>   one per AddLink, in constructor order
    M <dart> <x> <y>      optional location overrides left by flips
"""

from __future__ import annotations

from typing import Mapping

from .builder import PointSet
from .errors import HypermapError
from .geometry import Point, format_rational, parse_rational
from .hypermap import AddLink, Dim, FreeMap, Hypermap, InsertDart, Void, build_map

HEADER = "HMAP v1"


class ParseError(HypermapError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _rational(token, lineno):
    try:
        return parse_rational(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(lineno, str(exc)) from None


def _dart(token, lineno):
    if not token.isdigit():
        raise ParseError(lineno, f"bad dart id {token!r}")
    return int(token)


def parse_points(text: str) -> PointSet:
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"expected 'x y', got {line!r}")
        points.append(Point(_rational(fields[0], lineno), _rational(fields[1], lineno)))
    if len(points) < 3:
        raise ParseError(0, "a point file needs at least the three boundary points")
    return PointSet(tuple(points[:3]), tuple(points[3:]))


def format_points(ps: PointSet) -> str:
    return "".join(f"{format_rational(p.x)} {format_rational(p.y)}\n" for p in ps.points)


def is_map_text(text: str) -> bool:
    return text.split("\n", 1)[0].strip() == HEADER


def parse_map_text(text: str) -> tuple[FreeMap, dict[int, Point]]:
    """Constructor sequence and override table, exactly as written in the file."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise ParseError(1, f"expected header {HEADER!r}")
    constructors = [Void()]
    overrides = {}
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split(" ")
        tag = fields[0]
        if len(fields) != 4:
            raise ParseError(lineno, f"expected 4 fields, got {line!r}")
        if overrides and tag != "M":
            raise ParseError(lineno, "M lines must come last")
        if tag == "D":
            constructors.append(InsertDart(
                _dart(fields[1], lineno),
                Point(_rational(fields[2], lineno), _rational(fields[3], lineno))))
        elif tag == "L":
            if fields[1] not in ("0", "1"):
                raise ParseError(lineno, f"bad dimension {fields[1]!r}")
            constructors.append(AddLink(Dim(int(fields[1])), _dart(fields[2], lineno),
                                        _dart(fields[3], lineno)))
        elif tag == "M":
            d = _dart(fields[1], lineno)
            if d in overrides:
                raise ParseError(lineno, f"dart {d} relocated twice")
            overrides[d] = Point(_rational(fields[2], lineno), _rational(fields[3], lineno))
        else:
            raise ParseError(lineno, f"unknown record {tag!r}")
    return tuple(constructors), overrides


def format_map_text(constructors: FreeMap, overrides: Mapping[int, Point] = None) -> str:
    out = [HEADER]
    for c in constructors:
        if isinstance(c, InsertDart):
            out.append(f"D {c.dart} {format_rational(c.location.x)} {format_rational(c.location.y)}")
        elif isinstance(c, AddLink):
            out.append(f"L {int(c.dim)} {c.source} {c.target}")
    for d, p in (overrides or {}).items():
        out.append(f"M {d} {format_rational(p.x)} {format_rational(p.y)}")
    return "\n".join(out) + "\n"


def dump_map(m) -> str:
    """Map file text for a Hypermap or TriMap; overrides sorted by dart id."""
    m = getattr(m, "map", m)
    return format_map_text(m.base, dict(sorted(m.overrides.items())))


def load_map(text: str) -> Hypermap:
    """Parse and validate a map file; constructor errors are reported as ParseError."""
    constructors, overrides = parse_map_text(text)
    try:
        return build_map(constructors, overrides)
    except HypermapError as exc:
        index = getattr(exc, "index", None)
        # the constructor at index i sits on line i + 1 (header is line 1, Void has no line)
        lineno = index + 1 if index is not None else 0
        raise ParseError(lineno, str(exc)) from None
