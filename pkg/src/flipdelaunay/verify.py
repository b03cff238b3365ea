"""Independent checkers for triangulations, embeddings and the Delaunay property.

Nothing here uses the flip machinery or the illegal-edge test; the Delaunay
oracle compares every internal face against every vertex by brute force.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Sequence

from .errors import HypermapError
from .geometry import (
    Orientation,
    incircle_value,
    orient_value,
    ccw,
    format_rational,
    integer_coordinates,
)
from .hypermap import Hypermap, OrbitKind, build_map, census


class Rule(Enum):
    INV_HMAP = "inv_hmap"
    NOT_PLANAR = "not_planar"
    EDGE_SIZE = "edge_size"
    FACE_SIZE = "face_size"
    VERTEX_CONSISTENCY = "vertex_consistency"
    EDGE_DEGENERATE = "edge_degenerate"
    FACE_ORIENTATION = "face_orientation"
    NOT_DELAUNAY = "not_delaunay"
    DUPLICATE = "duplicate"
    COLLINEAR = "collinear"
    COCIRCULAR = "cocircular"


@dataclass(frozen=True)
class Violation:
    rule: Rule
    darts: tuple = ()
    points: tuple = ()
    detail: str = ""

    def __str__(self):
        parts = [self.rule.value]
        if self.darts:
            parts.append("darts=" + ",".join(map(str, self.darts)))
        if self.points:
            parts.append("points=" + ";".join(
                f"{format_rational(p.x)},{format_rational(p.y)}" for p in self.points))
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


@dataclass
class CheckReport:
    name: str
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, rule, darts=(), points=(), detail=""):
        self.violations.append(Violation(rule, tuple(darts), tuple(points), detail))

    def lines(self) -> list[str]:
        """Machine-readable records: a status line, then one line per violation."""
        out = [f"CHECK {self.name} {'PASS' if self.passed else 'FAIL'} {len(self.violations)}"]
        out += [f"VIOLATION {self.name} {v}" for v in self.violations]
        return out


def _unwrap(t) -> Hypermap:
    return getattr(t, "map", t)


def face_orientation(m: Hypermap, face: Sequence[int]) -> Orientation:
    a, b, c = (m.location(d) for d in face)
    return ccw(a, b, c)


def _scaled_locations(m: Hypermap) -> dict:
    """Dart -> integer coordinates, all scaled by one common denominator."""
    locs = m.locations()
    darts = list(locs)
    return dict(zip(darts, integer_coordinates(*(locs[d] for d in darts))))


def check_triangulation(m) -> CheckReport:
    """inv_hmap, genus 0, two-dart edges and three-dart faces."""
    m = _unwrap(m)
    report = CheckReport("triangulation")
    try:
        build_map(m.base, m.overrides)
    except HypermapError as exc:
        report.add(Rule.INV_HMAP, detail=str(exc))
        return report
    cs = census(m)
    if not cs.planar:
        report.add(Rule.NOT_PLANAR, detail=f"genus={cs.genus}")
    for edge in m.orbits(OrbitKind.DIM0):
        if len(edge) != 2:
            report.add(Rule.EDGE_SIZE, darts=edge, detail=f"size={len(edge)}")
    for face in m.orbits(OrbitKind.FACE):
        if len(face) != 3:
            report.add(Rule.FACE_SIZE, darts=face, detail=f"size={len(face)}")
    return report


def check_wellembedded(m) -> CheckReport:
    """Vertex consistency, non-degenerate edges, one clockwise face and the rest ccw."""
    m = _unwrap(m)
    report = CheckReport("wellembedded")
    loc = m.locations()
    for vertex in m.orbits(OrbitKind.DIM1):
        first = loc[vertex[0]]
        if any(loc[d] != first for d in vertex[1:]):
            report.add(Rule.VERTEX_CONSISTENCY, darts=vertex,
                       points=sorted({loc[d] for d in vertex}))
    for edge in m.orbits(OrbitKind.DIM0):
        pts = [loc[d] for d in edge]
        if any(a == b for i, a in enumerate(pts) for b in pts[i + 1:]):
            report.add(Rule.EDGE_DEGENERATE, darts=edge, points=sorted(set(pts)))
    scaled = _scaled_locations(m)
    clockwise = []
    for face in m.orbits(OrbitKind.FACE):
        if len(face) != 3:
            continue
        o = orient_value(*(scaled[d] for d in face))
        if o == 0:
            report.add(Rule.FACE_ORIENTATION, darts=face, detail="flat triangle")
        elif o < 0:
            clockwise.append(face)
    if len(clockwise) != 1:
        if not clockwise:
            report.add(Rule.FACE_ORIENTATION, detail="no clockwise external face")
        for face in clockwise:
            report.add(Rule.FACE_ORIENTATION, darts=face,
                       detail=f"{len(clockwise)} clockwise faces")
    return report


def delaunay_oracle(t) -> CheckReport:
    """Brute force: no vertex strictly inside the circumcircle of any internal face."""
    m = _unwrap(t)
    report = CheckReport("delaunay")
    points = sorted({m.location(d) for d in m.darts})
    scaled = dict(zip(points, integer_coordinates(*points)))
    for face in m.orbits(OrbitKind.FACE):
        if len(face) != 3:
            continue
        corners = [m.location(d) for d in face]
        a, b, c = (scaled[p] for p in corners)
        if orient_value(a, b, c) <= 0:
            continue
        for p in points:
            if p in corners:
                continue
            if incircle_value(a, b, c, scaled[p]) > 0:
                report.add(Rule.NOT_DELAUNAY, darts=face, points=corners + [p],
                           detail="point inside circumcircle")
    return report


def general_position(ps, cocircular: bool = False) -> CheckReport:
    """Report duplicate points, collinear triples and (opt-in) cocircular quadruples."""
    points = list(getattr(ps, "points", ps))
    report = CheckReport("general_position")
    seen = {}
    for p in points:
        if p in seen:
            report.add(Rule.DUPLICATE, points=[p])
        seen[p] = True
    distinct = list(seen)
    scaled = integer_coordinates(*distinct) if distinct else []
    for i, j, k in combinations(range(len(distinct)), 3):
        if orient_value(scaled[i], scaled[j], scaled[k]) == 0:
            report.add(Rule.COLLINEAR, points=[distinct[i], distinct[j], distinct[k]])
    if cocircular:
        for i, j, k, l in combinations(range(len(distinct)), 4):
            if orient_value(scaled[i], scaled[j], scaled[k]) == 0:
                continue
            if incircle_value(scaled[i], scaled[j], scaled[k], scaled[l]) == 0:
                report.add(Rule.COCIRCULAR,
                           points=[distinct[i], distinct[j], distinct[k], distinct[l]])
    return report
