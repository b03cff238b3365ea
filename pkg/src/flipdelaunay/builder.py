"""Initial triangulations: an enclosing triangle refined by 1-to-3 splits."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .engine import TriMap
from .errors import DegenerateInput, NotInside, OnEdge
from .geometry import Orientation, Point, ccw
from .hypermap import AddLink, Dim, Hypermap, InsertDart, OrbitKind, Void, build_map
from .surgery import _merge
from .verify import general_position


@dataclass(frozen=True)
class PointSet:
    boundary: tuple  # three Points, counter-clockwise
    interior: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "interior", tuple(self.interior))
        if len(self.boundary) != 3:
            raise ValueError("the boundary needs exactly three points")

    @property
    def points(self) -> tuple:
        return self.boundary + self.interior


def validate_point_set(ps: PointSet, cocircular: bool = False) -> None:
    """Raise DegenerateInput unless ``ps`` is in general position inside a ccw boundary."""
    report = general_position(ps, cocircular=cocircular)
    if not report.passed:
        v = report.violations[0]
        raise DegenerateInput(
            f"{v.rule.value} points: {', '.join(map(repr, v.points))}", v.points)
    a, b, c = ps.boundary
    if ccw(a, b, c) is not Orientation.POSITIVE:
        raise DegenerateInput("boundary triangle is not counter-clockwise", ps.boundary)
    for p in ps.interior:
        if not all(ccw(u, v, p) is Orientation.POSITIVE
                   for u, v in ((a, b), (b, c), (c, a))):
            raise DegenerateInput(f"point {p!r} is not inside the boundary", (p,))


def triangle_map(a: Point, b: Point, c: Point) -> Hypermap:
    """The 6-dart map of one ccw triangle and its clockwise external face."""
    return build_map((
        Void(),
        InsertDart(1, a), InsertDart(2, b), InsertDart(3, b),
        InsertDart(4, c), InsertDart(5, c), InsertDart(6, a),
        AddLink(Dim.ZERO, 1, 2), AddLink(Dim.ZERO, 3, 4), AddLink(Dim.ZERO, 5, 6),
        AddLink(Dim.ONE, 1, 6), AddLink(Dim.ONE, 2, 3), AddLink(Dim.ONE, 4, 5),
    ))


def _internal_faces(m: Hypermap):
    for face in sorted(m.orbits(OrbitKind.FACE), key=min):
        if len(face) == 3:
            corners = [m.location(d) for d in face]
            if ccw(*corners) is Orientation.POSITIVE:
                yield face, corners


def locate(t, p: Point) -> int:
    """Lowest dart of the internal triangle strictly containing ``p``."""
    m = getattr(t, "map", t)
    touching = None
    for face, (a, b, c) in _internal_faces(m):
        signs = [ccw(u, v, p) for u, v in ((a, b), (b, c), (c, a))]
        if all(s is Orientation.POSITIVE for s in signs):
            return min(face)
        if touching is None and all(s is not Orientation.NEGATIVE for s in signs):
            touching = face
    if touching is not None:
        raise OnEdge(f"point {p!r} lies on the boundary of face {touching}")
    raise NotInside(f"point {p!r} is outside every internal triangle")


def _split_face(m: Hypermap, face, p: Point, first: int) -> None:
    # face (u, v, w) with corners A, B, C; for each corner X a dart X->P and P->X
    u, v, w = face
    new = list(range(first, first + 6))
    for corner, (to_p, from_p) in zip(face, zip(new[0::2], new[1::2])):
        m._insert(to_p, m.location(corner))
        m._insert(from_p, p)
        m._link(Dim.ZERO, to_p, from_p)
    m._link(Dim.ONE, new[1], new[3])
    m._link(Dim.ONE, new[3], new[5])
    _merge(m, Dim.ONE, u, new[0])
    _merge(m, Dim.ONE, v, new[2])
    _merge(m, Dim.ONE, w, new[4])


def insert_point(t, p: Point) -> Hypermap:
    """Connect ``p`` to the corners of its containing triangle with six new darts."""
    m = getattr(t, "map", t)
    d = locate(m, p)
    face = m.orbit(OrbitKind.FACE, d)
    out = m._clone()
    _split_face(out, face, p, max(m.darts) + 1)
    return out


def initial_triangulation(ps: PointSet, cocircular: bool = False) -> TriMap:
    """Triangulate ``ps``: boundary triangle first, then interior points in order."""
    validate_point_set(ps, cocircular=cocircular)
    m = triangle_map(*ps.boundary)
    for p in ps.interior:
        m = insert_point(m, p)
    return TriMap.certify(m)


def map_from_triangles(locations: Sequence[Point], triangles: Sequence[Sequence[int]]) -> Hypermap:
    """Hypermap whose faces are the given vertex-index cycles.

    Every directed edge (i, j) of a cycle becomes one dart located at point
    ``i``; darts are numbered from 1 in cycle order.  Each reversed edge must
    also appear.  Include the clockwise external face to obtain a closed
    triangulation.
    """
    dart_of = {}
    for tri in triangles:
        for i, j in zip(tri, tuple(tri[1:]) + (tri[0],)):
            if (i, j) in dart_of:
                raise ValueError(f"directed edge {(i, j)} appears twice")
            dart_of[i, j] = len(dart_of) + 1
    alpha0, alpha1 = {}, {}
    for (i, j), d in dart_of.items():
        if (j, i) not in dart_of:
            raise ValueError(f"edge {(i, j)} has no reverse")
        alpha0[d] = dart_of[j, i]
    for tri in triangles:
        n = len(tri)
        for idx in range(n):
            u, v, w = tri[idx], tri[(idx + 1) % n], tri[(idx + 2) % n]
            # phi(u->v) = v->w, hence alpha_1(v->w) = alpha_0(u->v)
            alpha1[dart_of[v, w]] = alpha0[dart_of[u, v]]
    constructors = [Void()]
    constructors += [InsertDart(d, locations[i]) for (i, _), d in dart_of.items()]
    for k, perm in ((Dim.ZERO, alpha0), (Dim.ONE, alpha1)):
        seen = set()
        for d in sorted(perm):
            if d in seen:
                continue
            cycle = [d]
            seen.add(d)
            while perm[cycle[-1]] != d:
                cycle.append(perm[cycle[-1]])
                seen.add(cycle[-1])
            constructors += [AddLink(k, a, b) for a, b in zip(cycle, cycle[1:])]
    return build_map(constructors)


DEFAULT_BOUNDARY = (Point(Fraction(0), Fraction(0)), Point(Fraction(1000), Fraction(0)),
                    Point(Fraction(0), Fraction(1000)))


def random_point_set(rng, n: int, boundary=DEFAULT_BOUNDARY, grid: int = 1000,
                     cocircular: bool = False) -> PointSet:
    """``n`` random interior points on a 1/grid lattice, in general position.

    Points are drawn strictly inside ``boundary`` and a draw that creates a
    duplicate or collinear triple is discarded and redrawn.
    """
    a, b, c = boundary
    xs = [p.x for p in boundary]
    ys = [p.y for p in boundary]
    lo_x, hi_x = int(min(xs) * grid), int(max(xs) * grid)
    lo_y, hi_y = int(min(ys) * grid), int(max(ys) * grid)
    interior = []
    while len(interior) < n:
        p = Point(Fraction(rng.randint(lo_x, hi_x), grid), Fraction(rng.randint(lo_y, hi_y), grid))
        if not all(ccw(u, v, p) is Orientation.POSITIVE for u, v in ((a, b), (b, c), (c, a))):
            continue
        candidate = PointSet(boundary, tuple(interior) + (p,))
        if _fits(candidate, p, cocircular):
            interior.append(p)
    return PointSet(boundary, tuple(interior))


def _fits(ps: PointSet, p: Point, cocircular: bool) -> bool:
    # only the tuples involving the new point need testing
    others = [q for q in ps.points if q is not p]
    if p in others:
        return False
    for i in range(len(others)):
        for j in range(i + 1, len(others)):
            if ccw(others[i], others[j], p) is Orientation.ZERO:
                return False
    if cocircular:
        return general_position(ps, cocircular=True).passed
    return True
