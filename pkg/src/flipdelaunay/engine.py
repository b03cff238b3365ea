"""Illegal edges, the lifted-volume measure and the flip-until-Delaunay loop."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import (
    FlipBudgetExceeded,
    InternalInvariantBroken,
    NotATriangulation,
    PrecondViolated,
)
from .geometry import (
    Orientation,
    ccw,
    common_denominator,
    format_rational,
    in_circle,
    integer_coordinates,
    prism_volume,
    scaled_prism_value,
)
from .hypermap import Dim, Hypermap, OrbitKind, darts_and_points
from .surgery import flip, flip_quad
from .verify import check_triangulation, check_wellembedded

# Re-check certificates after every flip unless running with ``python -O``.
RECHECK_DEFAULT = __debug__


@dataclass(frozen=True)
class TriMap:
    """A hypermap together with its triangulation and well-embedding certificates."""

    map: Hypermap
    cert_triangulation: bool = False
    cert_wellembedded: bool = False

    @classmethod
    def certify(cls, m: Hypermap) -> "TriMap":
        """Run both checks; raise NotATriangulation listing every violation."""
        reports = [check_triangulation(m)]
        if reports[0].passed:
            reports.append(check_wellembedded(m))
        if not all(r.passed for r in reports):
            raise NotATriangulation(reports)
        return cls(m, True, True)


@dataclass(frozen=True)
class FlipEvent:
    dart: int
    measure_before: Fraction
    measure_after: Fraction

    def line(self) -> str:
        return (f"FLIP {self.dart} {format_rational(self.measure_before, True)} "
                f"{format_rational(self.measure_after, True)}")


@dataclass
class FlipTrace:
    events: list = field(default_factory=list)

    @property
    def flip_count(self) -> int:
        return len(self.events)

    def lines(self) -> list[str]:
        return [e.line() for e in self.events]

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def _map(t) -> Hypermap:
    return getattr(t, "map", t)


def is_illegal(t: TriMap, d: int) -> bool:
    """Both triangles at the edge of ``d`` are ccw and the opposite vertex is inside a circumcircle."""
    m = _map(t)
    face = m.orbit(OrbitKind.FACE, d)
    other = m.orbit(OrbitKind.FACE, m.alpha(Dim.ZERO, d))
    if len(face) != 3 or len(other) != 3:
        return False
    p, q, r = (m.location(e) for e in face)
    s = m.location(other[2])
    if ccw(p, q, r) is not Orientation.POSITIVE or ccw(q, p, s) is not Orientation.POSITIVE:
        return False
    # the test is symmetric in the two triangles, one determinant suffices
    return in_circle(p, q, r, s) is Orientation.POSITIVE


def find_illegal(t: TriMap) -> Optional[int]:
    """Lowest dart id lying on an illegal edge, or None."""
    m = _map(t)
    for d in sorted(m.darts):
        # the partner was already tested if it has a smaller id
        if m.alpha(Dim.ZERO, d) < d:
            continue
        if is_illegal(m, d):
            return d
    return None


def no_dart_illegal(t: TriMap) -> bool:
    return find_illegal(t) is None


def illegal_edges(t: TriMap) -> list[int]:
    """Lowest dart of every illegal edge, in increasing order."""
    m = _map(t)
    return [d for d in sorted(m.darts)
            if m.alpha(Dim.ZERO, d) > d and is_illegal(m, d)]


def total_lifted_volume(t: TriMap) -> Fraction:
    """Sum over every dart of the lifted volume of its face.

    Each face is visited once and weighted by its dart count, so a triangle
    contributes three times.  All corners share one integer scale, so the sum
    is accumulated on integers and divided once.
    """
    m = _map(t)
    loc = m.locations()
    darts = list(loc)
    scale = common_denominator(*loc.values())
    scaled = dict(zip(darts, integer_coordinates(*(loc[d] for d in darts))))
    total = 0
    for face in m.orbits(OrbitKind.FACE):
        if len(face) != 3:
            raise InternalInvariantBroken(f"face {face} is not a triangle")
        total += 3 * scaled_prism_value(*(scaled[d] for d in face))
    return Fraction(total, 6 * scale ** 4)


def _flip_certified(t: TriMap, d: int, recheck: bool) -> TriMap:
    try:
        m = flip(t.map, d)
    except PrecondViolated as exc:
        raise InternalInvariantBroken(f"illegal edge {d} failed flip preconditions: {exc}")
    if not recheck:
        return TriMap(m, True, True)
    try:
        return TriMap.certify(m)
    except NotATriangulation as exc:
        raise InternalInvariantBroken(f"flip of {d} broke a certificate: {exc}")


def step_tri(t: TriMap, recheck: bool = RECHECK_DEFAULT) -> TriMap:
    """Flip the lowest illegal edge, or return ``t`` unchanged when there is none."""
    d = find_illegal(t)
    if d is None:
        return t
    return _flip_certified(t, d, recheck)


def default_flip_budget(t: TriMap) -> int:
    n = len(darts_and_points(_map(t))[1])
    return 10 * n * n


def delaunay(t: TriMap, max_flips: Optional[int] = None,
             recheck: bool = RECHECK_DEFAULT,
             on_flip: Optional[Callable[[TriMap, FlipEvent, TriMap], None]] = None):
    """Flip illegal edges until none remains; return the final map and its trace.

    The measure is updated from the two triangles each flip replaces and must
    strictly decrease; with ``recheck`` it is also recomputed from scratch and
    both certificates are re-run after every flip.
    """
    budget = default_flip_budget(t) if max_flips is None else max_flips
    trace = FlipTrace()
    measure = total_lifted_volume(t)
    # only the five edges of the flipped quadrangle can change legality
    pending = set(illegal_edges(t))
    while pending:
        if trace.flip_count >= budget:
            raise FlipBudgetExceeded(budget, trace)
        d = min(pending)
        quad = flip_quad(t.map, d)
        p, q, r, s = quad.p, quad.q, quad.r, quad.s
        removed = prism_volume(p, q, r) + prism_volume(q, p, s)
        added = prism_volume(r, s, q) + prism_volume(s, r, p)
        after = measure - 3 * removed + 3 * added
        nxt = _flip_certified(t, d, recheck)
        if recheck and total_lifted_volume(nxt) != after:
            raise InternalInvariantBroken(f"measure bookkeeping drifted at flip of {d}")
        if not after < measure:
            raise InternalInvariantBroken(f"measure did not decrease at flip of {d}")
        event = FlipEvent(d, measure, after)
        trace.events.append(event)
        if on_flip is not None:
            on_flip(t, event, nxt)
        for e in (quad.x, quad.y1, quad.y2, quad.z1, quad.z2):
            key = min(e, nxt.map.alpha(Dim.ZERO, e))
            pending.discard(key)
            if is_illegal(nxt, key):
                pending.add(key)
        t, measure = nxt, after
    return t, trace
