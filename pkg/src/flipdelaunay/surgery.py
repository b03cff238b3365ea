"""Shift, split and merge on open-path link storage, and the edge flip built on them."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    NoSuccessor,
    NotSameOrbit,
    NotTwoDartEdge,
    PrecondViolated,
    SameDart,
    SameOrbit,
)
from .geometry import Orientation, ccw
from .hypermap import Dim, Hypermap, OrbitKind


# In-place helpers: only ever called on a map the caller has just cloned.

def _shift(m: Hypermap, k: Dim, x: int) -> None:
    z = m.path_end(k, x)
    t = m.path_start(k, x)
    m._unlink(k, x)
    m._link(k, z, t)


def _split(m: Hypermap, k: Dim, x: int, y: int) -> None:
    if m.succ(k, x) is not None:
        _shift(m, k, x)
    # x is now the end of the only open path, so y has a successor
    m._unlink(k, y)


def _merge(m: Hypermap, k: Dim, x: int, y: int) -> None:
    if m.succ(k, x) is not None:
        _shift(m, k, x)
    w = m.pred(k, y)
    if w is not None:
        _shift(m, k, w)
    m._link(k, x, y)


def _same_orbit(m: Hypermap, k: Dim, x: int, y: int) -> bool:
    return m.path_start(k, x) == m.path_start(k, y)


def shift(m: Hypermap, k: Dim, x: int) -> Hypermap:
    """Move the stored link out of ``x`` to the end of its path; alpha_k is unchanged."""
    k = Dim(k)
    if m.succ(k, x) is None:
        raise NoSuccessor(k, x)
    out = m._clone()
    _shift(out, k, x)
    return out


def split(m: Hypermap, k: Dim, x: int, y: int) -> Hypermap:
    """Cut the ``k``-orbit holding ``x`` and ``y`` into two orbits.

    Afterwards neither ``x`` nor ``y`` has a stored ``k``-successor; the two
    new orbits are ``alpha(x) .. y`` and ``alpha(y) .. x`` in the old cycle
    order.  The result does not depend on the order of ``x`` and ``y``.
    """
    k = Dim(k)
    m.require(x, y)
    if x == y:
        raise SameDart(x)
    if not _same_orbit(m, k, x, y):
        raise NotSameOrbit(k, x, y)
    out = m._clone()
    _split(out, k, x, y)
    return out


def merge(m: Hypermap, k: Dim, x: int, y: int) -> Hypermap:
    """Join the ``k``-orbits of ``x`` and ``y`` so that alpha_k(x) = y."""
    k = Dim(k)
    m.require(x, y)
    if _same_orbit(m, k, x, y):
        raise SameOrbit(k, x, y)
    out = m._clone()
    _merge(out, k, x, y)
    return out


class FailureReason(Enum):
    SAME_FACE = "same_face"
    SMALL_VERTEX = "small_vertex"
    NOT_CONVEX = "not_convex"
    NOT_TWO_DART_EDGE = "not_two_dart_edge"
    NONE = "none"


@dataclass(frozen=True)
class FlipPrecondReport:
    topological_ok: bool
    embedding_ok: bool
    failure_reason: FailureReason = FailureReason.NONE


@dataclass(frozen=True)
class FlipQuad:
    """Darts and corner points around the edge of ``x``.

    The face of ``x`` is (x, y1, y2) with corners (p, q, r); the face of its
    partner ``x2`` is (x2, z1, z2) with corners (q, p, s).
    """
    x: int
    x2: int
    y1: int
    y2: int
    z1: int
    z2: int
    p: object
    q: object
    r: object
    s: object

    @property
    def changed_darts(self) -> frozenset:
        return frozenset((self.x, self.x2, self.y1, self.y2, self.z1, self.z2))


def flip_quad(m: Hypermap, x: int) -> FlipQuad:
    x2 = m.alpha(Dim.ZERO, x)
    y1 = m.face_succ(x)
    y2 = m.face_succ(y1)
    z1 = m.face_succ(x2)
    z2 = m.face_succ(z1)
    loc = m.location
    return FlipQuad(x, x2, y1, y2, z1, z2, loc(x), loc(x2), loc(y2), loc(z2))


def flip_preconditions(m: Hypermap, x: int) -> FlipPrecondReport:
    """Check prec_Flip (topology) and prec_Flip_emb (convex quadrangle) for the edge of ``x``."""
    edge = m.orbit(OrbitKind.DIM0, x)
    if len(edge) != 2:
        raise NotTwoDartEdge(x, len(edge))
    x2 = edge[1]
    face = m.orbit(OrbitKind.FACE, x)
    if x2 in face:
        return FlipPrecondReport(False, False, FailureReason.SAME_FACE)
    if (len(m.orbit(OrbitKind.DIM1, x)) < 3
            or len(m.orbit(OrbitKind.DIM1, x2)) < 3):
        return FlipPrecondReport(False, False, FailureReason.SMALL_VERTEX)
    if len(face) != 3 or len(m.orbit(OrbitKind.FACE, x2)) != 3:
        return FlipPrecondReport(True, False, FailureReason.NOT_CONVEX)
    quad = flip_quad(m, x)
    p, q, r, s = quad.p, quad.q, quad.r, quad.s
    # quadrangle r, p, s, q in counter-clockwise order
    convex = all(ccw(a, b, c) is Orientation.POSITIVE
                 for a, b, c in ((r, p, s), (p, s, q), (s, q, r), (q, r, p)))
    if not convex:
        return FlipPrecondReport(True, False, FailureReason.NOT_CONVEX)
    return FlipPrecondReport(True, True)


def flip(m: Hypermap, x: int) -> Hypermap:
    """Move the edge of ``x`` onto the other diagonal of its quadrangle.

    Triangles (p, q, r) and (q, p, s) sharing edge pq become (r, s, q) and
    (s, r, p): ``x`` moves from p to r and its partner from q to s.  The edge
    is detached by two splits at dimension 1, reattached by two merges, and
    the two moved darts are relocated.
    """
    try:
        report = flip_preconditions(m, x)
    except NotTwoDartEdge:
        report = FlipPrecondReport(False, False, FailureReason.NOT_TWO_DART_EDGE)
    if not report.embedding_ok:
        raise PrecondViolated(x, report)
    quad = flip_quad(m, x)
    out = m._clone()
    _split(out, Dim.ONE, x, out.alpha(Dim.ONE, x, inverse=True))
    _split(out, Dim.ONE, quad.x2, out.alpha(Dim.ONE, quad.x2, inverse=True))
    _merge(out, Dim.ONE, quad.y2, x)
    _merge(out, Dim.ONE, quad.z2, quad.x2)
    out._relocate(x, quad.r)
    out._relocate(quad.x2, quad.s)
    return out
