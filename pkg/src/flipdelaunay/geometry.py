"""Exact planar predicates and the paraboloid lift.

Coordinates are :class:`fractions.Fraction` values.  Sign predicates
(:func:`ccw`, :func:`in_circle`) clear denominators first and evaluate the
determinants on plain integers; scaling every coordinate by the same positive
factor never changes a sign.  Functions that return determinant *values*
work on fractions directly.
"""

from __future__ import annotations

import math
import re
from enum import IntEnum
from fractions import Fraction
from typing import NamedTuple, Union

Coord = Fraction
RationalLike = Union[int, str, Fraction]

_DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)")
_RATIO = re.compile(r"[+-]?\d+/\d+")


def parse_rational(text: str) -> Fraction:
    """Parse an integer, a finite decimal or ``num/den`` without any float step.

    >>> parse_rational("0.25")
    Fraction(1, 4)
    """
    s = text.strip()
    if _DECIMAL.fullmatch(s):
        return Fraction(s)
    if _RATIO.fullmatch(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    raise ValueError(f"not a rational literal: {text!r}")


def as_coord(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coordinate {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a coordinate")


def format_rational(q: Fraction, always_fraction: bool = False) -> str:
    """``num/den`` text for ``q``; integers print bare unless ``always_fraction``."""
    if q.denominator == 1 and not always_fraction:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __repr__(self):
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


class LiftedPoint(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction


def pt(x: RationalLike, y: RationalLike) -> Point:
    """Build a :class:`Point`, converting ints and literals exactly."""
    return Point(as_coord(x), as_coord(y))


class Orientation(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value) -> "Orientation":
        return cls((value > 0) - (value < 0))

    def __neg__(self):
        return Orientation(-int(self))


def common_denominator(*points) -> int:
    """Least common multiple of every coordinate denominator."""
    scale = 1
    for x, y in points:
        for c in (x.denominator, y.denominator):
            if c != 1 and scale % c:
                scale = math.lcm(scale, c)
    return scale


def integer_coordinates(*points):
    """Integer coordinates for ``points`` after multiplying by a common denominator.

    Orientation and in-circle signs of the scaled points equal those of the
    originals.
    """
    scale = common_denominator(*points)
    if scale == 1:
        return [(p[0].numerator, p[1].numerator) for p in points]
    return [
        (p[0].numerator * (scale // p[0].denominator),
         p[1].numerator * (scale // p[1].denominator))
        for p in points
    ]


def orient_value(p, q, r):
    """Raw orientation determinant on any numeric (x, y) pairs."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def incircle_value(p, q, r, s):
    """Raw lifted 4x4 determinant on any numeric (x, y) pairs."""
    # rows (x, y, x^2+y^2, 1); translating s to the origin leaves the value unchanged
    adx, ady = p[0] - s[0], p[1] - s[1]
    bdx, bdy = q[0] - s[0], q[1] - s[1]
    cdx, cdy = r[0] - s[0], r[1] - s[1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (alift * (bdx * cdy - cdx * bdy)
            + blift * (cdx * ady - adx * cdy)
            + clift * (adx * bdy - bdx * ady))


def orient_det(p: Point, q: Point, r: Point) -> Fraction:
    """Value of det[[xp, yp, 1], [xq, yq, 1], [xr, yr, 1]] (twice the signed area)."""
    return Fraction(orient_value(p, q, r))


def ccw(p: Point, q: Point, r: Point) -> Orientation:
    """Orientation of the triple; POSITIVE means counter-clockwise."""
    return Orientation.of(orient_value(*integer_coordinates(p, q, r)))


def in_circle_det(p: Point, q: Point, r: Point, s: Point) -> Fraction:
    return Fraction(incircle_value(p, q, r, s))


def in_circle(p: Point, q: Point, r: Point, s: Point) -> Orientation:
    """Sign of the lifted 4x4 determinant of ``p, q, r, s``.

    For a counter-clockwise ``(p, q, r)``, POSITIVE means ``s`` lies strictly
    inside their circumcircle, ZERO that the four points are cocircular.
    """
    return Orientation.of(incircle_value(*integer_coordinates(p, q, r, s)))


def lift(p: Point) -> LiftedPoint:
    return LiftedPoint(p.x, p.y, p.x * p.x + p.y * p.y)


def tetra_det(a: LiftedPoint, b: LiftedPoint, c: LiftedPoint, d: LiftedPoint) -> Fraction:
    """det of the 4x4 matrix with rows (x, y, z, 1); six times the signed tetrahedron volume."""
    ax, ay, az = a.x - d.x, a.y - d.y, a.z - d.z
    bx, by, bz = b.x - d.x, b.y - d.y, b.z - d.z
    cx, cy, cz = c.x - d.x, c.y - d.y, c.z - d.z
    return Fraction(ax * (by * cz - bz * cy)
                    - ay * (bx * cz - bz * cx)
                    + az * (bx * cy - by * cx))


def triangle_lift_volume(p: Point, q: Point, r: Point) -> Fraction:
    """Signed volume between triangle ``pqr`` at z=0 and its lifted copy.

    The solid is cut into the tetrahedra (p, q, r, R'), (p, q, R', Q') and
    (p, Q', R', P') where primes denote lifted points.  With the rows-plus-ones
    determinant convention these three determinants sum to minus six times the
    volume, so the sum is negated: a counter-clockwise triangle has positive
    volume.
    """
    P, Q, R = lift(p), lift(q), lift(r)
    zero = Fraction(0)
    p0, q0, r0 = (LiftedPoint(a.x, a.y, zero) for a in (p, q, r))
    total = tetra_det(p0, q0, r0, R) + tetra_det(p0, q0, R, Q) + tetra_det(p0, Q, R, P)
    return -total / 6


def prism_volume(p: Point, q: Point, r: Point) -> Fraction:
    """Closed form of :func:`triangle_lift_volume`: signed area times mean lifted height."""
    scale = common_denominator(p, q, r)
    return Fraction(scaled_prism_value(*integer_coordinates(p, q, r)), 6 * scale ** 4)


def scaled_prism_value(a, b, c):
    """Six times the prism volume for integer-scaled corners (scale**4 times too large)."""
    twice_area = orient_value(a, b, c)
    heights = sum(u * u + v * v for u, v in (a, b, c))
    return twice_area * heights


def circumcenter(p: Point, q: Point, r: Point) -> Point:
    """Exact circumcenter of a non-degenerate triangle."""
    d = 2 * orient_det(p, q, r)
    if d == 0:
        raise ValueError("collinear points have no circumcircle")
    bx, by = q.x - p.x, q.y - p.y
    cx, cy = r.x - p.x, r.y - p.y
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Point(p.x + ux, p.y + uy)
