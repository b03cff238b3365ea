import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flipdelaunay.geometry import (
    LiftedPoint,
    Orientation,
    as_coord,
    ccw,
    circumcenter,
    format_rational,
    in_circle,
    in_circle_det,
    lift,
    orient_det,
    parse_rational,
    prism_volume,
    pt,
    tetra_det,
    triangle_lift_volume,
)

from helpers import P, Q, R, S, points, sample_axiom5, sample_exchange

POS, ZERO, NEG = Orientation.POSITIVE, Orientation.ZERO, Orientation.NEGATIVE


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)), ("-7", Fraction(-7)), ("0.25", Fraction(1, 4)),
    ("0.1", Fraction(1, 10)), ("-2.5", Fraction(-5, 2)), ("1/3", Fraction(1, 3)),
    ("-4/6", Fraction(-2, 3)), (" 12 ", Fraction(12)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "1e3", "nan", "inf", "", "1/2/3", "0x10", "1.5/2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_as_coord_refuses_floats():
    with pytest.raises(TypeError):
        as_coord(0.5)
    with pytest.raises(TypeError):
        as_coord(True)
    assert as_coord("0.5") == Fraction(1, 2)


def test_format_rational():
    assert format_rational(Fraction(4)) == "4"
    assert format_rational(Fraction(0), always_fraction=True) == "0/1"
    assert format_rational(Fraction(-3, 8)) == "-3/8"


def test_ccw_examples():
    assert ccw(pt(0, 0), pt(1, 0), pt(0, 1)) is POS
    assert ccw(pt(0, 0), pt(0, 1), pt(1, 0)) is NEG
    assert ccw(pt(0, 0), pt(1, 1), pt(2, 2)) is ZERO
    assert orient_det(pt(0, 0), pt(1, 0), pt(0, 1)) == 1


def test_in_circle_examples():
    o, a, b = pt(0, 0), pt(1, 0), pt(0, 1)
    assert in_circle(o, a, b, pt(1, 1)) is ZERO
    assert in_circle_det(o, a, b, pt("1/4", "1/4")) == Fraction(3, 8)
    assert in_circle(o, a, b, pt("1/4", "1/4")) is POS
    assert in_circle_det(P, Q, R, S) == 16
    assert in_circle(o, a, b, pt(5, 5)) is NEG


def test_lift_examples():
    assert lift(pt(0, 0)) == (0, 0, 0)
    assert lift(pt(2, 3)) == (2, 3, 13)
    assert lift(pt("1/2", "1/2")) == (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


def test_tetra_det_examples():
    assert tetra_det(*map(lift, (P, Q, R, S))) == 16
    square = [pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]
    assert tetra_det(*map(lift, square)) == 0
    unit = [LiftedPoint(0, 0, 0), LiftedPoint(1, 0, 0), LiftedPoint(0, 1, 0), LiftedPoint(0, 0, 1)]
    assert abs(tetra_det(*unit)) == 1


def test_triangle_lift_volume_examples():
    assert triangle_lift_volume(pt(0, 0), pt(1, 1), pt(2, 2)) == 0
    assert triangle_lift_volume(pt(0, 0), pt(1, 0), pt(0, 1)) == Fraction(1, 3)
    assert prism_volume(pt(0, 0), pt(1, 0), pt(0, 1)) == Fraction(1, 3)
    assert triangle_lift_volume(pt(0, 0), pt(0, 1), pt(1, 0)) == Fraction(-1, 3)


def test_circumcenter():
    c = circumcenter(P, Q, R)
    assert c == pt(2, "5/6")
    with pytest.raises(ValueError):
        circumcenter(pt(0, 0), pt(1, 1), pt(2, 2))


@given(points, points, points)
def test_axiom1_cyclic(p, q, r):
    assert ccw(p, q, r) == ccw(q, r, p) == ccw(r, p, q)


@given(points, points, points)
def test_antisymmetry(p, q, r):
    assert ccw(p, q, r) == -ccw(q, p, r)


@given(points, points, points)
def test_axioms_2_and_3(p, q, r):
    if ccw(p, q, r) is POS:
        assert ccw(p, r, q) is not POS
    if ccw(p, q, r) is not ZERO:
        assert POS in (ccw(p, q, r), ccw(p, r, q))
    assert ccw(p, p, q) is ZERO


@given(st.integers(0, 2**32))
def test_axiom5(seed):
    p, q, r, s, t = sample_axiom5(random.Random(seed))
    assert ccw(q, r, t) is POS


@given(points, points, points, points)
def test_in_circle_cyclic_and_lift(p, q, r, s):
    assert in_circle(p, q, r, s) == in_circle(q, r, p, s)
    assert in_circle_det(p, q, r, s) == tetra_det(*map(lift, (p, q, r, s)))


@given(points, points, points)
def test_prism_formulas_agree(p, q, r):
    assert triangle_lift_volume(p, q, r) == prism_volume(p, q, r)
    assert prism_volume(q, p, r) == -prism_volume(p, q, r)


@given(points, points, points, points)
def test_flip_volume_identity(p, q, r, s):
    lhs = (triangle_lift_volume(p, q, r) + triangle_lift_volume(q, p, s)
           - triangle_lift_volume(r, s, q) - triangle_lift_volume(s, r, p))
    assert lhs == tetra_det(*map(lift, (p, q, r, s))) / 6


@given(st.integers(0, 2**32))
def test_exchange(seed):
    p, q, r, s = sample_exchange(random.Random(seed))
    assert ccw(r, s, q) is POS and ccw(s, r, p) is POS


@given(points, points, points, st.integers(1, 9))
def test_signs_are_scale_invariant(p, q, r, k):
    scaled = [pt(a.x * k, a.y * k) for a in (p, q, r)]
    assert ccw(*scaled) == ccw(p, q, r)
