from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flipdelaunay.builder import initial_triangulation, map_from_triangles
from flipdelaunay.engine import (
    TriMap,
    default_flip_budget,
    delaunay,
    find_illegal,
    illegal_edges,
    is_illegal,
    no_dart_illegal,
    step_tri,
    total_lifted_volume,
)
from flipdelaunay.errors import FlipBudgetExceeded, NotATriangulation
from flipdelaunay.geometry import lift, prism_volume, pt, tetra_det
from flipdelaunay.hypermap import Dim, OrbitKind, census
from flipdelaunay.surgery import flip_quad
from flipdelaunay.verify import delaunay_oracle

from helpers import P, Q, R, S, point_set, running_example, single_triangle


def tri(m):
    return TriMap.certify(m)


def test_running_example_illegal_edge():
    t = tri(running_example())
    assert is_illegal(t, 1)
    assert is_illegal(t, t.map.alpha(Dim.ZERO, 1))
    assert illegal_edges(t) == [1]
    assert find_illegal(t) == 1
    assert not no_dart_illegal(t)


def test_external_edges_are_never_illegal():
    t = tri(single_triangle())
    assert not any(is_illegal(t, d) for d in t.map.darts)
    assert no_dart_illegal(t) and find_illegal(t) is None


def test_cocircular_diagonal_is_legal():
    square = [pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]
    m = map_from_triangles(square, [(0, 1, 2), (0, 2, 3), (0, 3, 2, 1)])
    diagonal = next(d for d in m.darts if {m.location(d), m.location(m.alpha(Dim.ZERO, d))}
                    == {pt(0, 0), pt(1, 1)})
    assert not is_illegal(m, diagonal)


def test_single_triangle_measure():
    assert total_lifted_volume(tri(single_triangle())) == 0


def test_measure_matches_per_dart_sum():
    t = initial_triangulation(point_set(3, 8))
    m = t.map
    per_dart = sum(prism_volume(*(m.location(e) for e in m.orbit(OrbitKind.FACE, d)))
                   for d in m.darts)
    assert total_lifted_volume(t) == per_dart


def test_running_example_step():
    t = tri(running_example())
    nxt = step_tri(t)
    assert nxt.map.location(1) == R
    assert no_dart_illegal(nxt)
    assert total_lifted_volume(t) - total_lifted_volume(nxt) == 8
    assert 3 * tetra_det(*map(lift, (P, Q, R, S))) / 6 == 8


def test_step_on_delaunay_map_is_identity():
    t = tri(single_triangle())
    assert step_tri(t) is t


def test_running_example_delaunay():
    t = tri(running_example())
    out, trace = delaunay(t)
    assert trace.flip_count == 1
    event = trace.events[0]
    assert event.dart == 1
    assert event.measure_before - event.measure_after == 8
    assert trace.lines() == [f"FLIP 1 {event.measure_before.numerator}/1 "
                             f"{event.measure_after.numerator}/1"]
    assert no_dart_illegal(out) and delaunay_oracle(out).passed


def test_delaunay_complete_input_unchanged():
    t = tri(single_triangle())
    out, trace = delaunay(t)
    assert out.map == t.map and trace.flip_count == 0 and trace.text() == ""


def test_budget_exceeded():
    with pytest.raises(FlipBudgetExceeded) as err:
        delaunay(tri(running_example()), max_flips=0)
    assert err.value.max_flips == 0


def test_default_budget():
    assert default_flip_budget(tri(running_example())) == 10 * 7 * 7


def test_certify_rejects_bad_maps():
    m = running_example().with_location(1, pt(100, 100))
    with pytest.raises(NotATriangulation):
        TriMap.certify(m)


def test_on_flip_callback():
    seen = []
    t = initial_triangulation(point_set(11, 12))
    out, trace = delaunay(t, on_flip=lambda a, e, b: seen.append((a, e, b)))
    assert [e for _, e, _ in seen] == trace.events
    if seen:
        assert seen[0][0] is t and seen[-1][2] is out


@settings(max_examples=25)
@given(st.integers(0, 2**32), st.sampled_from([4, 10, 25]))
def test_loop_matches_literal_step_iteration(seed, n):
    t = initial_triangulation(point_set(seed, n))
    out, trace = delaunay(t, recheck=False)
    cur, flips = t, []
    while not no_dart_illegal(cur):
        flips.append(find_illegal(cur))
        cur = step_tri(cur, recheck=False)
    assert [e.dart for e in trace.events] == flips
    assert cur.map == out.map


@settings(max_examples=25)
@given(st.integers(0, 2**32), st.sampled_from([4, 10, 25]))
def test_every_flip_decreases_by_lifted_tetrahedron(seed, n):
    t = initial_triangulation(point_set(seed, n))
    checks = []

    def on_flip(before, event, after):
        quad = flip_quad(before.map, event.dart)
        vol = tetra_det(*map(lift, (quad.p, quad.q, quad.r, quad.s)))
        checks.append(event.measure_before - event.measure_after == Fraction(3 * vol, 6) > 0)
        checks.append(census(after.map) == census(before.map))

    out, _ = delaunay(t, on_flip=on_flip)
    assert all(checks)
    assert no_dart_illegal(out) and delaunay_oracle(out).passed


@settings(max_examples=25)
@given(st.integers(0, 2**32), st.sampled_from([4, 10]))
def test_illegality_is_symmetric_and_find_is_lowest(seed, n):
    t = initial_triangulation(point_set(seed, n))
    m = t.map
    for d in m.darts:
        assert is_illegal(t, d) == is_illegal(t, m.alpha(Dim.ZERO, d))
    bad = illegal_edges(t)
    assert find_illegal(t) == (bad[0] if bad else None)
