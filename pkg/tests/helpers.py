"""Fixtures, strategies and independent oracles shared by the test modules."""

import random
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from flipdelaunay.builder import map_from_triangles, random_point_set, triangle_map
from flipdelaunay.formats import load_map
from flipdelaunay.geometry import Point, pt
from flipdelaunay.hypermap import AddLink, Dim, Hypermap, InsertDart, Void

DATA = Path(__file__).parent / "data"

P, Q, R, S = pt(0, 0), pt(4, 0), pt(2, 3), pt(2, -1)
# the four-point quadrangle, enclosed by a large boundary triangle
RUNNING_POINTS = [P, Q, R, S, pt(-8, -6), pt(12, -6), pt(2, 14)]
RUNNING_TRIANGLES = [(0, 1, 2), (1, 0, 3), (4, 5, 3), (4, 3, 0), (5, 1, 3),
                     (5, 6, 1), (6, 2, 1), (6, 0, 2), (4, 0, 6), (4, 6, 5)]


def single_triangle():
    return triangle_map(pt(0, 0), pt(1, 0), pt(0, 1))


def running_example() -> Hypermap:
    """Triangles pqr and qps share the illegal edge pq; dart 1 runs p -> q."""
    return map_from_triangles(RUNNING_POINTS, RUNNING_TRIANGLES)


def running_example_file() -> Hypermap:
    return load_map((DATA / "running_example.hmap").read_text())


def point_set(seed, n):
    return random_point_set(random.Random(seed), n)


coords = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 7))
points = st.builds(Point, coords, coords)


def random_free_map(rng, n_darts=None, n_links=None):
    """A random valid constructor sequence built by rejection of failing links."""
    n_darts = n_darts or rng.randint(1, 14)
    ids = rng.sample(range(1, 4 * n_darts + 1), n_darts)
    m = Hypermap()
    seq = [Void()]
    for d in ids:
        seq.append(InsertDart(d, pt(rng.randint(-3, 3), rng.randint(-3, 3))))
        m = m.insert_dart(d, seq[-1].location)
    for _ in range(n_links if n_links is not None else 3 * n_darts):
        link = AddLink(Dim(rng.randint(0, 1)), rng.choice(ids), rng.choice(ids))
        try:
            m = m.add_link(link.dim, link.source, link.target)
        except Exception:
            continue
        seq.append(link)
    return tuple(seq), m


def naive_alpha(constructors, k, d):
    """alpha_k(d) by plain recursion over the constructor list.

    The successor is the target of a k-link out of d; without one, follow
    k-links backwards from d until no link enters the current dart.
    """
    links = [c for c in constructors if isinstance(c, AddLink) and c.dim == k]

    def out_of(x, rest):
        if not rest:
            return None
        head, *tail = rest
        return head.target if head.source == x else out_of(x, tail)

    def into(x, rest):
        if not rest:
            return None
        head, *tail = rest
        return head.source if head.target == x else into(x, tail)

    def start(x):
        prev = into(x, links)
        return x if prev is None else start(prev)

    nxt = out_of(d, links)
    return start(d) if nxt is None else nxt


def replay_closed(constructors):
    """Replay a free map on explicit closed permutations (no open paths stored).

    Linking x -> y in a closed permutation a: a(x) becomes y and the dart that
    used to map onto y takes over the old image of x.
    """
    perms = ({}, {})
    for c in constructors:
        if isinstance(c, InsertDart):
            for a in perms:
                a[c.dart] = c.dart
        elif isinstance(c, AddLink):
            a = perms[c.dim]
            pre_y = next(z for z, w in a.items() if w == c.target)
            a[c.source], a[pre_y] = c.target, a[c.source]
    return perms


def rand_point(rng, span=60, den=7):
    return Point(Fraction(rng.randint(-span, span), rng.randint(1, den)),
                 Fraction(rng.randint(-span, span), rng.randint(1, den)))


def sample_axiom5(rng):
    """(p, q, r, s, t) with ccw on qpr, qps, qpt, qrs and qst, by rejection."""
    from flipdelaunay.geometry import Orientation, ccw
    while True:
        p, q, r, s, t = (rand_point(rng) for _ in range(5))
        if all(ccw(*tri) is Orientation.POSITIVE
               for tri in ((q, p, r), (q, p, s), (q, p, t), (q, r, s), (q, s, t))):
            return p, q, r, s, t


def sample_exchange(rng):
    """(p, q, r, s) with ccw(p,q,r), ccw(q,p,s) and s inside the circle of pqr."""
    from flipdelaunay.geometry import Orientation, ccw, in_circle
    while True:
        p, q, r, s = (rand_point(rng) for _ in range(4))
        if (ccw(p, q, r) is Orientation.POSITIVE and ccw(q, p, s) is Orientation.POSITIVE
                and in_circle(p, q, r, s) is Orientation.POSITIVE):
            return p, q, r, s
