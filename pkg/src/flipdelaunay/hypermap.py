"""Hypermaps stored as free maps: darts plus open paths of links.

A free map is a tuple of constructors, ``Void()`` followed by
``InsertDart`` and ``AddLink`` entries.  Per dimension the stored links never
close a cycle; the permutation ``alpha_k`` is recovered by sending the end of
each open path back to its start.

:class:`Hypermap` is immutable from the outside.  Every transformation
returns a new map; the private ``_``-prefixed mutators are only ever applied
to a fresh clone.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .errors import (
    ConstructorError,
    DuplicateDart,
    MalformedFreeMap,
    NilDart,
    SourceHasSuccessor,
    TargetHasPredecessor,
    UnknownDart,
    WouldCloseOrbit,
)
from .geometry import Point

NIL = 0


class Dim(IntEnum):
    ZERO = 0
    ONE = 1


@dataclass(frozen=True)
class Void:
    pass


@dataclass(frozen=True)
class InsertDart:
    dart: int
    location: Point


@dataclass(frozen=True)
class AddLink:
    dim: Dim
    source: int
    target: int


Constructor = Union[Void, InsertDart, AddLink]
FreeMap = tuple  # tuple[Constructor, ...], Void first


class OrbitKind(Enum):
    DIM0 = "dim0"
    DIM1 = "dim1"
    FACE = "face"


class Hypermap:
    """A validated free map with stored-link tables and dart locations."""

    __slots__ = ("_darts", "_base_loc", "_overrides", "_succ", "_pred",
                 "_links", "_cache")

    def __init__(self):
        self._darts: list[int] = []
        self._base_loc: dict[int, Point] = {}
        self._overrides: dict[int, Point] = {}
        self._succ = ({}, {})
        self._pred = ({}, {})
        self._links: dict[AddLink, None] = {}  # ordered set
        self._cache: dict = {}

    # -- read access ------------------------------------------------------

    @property
    def darts(self) -> tuple[int, ...]:
        """Darts in insertion order."""
        return tuple(self._darts)

    @property
    def base(self) -> FreeMap:
        """Canonical constructor sequence: Void, every InsertDart, then every AddLink."""
        inserts = tuple(InsertDart(d, self._base_loc[d]) for d in self._darts)
        return (Void(),) + inserts + tuple(self._links)

    @property
    def links(self) -> tuple[AddLink, ...]:
        return tuple(self._links)

    @property
    def overrides(self) -> dict[int, Point]:
        """Locations that differ from the InsertDart coordinates (set by flips)."""
        return dict(self._overrides)

    def __len__(self):
        return len(self._darts)

    def __contains__(self, d):
        return d in self._base_loc

    def __eq__(self, other):
        if not isinstance(other, Hypermap):
            return NotImplemented
        return self.base == other.base and self._overrides == other._overrides

    def __hash__(self):
        return hash((self.base, tuple(sorted(self._overrides.items()))))

    def __repr__(self):
        return f"<Hypermap darts={len(self._darts)} links={len(self._links)}>"

    def require(self, *darts: int) -> None:
        """Raise UnknownDart for the first of ``darts`` missing from the map."""
        for d in darts:
            if d not in self._base_loc:
                raise UnknownDart(d)

    def location(self, d: int) -> Point:
        self.require(d)
        return self._overrides.get(d, self._base_loc[d])

    def succ(self, k: Dim, d: int) -> Optional[int]:
        """Stored ``k``-successor of ``d``, or None."""
        self.require(d)
        return self._succ[k].get(d)

    def pred(self, k: Dim, d: int) -> Optional[int]:
        self.require(d)
        return self._pred[k].get(d)

    def path_start(self, k: Dim, d: int) -> int:
        """First dart of the open ``k``-path containing ``d``."""
        pred = self._pred[k]
        while d in pred:
            d = pred[d]
        return d

    def path_end(self, k: Dim, d: int) -> int:
        succ = self._succ[k]
        while d in succ:
            d = succ[d]
        return d

    def _perm(self, k: Dim):
        """Closed permutation at dimension ``k`` and its inverse, built once per map."""
        cached = self._cache.get(k)
        if cached is not None:
            return cached
        succ, pred = self._succ[k], self._pred[k]
        fwd, inv = {}, {}
        for start in self._darts:
            if start in pred:
                continue
            d = start
            while d in succ:
                nxt = succ[d]
                fwd[d], inv[nxt] = nxt, d
                d = nxt
            fwd[d], inv[start] = start, d
        self._cache[k] = (fwd, inv)
        return fwd, inv

    def alpha(self, k: Dim, d: int, inverse: bool = False) -> int:
        """``alpha_k(d)``, or its inverse: the stored link if any, else close the open path."""
        self.require(d)
        fwd, inv = self._perm(Dim(k))
        return inv[d] if inverse else fwd[d]

    def face_succ(self, d: int, inverse: bool = False) -> int:
        """phi(d) = alpha_1^-1(alpha_0^-1(d)); the inverse is alpha_0(alpha_1(d))."""
        self.require(d)
        f0, i0 = self._perm(Dim.ZERO)
        f1, i1 = self._perm(Dim.ONE)
        if inverse:
            return f0[f1[d]]
        return i1[i0[d]]

    def _step_fn(self, kind: OrbitKind):
        if kind is OrbitKind.FACE:
            _, i0 = self._perm(Dim.ZERO)
            _, i1 = self._perm(Dim.ONE)
            return lambda d: i1[i0[d]]
        fwd, _ = self._perm(Dim.ZERO if kind is OrbitKind.DIM0 else Dim.ONE)
        return fwd.__getitem__

    def orbit(self, kind: OrbitKind, d: int) -> list[int]:
        """The cycle of ``d`` under the chosen permutation, starting at ``d``."""
        self.require(d)
        step = self._step_fn(OrbitKind(kind))
        out = [d]
        e = step(d)
        while e != d:
            out.append(e)
            e = step(e)
        return out

    def orbits(self, kind: OrbitKind) -> tuple[tuple[int, ...], ...]:
        """All orbits of one kind, each starting at its earliest-inserted dart."""
        kind = OrbitKind(kind)
        cached = self._cache.get(kind)
        if cached is not None:
            return cached
        step = self._step_fn(kind)
        seen = set()
        result = []
        for d in self._darts:
            if d in seen:
                continue
            cycle = [d]
            seen.add(d)
            e = step(d)
            while e != d:
                cycle.append(e)
                seen.add(e)
                e = step(e)
            result.append(tuple(cycle))
        self._cache[kind] = result = tuple(result)
        return result

    def locations(self) -> dict[int, Point]:
        """Location of every dart (a fresh dict)."""
        cached = self._cache.get("locations")
        if cached is None:
            cached = {d: self._overrides.get(d, p) for d, p in self._base_loc.items()}
            self._cache["locations"] = cached
        return dict(cached)

    # -- constructors -------------------------------------------------------

    def insert_dart(self, d: int, location: Point) -> "Hypermap":
        """Apply ``I``: add a fresh dart (prec_I checked)."""
        m = self._clone()
        m._insert(d, location)
        return m

    def add_link(self, k: Dim, x: int, y: int) -> "Hypermap":
        """Apply ``L``: add the ``k``-link x -> y (prec_L checked)."""
        m = self._clone()
        m._link(Dim(k), x, y)
        return m

    def with_location(self, d: int, location: Point) -> "Hypermap":
        """Return a map where dart ``d`` sits at ``location``."""
        self.require(d)
        m = self._clone()
        m._relocate(d, location)
        return m

    # -- private mutators (fresh clones only) ---------------------------------

    def _clone(self) -> "Hypermap":
        m = Hypermap.__new__(Hypermap)
        m._darts = list(self._darts)
        m._base_loc = dict(self._base_loc)
        m._overrides = dict(self._overrides)
        m._succ = (dict(self._succ[0]), dict(self._succ[1]))
        m._pred = (dict(self._pred[0]), dict(self._pred[1]))
        m._links = dict(self._links)
        m._cache = {}
        return m

    def _insert(self, d, location, index=None):
        if d == NIL:
            raise NilDart(index)
        if not isinstance(d, int) or d < 0:
            raise ConstructorError(f"dart ids are positive integers, got {d!r}", index)
        if d in self._base_loc:
            raise DuplicateDart(d, index)
        self._darts.append(d)
        self._base_loc[d] = location
        self._cache.clear()

    def _link(self, k, x, y, index=None):
        for d in (x, y):
            if d == NIL:
                raise NilDart(index)
            if d not in self._base_loc:
                raise UnknownDart(d, index)
        if x in self._succ[k]:
            raise SourceHasSuccessor(k, x, index)
        if y in self._pred[k]:
            raise TargetHasPredecessor(k, y, index)
        # x has no successor, so alpha_k(x) is the start of x's path
        if self.path_start(k, x) == y:
            raise WouldCloseOrbit(k, x, y, index)
        self._succ[k][x] = y
        self._pred[k][y] = x
        self._links[AddLink(k, x, y)] = None
        self._cache.clear()

    def _unlink(self, k, x):
        y = self._succ[k].pop(x)
        del self._pred[k][y]
        del self._links[AddLink(k, x, y)]
        self._cache.clear()
        return y

    def _relocate(self, d, location):
        if self._base_loc[d] == location:
            self._overrides.pop(d, None)
        else:
            self._overrides[d] = location
        self._cache.clear()


def build_map(constructors: Iterable[Constructor],
              overrides: Optional[Mapping[int, Point]] = None) -> Hypermap:
    """Replay a free map, checking prec_I / prec_L on every constructor.

    Errors carry the index of the first offending constructor.  ``overrides``
    relocates darts after the replay (the ``M`` lines of a map file).
    """
    seq = tuple(constructors)
    if not seq or not isinstance(seq[0], Void):
        raise MalformedFreeMap("a free map starts with Void")
    m = Hypermap()
    for i, c in enumerate(seq[1:], start=1):
        if isinstance(c, InsertDart):
            m._insert(c.dart, c.location, i)
        elif isinstance(c, AddLink):
            m._link(Dim(c.dim), c.source, c.target, i)
        elif isinstance(c, Void):
            raise MalformedFreeMap(f"constructor #{i}: Void may only appear first")
        else:
            raise MalformedFreeMap(f"constructor #{i}: unknown constructor {c!r}")
    for d, p in (overrides or {}).items():
        m.require(d)
        m._relocate(d, p)
    return m


@dataclass(frozen=True)
class Census:
    d: int
    e: int
    v: int
    f: int
    c: int
    chi: int
    genus: Fraction

    @property
    def planar(self) -> bool:
        return self.genus == 0

    def __str__(self):
        g = self.genus
        gs = str(g.numerator) if g.denominator == 1 else f"{g.numerator}/{g.denominator}"
        return (f"d={self.d} e={self.e} v={self.v} f={self.f} c={self.c} "
                f"chi={self.chi} genus={gs}")


def _components(m: Hypermap) -> int:
    parent = {d: d for d in m.darts}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k in (Dim.ZERO, Dim.ONE):
        fwd, _ = m._perm(k)
        for a, b in fwd.items():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return sum(1 for d in parent if find(d) == d)


def census(m: Hypermap) -> Census:
    """Counts of darts, edges, vertices, faces and components, with chi and genus."""
    d = len(m)
    e = len(m.orbits(OrbitKind.DIM0))
    v = len(m.orbits(OrbitKind.DIM1))
    f = len(m.orbits(OrbitKind.FACE))
    c = _components(m)
    chi = v + e + f - d
    return Census(d, e, v, f, c, chi, Fraction(c) - Fraction(chi, 2))


def darts_and_points(m: Hypermap) -> tuple[tuple[int, ...], tuple[Point, ...]]:
    """Darts in insertion order and the sorted, duplicate-free point list."""
    points = sorted({m.location(d) for d in m.darts})
    return m.darts, tuple(points)
