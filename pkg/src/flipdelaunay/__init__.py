"""Exact hypermap triangulations, edge flips and the flip-until-Delaunay loop."""

from .builder import PointSet, initial_triangulation, insert_point, map_from_triangles
from .engine import TriMap, delaunay, find_illegal, is_illegal, no_dart_illegal, total_lifted_volume
from .geometry import Point, ccw, in_circle, pt
from .hypermap import Dim, Hypermap, OrbitKind, build_map, census
from .surgery import flip, flip_preconditions
from .verify import check_triangulation, check_wellembedded, delaunay_oracle, general_position

__all__ = [
    "PointSet", "initial_triangulation", "insert_point", "map_from_triangles",
    "TriMap", "delaunay", "find_illegal", "is_illegal", "no_dart_illegal", "total_lifted_volume",
    "Point", "ccw", "in_circle", "pt",
    "Dim", "Hypermap", "OrbitKind", "build_map", "census",
    "flip", "flip_preconditions",
    "check_triangulation", "check_wellembedded", "delaunay_oracle", "general_position",
]
