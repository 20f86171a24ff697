"""Planar primitives: points, directed lines, polygons, and their basic measures.

Everything here is immutable and every operation is a pure function, so values
can be shared freely across threads. Comparisons are tolerance-based; the
default tolerance is relative (scaled by a polygon diameter or another length
that the caller supplies).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence, Union

DEFAULT_TOL = 1e-9


class GeometryError(Exception):
    """A construction failed for geometric reasons."""


class ParallelLinesError(GeometryError):
    """Lines expected to meet are parallel within tolerance."""


class DegenerateGeometryError(GeometryError):
    """Input or intermediate geometry collapsed (coincident or collinear points)."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, k: float) -> "Point":
        return Point(k * self.x, k * self.y)

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        """z-component of the 3D cross product (signed parallelogram area)."""
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def from_complex(z: complex) -> "Point":
        return Point(z.real, z.imag)


@dataclass(frozen=True, init=False)
class DirectedLine:
    """A line stored as base point plus unit direction (never as a slope)."""

    base: Point
    direction: Point

    def __init__(self, base: Point, direction: Point):
        n = direction.norm()
        if not math.isfinite(n) or n == 0.0:
            raise DegenerateGeometryError("line direction must be a nonzero vector")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "direction", Point(direction.x / n, direction.y / n))

    @classmethod
    def through(cls, p: Point, q: Point) -> "DirectedLine":
        if p.x == q.x and p.y == q.y:
            raise DegenerateGeometryError("cannot build a line through two coincident points")
        return cls(p, q - p)

    @classmethod
    def at_angle(cls, p: Point, angle: float) -> "DirectedLine":
        return cls(p, Point(math.cos(angle), math.sin(angle)))

    def normal(self) -> Point:
        """Unit normal, the direction rotated by +90 degrees."""
        return Point(-self.direction.y, self.direction.x)

    def point_at(self, t: float) -> Point:
        return self.base + self.direction.scaled(t)

    def distance_to(self, p: Point) -> float:
        return abs(self.direction.cross(p - self.base))

    def angle(self) -> float:
        return math.atan2(self.direction.y, self.direction.x)


PointLike = Union[Point, Sequence[float]]


@dataclass(frozen=True, init=False)
class Polygon:
    """An n-gon as an ordered vertex tuple with cyclic indexing (n >= 3)."""

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Iterable[PointLike]):
        pts = tuple(p if isinstance(p, Point) else Point(float(p[0]), float(p[1])) for p in vertices)
        if len(pts) < 3:
            raise ValueError(f"a polygon needs at least 3 vertices, got {len(pts)}")
        object.__setattr__(self, "vertices", pts)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def side_line(self, i: int) -> DirectedLine:
        return DirectedLine.through(self[i], self[i + 1])

    def side_length(self, i: int) -> float:
        return self[i].distance_to(self[i + 1])

    @cached_property
    def diameter(self) -> float:
        """Largest pairwise vertex distance."""
        pts = self.vertices
        return max(pts[i].distance_to(pts[j]) for i in range(len(pts)) for j in range(i + 1, len(pts)))

    def centroid(self) -> Point:
        n = len(self.vertices)
        return Point(sum(p.x for p in self.vertices) / n, sum(p.y for p in self.vertices) / n)

    def shifted(self, k: int) -> "Polygon":
        n = len(self.vertices)
        return Polygon(tuple(self[(i + k) % n] for i in range(n)))

    def reversed(self) -> "Polygon":
        return Polygon(tuple(reversed(self.vertices)))


class Orientation(str, Enum):
    CCW = "ccw"
    CW = "cw"
    DEGENERATE = "degenerate"


def area(p: Polygon) -> float:
    """Signed (shoelace) area: half the cyclic sum of det(V_i, V_{i+1})."""
    total = 0.0
    verts = p.vertices
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return 0.5 * total


def orientation(p: Polygon, tol: float = DEFAULT_TOL) -> Orientation:
    """Sign classification of the signed area, with a tolerance band for degeneracy."""
    a = area(p)
    band = tol * p.diameter ** 2
    if a > band:
        return Orientation.CCW
    if a < -band:
        return Orientation.CW
    return Orientation.DEGENERATE


def foot_of_perpendicular(x: Point, line: DirectedLine) -> Point:
    """Orthogonal projection of x onto the line."""
    t = (x - line.base).dot(line.direction)
    return line.point_at(t)


def signed_distance(x: Point, line: DirectedLine, normal: Point, tol: float = 1e-9) -> float:
    """Signed distance from x to the line along the given unit normal.

    Equals normal . (Y - x) for any point Y on the line; the sign tells which
    side of the line x lies on. Raises if `normal` is not a unit vector
    perpendicular to the line.
    """
    if abs(normal.norm() - 1.0) > tol:
        raise GeometryError("signed_distance requires a unit normal vector")
    if abs(normal.dot(line.direction)) > tol:
        raise GeometryError("signed_distance normal must be perpendicular to the line")
    return normal.dot(line.base - x)


def vertex_angle(p: Polygon, i: int) -> float:
    """Unsigned angle at vertex i, in (0, pi), between the edges to its neighbours."""
    u = p[i - 1] - p[i]
    w = p[i + 1] - p[i]
    nu, nw = u.norm(), w.norm()
    if nu == 0.0 or nw == 0.0:
        raise DegenerateGeometryError(f"vertex {i} coincides with a neighbour")
    cross = u.cross(w)
    if abs(cross) <= 1e-12 * nu * nw:
        raise DegenerateGeometryError(f"vertices {i - 1}, {i}, {i + 1} are collinear")
    return math.atan2(abs(cross), u.dot(w))


def line_intersection(l1: DirectedLine, l2: DirectedLine, tol: float = 1e-12) -> Point:
    """Intersection point of two lines; raises ParallelLinesError if parallel."""
    denom = l1.direction.cross(l2.direction)
    if abs(denom) <= tol:
        raise ParallelLinesError("lines are parallel within tolerance")
    t = (l2.base - l1.base).cross(l2.direction) / denom
    return l1.point_at(t)


def area_by_signed_distances(v: Polygon, x: Point) -> float:
    """Triangle area recomputed from side lengths and signed distances to x.

    For a counterclockwise triangle this equals area(v) for *every* point x,
    using outward unit normals: the signed sub-triangle contributions cancel.
    """
    if len(v) != 3:
        raise GeometryError("area_by_signed_distances is defined for triangles")
    if orientation(v) is not Orientation.CCW:
        raise GeometryError("area_by_signed_distances requires counterclockwise orientation")
    total = 0.0
    for i in range(3):
        line = v.side_line(i)
        outward = Point(line.direction.y, -line.direction.x)
        total += v.side_length(i) * signed_distance(x, line, outward)
    return 0.5 * total


def polygon_to_json_dict(p: Polygon) -> dict:
    return {"vertices": [[pt.x, pt.y] for pt in p.vertices]}


def polygon_from_json_dict(data: object) -> Polygon:
    """Parse {"vertices": [[x, y], ...]}; rejects n < 3 and non-finite entries."""
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError("polygon JSON must be an object with a 'vertices' key")
    raw = data["vertices"]
    if not isinstance(raw, list) or len(raw) < 3:
        raise ValueError("polygon JSON needs a list of at least 3 vertices")
    pts = []
    for entry in raw:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ValueError(f"vertex entries must be [x, y] pairs, got {entry!r}")
        x, y = entry
        if not isinstance(x, (int, float)) or not isinstance(y, (int, float)):
            raise ValueError(f"vertex coordinates must be numbers, got {entry!r}")
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"vertex coordinates must be finite, got {entry!r}")
        pts.append(Point(float(x), float(y)))
    return Polygon(pts)
