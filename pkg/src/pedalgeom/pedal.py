"""Pedal and antipedal maps, iterated pedal sequences, and path reversal."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    DEFAULT_TOL,
    DegenerateGeometryError,
    DirectedLine,
    GeometryError,
    ParallelLinesError,
    Point,
    Polygon,
    foot_of_perpendicular,
    line_intersection,
)
from .similarity import Similarity, fit_similarity


def pedal(v: Polygon, x: Point, tol: float = DEFAULT_TOL) -> Polygon:
    """Pedal polygon of v with respect to x.

    Vertex i of the result is the foot of the perpendicular from x to the
    line through V_i, V_{i+1}. Aborts with DegenerateGeometryError when a side
    collapses or two consecutive feet coincide (within tol * diam(v)), rather
    than propagating a broken polygon.
    """
    scale = v.diameter
    eps = tol * scale
    n = len(v)
    feet = []
    for i in range(n):
        a, b = v[i], v[i + 1]
        if a.distance_to(b) <= eps:
            raise DegenerateGeometryError(f"side {i} of the polygon has coincident endpoints")
        feet.append(foot_of_perpendicular(x, DirectedLine.through(a, b)))
    for i in range(n):
        if feet[i].distance_to(feet[(i + 1) % n]) <= eps:
            raise DegenerateGeometryError(
                f"pedal output has coincident consecutive vertices {i}, {(i + 1) % n}"
            )
    return Polygon(feet)


def antipedal(v: Polygon, x: Point, tol: float = DEFAULT_TOL) -> Polygon:
    """Antipedal polygon: side line i passes through V_i perpendicular to the line x-V_i.

    Inverse construction to the pedal map: pedal(antipedal(v, x), x) == v.
    """
    scale = v.diameter
    n = len(v)
    lines = []
    for i in range(n):
        d = v[i] - x
        if d.norm() <= tol * scale:
            raise DegenerateGeometryError(f"antipedal center coincides with vertex {i}")
        lines.append(DirectedLine(v[i], Point(-d.y, d.x)))
    verts = []
    for i in range(n):
        try:
            verts.append(line_intersection(lines[i - 1], lines[i]))
        except ParallelLinesError as exc:
            raise DegenerateGeometryError(
                f"consecutive antipedal side lines {i - 1}, {i} are parallel"
            ) from exc
    return Polygon(verts)


@dataclass(frozen=True)
class PedalIteration:
    polygon: Polygon
    intermediates: tuple[Polygon, ...]  # starts at the source polygon


def iterated_pedal(v: Polygon, points: Sequence[Point], tol: float = DEFAULT_TOL) -> PedalIteration:
    """Fold the pedal map over a point sequence, keeping every intermediate."""
    inter = [v]
    cur = v
    for k, x in enumerate(points):
        try:
            cur = pedal(cur, x, tol)
        except GeometryError as exc:
            raise DegenerateGeometryError(
                f"pedal step {k + 1} of {len(points)} degenerated: {exc}"
            ) from exc
        inter.append(cur)
    return PedalIteration(cur, tuple(inter))


def reverse_path(v: Polygon, points: Sequence[Point], tol: float = DEFAULT_TOL) -> list[Point]:
    """Point sequence that carries the pedal image of v back to a copy similar to v.

    Each step X_k is undone (last first) by pedaling n-1 more times at the
    same point, which lands on a similar copy of the previous intermediate;
    later points are mapped forward through the numerically fitted similarity
    between that copy and the original intermediate.
    """
    chain = iterated_pedal(v, points, tol).intermediates
    n = len(v)
    current = chain[-1]
    carry = Similarity.identity()
    out: list[Point] = []
    for k in range(len(points), 0, -1):
        xk = carry.apply(points[k - 1])
        for _ in range(n - 1):
            current = pedal(current, xk, tol)
            out.append(xk)
        direct, rms_d = fit_similarity(chain[k - 1].vertices, current.vertices)
        mirrored, rms_m = fit_similarity(chain[k - 1].vertices, current.vertices, True)
        carry = direct if rms_d <= rms_m else mirrored
    return out


@dataclass(frozen=True)
class PathStep:
    point: Point
    provenance: str


@dataclass(frozen=True)
class PedalPath:
    """A pedal point sequence plus per-step provenance and a replay certificate."""

    steps: tuple[PathStep, ...]
    verification_distance: Optional[float] = None

    @property
    def points(self) -> list[Point]:
        return [s.point for s in self.steps]

    def to_json_dict(self) -> dict:
        data: dict = {
            "steps": [
                {"point": [s.point.x, s.point.y], "provenance": s.provenance} for s in self.steps
            ]
        }
        if self.verification_distance is not None:
            data["verification_distance"] = self.verification_distance
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "PedalPath":
        steps = tuple(
            PathStep(Point(float(s["point"][0]), float(s["point"][1])), str(s.get("provenance", "")))
            for s in data["steps"]
        )
        return cls(steps, data.get("verification_distance"))
