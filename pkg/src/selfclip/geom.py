"""Geometric primitives: points, contours, polygons and the predicates on them.

Coordinates are plain floats. All tolerance-sensitive predicates take a
:class:`Tolerance`, an absolute distance in world units.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .errors import PointOnBoundary

__all__ = [
    "Point",
    "FillRule",
    "Orientation",
    "Contour",
    "Polygon",
    "Tolerance",
    "IntersectionKind",
    "SegmentIntersection",
    "signed_area",
    "orientation_of",
    "winding_number",
    "point_in_polygon",
    "point_in_contour",
    "segment_intersect",
    "point_segment_distance",
    "bbox",
    "side_winding",
]


class Point(NamedTuple):
    x: float
    y: float


class FillRule(enum.Enum):
    EVEN_ODD = "evenodd"
    NON_ZERO = "nonzero"

    def is_inside(self, winding: int) -> bool:
        if self is FillRule.EVEN_ODD:
            return winding % 2 == 1
        return winding != 0


class Orientation(enum.Enum):
    CCW = "ccw"
    CW = "cw"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Contour:
    """Closed ring of vertices; the last vertex connects back to the first."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(Point(float(x), float(y)) for x, y in self.vertices)
        if len(verts) < 3:
            raise ValueError(f"a contour needs at least 3 vertices, got {len(verts)}")
        for i, v in enumerate(verts):
            if v == verts[i - 1]:
                raise ValueError(f"consecutive duplicate vertex {v}")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_coords(cls, coords: Iterable[float]) -> "Contour":
        flat = list(coords)
        return cls(tuple(zip(flat[0::2], flat[1::2])))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def edges(self) -> Iterator[tuple[Point, Point]]:
        verts = self.vertices
        for i in range(len(verts)):
            yield verts[i], verts[(i + 1) % len(verts)]

    def reversed(self) -> "Contour":
        return Contour(self.vertices[::-1])


@dataclass(frozen=True)
class Polygon:
    contours: tuple
    fill_rule: FillRule = FillRule.NON_ZERO

    def __post_init__(self):
        contours = tuple(c if isinstance(c, Contour) else Contour(c) for c in self.contours)
        object.__setattr__(self, "contours", contours)

    def is_empty(self) -> bool:
        return not self.contours

    def edges(self) -> Iterator[tuple[Point, Point]]:
        for c in self.contours:
            yield from c.edges()


def bbox(points: Iterable[Sequence[float]]) -> Optional[tuple[float, float, float, float]]:
    xs, ys = [], []
    for p in points:
        xs.append(p[0])
        ys.append(p[1])
    if not xs:
        return None
    return min(xs), min(ys), max(xs), max(ys)


def _diagonal(points) -> float:
    box = bbox(points)
    if box is None:
        return 0.0
    return math.hypot(box[2] - box[0], box[3] - box[1])


@dataclass(frozen=True)
class Tolerance:
    """Absolute snapping/equality distance in world units."""

    eps: float = 1e-9

    RELATIVE = 1e-9
    FLOOR = 1e-12

    def __post_init__(self):
        if not (self.eps > 0 and math.isfinite(self.eps)):
            raise ValueError(f"eps must be positive and finite, got {self.eps!r}")

    @classmethod
    def for_points(cls, points: Iterable[Sequence[float]]) -> "Tolerance":
        return cls(max(cls.RELATIVE * _diagonal(points), cls.FLOOR))

    @classmethod
    def for_polygons(cls, *polygons: Polygon) -> "Tolerance":
        return cls.for_points(v for poly in polygons for c in poly.contours for v in c)

    @classmethod
    def for_contours(cls, contours: Iterable[Contour]) -> "Tolerance":
        return cls.for_points(v for c in contours for v in c)


def signed_area(c: Contour | Sequence[Sequence[float]]) -> float:
    """Shoelace area, positive for counter-clockwise rings."""
    verts = c.vertices if isinstance(c, Contour) else c
    n = len(verts)
    s = 0.0
    for i in range(n):
        x1, y1 = verts[i]
        x2, y2 = verts[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s / 2.0


def orientation_of(c: Contour, tol: Optional[Tolerance] = None) -> Orientation:
    # the area threshold is eps times the contour's own diagonal
    tol = tol or Tolerance.for_points(c.vertices)
    scale = tol.eps * max(_diagonal(c.vertices), 1.0)
    area = signed_area(c)
    if area > scale:
        return Orientation.CCW
    if area < -scale:
        return Orientation.CW
    return Orientation.DEGENERATE


def point_segment_distance(p, a, b) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return math.hypot(p[0] - a[0], p[1] - a[1])
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / L2
    t = min(1.0, max(0.0, t))
    return math.hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy))


def _ray_crossing(px, py, a, b) -> int:
    """Signed crossing of the ray from (px, py) toward +x with edge a->b.

    Half-open in y: an endpoint on the ray counts only when the other endpoint
    is strictly above it.
    """
    ay, by = a[1], b[1]
    if ay <= py < by:
        # upward
        if (b[0] - a[0]) * (py - ay) - (px - a[0]) * (by - ay) > 0:
            return 1
    elif by <= py < ay:
        if (b[0] - a[0]) * (py - ay) - (px - a[0]) * (by - ay) < 0:
            return -1
    return 0


def _check_off_boundary(p, contours, tol: Tolerance):
    for c in contours:
        for a, b in c.edges():
            if point_segment_distance(p, a, b) <= tol.eps:
                raise PointOnBoundary(f"point ({p[0]}, {p[1]}) lies on the boundary")


def winding_number(p, contours: Sequence[Contour] | Contour, tol: Optional[Tolerance] = None) -> int:
    """Winding number of the contours about ``p`` by signed axis crossings."""
    if isinstance(contours, Contour):
        contours = [contours]
    tol = tol or Tolerance.for_contours(contours)
    _check_off_boundary(p, contours, tol)
    px, py = p
    w = 0
    for c in contours:
        for a, b in c.edges():
            w += _ray_crossing(px, py, a, b)
    return w


def point_in_polygon(p, poly: Polygon, tol: Optional[Tolerance] = None) -> bool:
    return poly.fill_rule.is_inside(winding_number(p, poly.contours, tol))


def point_in_contour(p, c: Contour, tol: Optional[Tolerance] = None) -> Optional[bool]:
    """Even-odd membership against one ring; ``None`` when ``p`` is on it."""
    eps = tol.eps if tol is not None else 0.0
    px, py = p
    inside = False
    for a, b in c.edges():
        if eps and point_segment_distance(p, a, b) <= eps:
            return None
        if _ray_crossing(px, py, a, b):
            inside = not inside
    return inside


class IntersectionKind(enum.Enum):
    NONE = "none"
    CROSSING = "crossing"
    TOUCH = "touch"
    COLLINEAR_OVERLAP = "collinear_overlap"


@dataclass(frozen=True)
class SegmentIntersection:
    kind: IntersectionKind
    point: Optional[Point] = None
    t: Optional[float] = None
    u: Optional[float] = None
    overlap: Optional[tuple[Point, Point]] = None

    def swapped(self) -> "SegmentIntersection":
        return SegmentIntersection(self.kind, self.point, self.u, self.t, self.overlap)


_NO_INTERSECTION = SegmentIntersection(IntersectionKind.NONE)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _param(p, a, b) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    return ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / (dx * dx + dy * dy)


def _line_distance(p, a, b) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    return abs(_cross(dx, dy, p[0] - a[0], p[1] - a[1])) / math.hypot(dx, dy)


def _snap_param(t: float, length: float, eps: float) -> float:
    if abs(t) * length <= eps:
        return 0.0
    if abs(1.0 - t) * length <= eps:
        return 1.0
    return min(1.0, max(0.0, t))


def _touch(p, a1, a2, b1, b2, eps) -> SegmentIntersection:
    la = math.dist(a1, a2)
    lb = math.dist(b1, b2)
    t = _snap_param(_param(p, a1, a2), la, eps)
    u = _snap_param(_param(p, b1, b2), lb, eps)
    return SegmentIntersection(IntersectionKind.TOUCH, Point(*p), t, u)


def _collinear(a1, a2, b1, b2, eps) -> SegmentIntersection:
    la = math.dist(a1, a2)
    tb1, tb2 = _param(b1, a1, a2), _param(b2, a1, a2)
    lo = max(0.0, min(tb1, tb2))
    hi = min(1.0, max(tb1, tb2))
    if (hi - lo) * la < -eps:
        return _NO_INTERSECTION

    def at(t):
        # overlap ends coincide with input endpoints up to eps; use those exactly
        q = (a1[0] + t * (a2[0] - a1[0]), a1[1] + t * (a2[1] - a1[1]))
        best = min((tuple(a1), tuple(a2), tuple(b1), tuple(b2)), key=lambda e: (math.dist(e, q), e))
        return Point(*best) if math.dist(best, q) <= eps else Point(*q)

    p, q = sorted((at(lo), at(hi)))
    if math.dist(p, q) <= eps:
        return _touch(p, a1, a2, b1, b2, eps)
    t = _snap_param(_param(p, a1, a2), la, eps)
    u = _snap_param(_param(p, b1, b2), math.dist(b1, b2), eps)
    return SegmentIntersection(IntersectionKind.COLLINEAR_OVERLAP, p, t, u, (p, q))


def segment_intersect(a1, a2, b1, b2, tol: Tolerance) -> SegmentIntersection:
    """Classify the intersection of segments a1-a2 and b1-b2.

    Points within ``tol.eps`` of an endpoint snap to that endpoint, which
    makes the result a TOUCH. Swapping the segments swaps ``t`` and ``u``
    and leaves ``kind`` and ``point`` unchanged.
    """
    eps = tol.eps
    if (max(a1[0], a2[0]) + eps < min(b1[0], b2[0]) or max(b1[0], b2[0]) + eps < min(a1[0], a2[0])
            or max(a1[1], a2[1]) + eps < min(b1[1], b2[1]) or max(b1[1], b2[1]) + eps < min(a1[1], a2[1])):
        return _NO_INTERSECTION

    if (_line_distance(b1, a1, a2) <= eps and _line_distance(b2, a1, a2) <= eps
            and _line_distance(a1, b1, b2) <= eps and _line_distance(a2, b1, b2) <= eps):
        return _collinear(a1, a2, b1, b2, eps)

    # endpoint contacts snap first
    near = []
    for e, (s1, s2) in ((a1, (b1, b2)), (a2, (b1, b2)), (b1, (a1, a2)), (b2, (a1, a2))):
        d = point_segment_distance(e, s1, s2)
        if d <= eps:
            near.append((d, tuple(e)))
    if near:
        _, p = min(near)
        # a shared endpoint wins over an endpoint-on-interior contact
        for e in (a1, a2):
            for f in (b1, b2):
                if math.dist(e, f) <= eps:
                    p = min(tuple(e), tuple(f))
        return _touch(p, a1, a2, b1, b2, eps)

    d1x, d1y = a2[0] - a1[0], a2[1] - a1[1]
    d2x, d2y = b2[0] - b1[0], b2[1] - b1[1]
    denom = _cross(d1x, d1y, d2x, d2y)
    if denom == 0.0:
        return _NO_INTERSECTION
    wx, wy = b1[0] - a1[0], b1[1] - a1[1]
    t = _cross(wx, wy, d2x, d2y) / denom
    u = _cross(wx, wy, d1x, d1y) / denom
    if not (0.0 < t < 1.0 and 0.0 < u < 1.0):
        return _NO_INTERSECTION
    x = ((a1[0] + t * d1x) + (b1[0] + u * d2x)) / 2.0
    y = ((a1[1] + t * d1y) + (b1[1] + u * d2y)) / 2.0
    return SegmentIntersection(IntersectionKind.CROSSING, Point(x, y), t, u)


def side_winding(m, direction, edges, tol: Tolerance) -> tuple[int, int]:
    """Winding numbers just left and just right of ``m``.

    ``m`` is a point on a segment running along ``direction``; ``edges`` are
    the directed edges of closed rings. Edges through ``m`` collinear with the
    segment shift the left value by +1 (same direction) or -1 (opposite).
    Every other edge must stay farther than eps from ``m``.
    """
    dx, dy = direction
    L = math.hypot(dx, dy)
    dx, dy = dx / L, dy / L
    # ray toward the right-hand normal; (normal, direction) is a right-handed frame
    nx, ny = dy, -dx
    eps = tol.eps
    right = 0
    shift = 0
    for a, b in edges:
        au = (a[0] - m[0]) * nx + (a[1] - m[1]) * ny
        av = (a[0] - m[0]) * dx + (a[1] - m[1]) * dy
        bu = (b[0] - m[0]) * nx + (b[1] - m[1]) * ny
        bv = (b[0] - m[0]) * dx + (b[1] - m[1]) * dy
        if abs(au) <= eps and abs(bu) <= eps and min(av, bv) < 0 < max(av, bv):
            shift += 1 if bv > av else -1
            continue
        if av <= 0 < bv:
            if (bu - au) * (0 - av) - (0 - au) * (bv - av) > 0:
                right += 1
        elif bv <= 0 < av:
            if (bu - au) * (0 - av) - (0 - au) * (bv - av) < 0:
                right -= 1
    return right + shift, right
