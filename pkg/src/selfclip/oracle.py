"""Brute-force checks that share no code path with the clipping kernel.

Winding numbers here come from summing the angles subtended by each edge,
where the kernel counts axis crossings, so a bug in one is unlikely to be
mirrored in the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import GenerationFailure, PointOnBoundary
from .geom import (
    Contour,
    FillRule,
    IntersectionKind,
    Point,
    Polygon,
    Tolerance,
    bbox,
    point_segment_distance,
    segment_intersect,
    signed_area,
)

__all__ = [
    "OracleReport",
    "winding_oracle",
    "compare_regions",
    "random_fixture",
    "random_convex",
    "grid_membership",
]

# fixture coordinates are multiples of 10**-DECIMALS
DECIMALS = 6


def _as_contours(contours):
    if isinstance(contours, Contour):
        return [contours]
    if isinstance(contours, Polygon):
        return list(contours.contours)
    return list(contours)


def winding_oracle(p, contours, tol: Optional[Tolerance] = None) -> int:
    contours = _as_contours(contours)
    tol = tol or Tolerance.for_contours(contours)
    total = 0.0
    for c in contours:
        for a, b in c.edges():
            if point_segment_distance(p, a, b) <= tol.eps:
                raise PointOnBoundary(f"({p[0]}, {p[1]}) lies on an edge")
            ax, ay = a[0] - p[0], a[1] - p[1]
            bx, by = b[0] - p[0], b[1] - p[1]
            total += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    return round(total / (2 * math.pi))


def _edge_array(poly: Polygon):
    segs = [(a[0], a[1], b[0], b[1]) for a, b in poly.edges()]
    return np.asarray(segs, dtype=float).reshape(-1, 4)


def _angle_winding(px, py, edges):
    w = np.zeros_like(px)
    for ax, ay, bx, by in edges:
        ux, uy = ax - px, ay - py
        vx, vy = bx - px, by - py
        w += np.arctan2(ux * vy - uy * vx, ux * vx + uy * vy)
    return np.rint(w / (2 * np.pi)).astype(np.int64)


def _min_distance(px, py, edges):
    d = np.full_like(px, np.inf)
    for ax, ay, bx, by in edges:
        dx, dy = bx - ax, by - ay
        L2 = dx * dx + dy * dy
        t = np.clip(((px - ax) * dx + (py - ay) * dy) / L2, 0.0, 1.0) if L2 else 0.0
        d = np.minimum(d, np.hypot(px - (ax + t * dx), py - (ay + t * dy)))
    return d


def grid_membership(poly: Polygon, px, py):
    """Fill-rule membership of every sample point, from angle-sum winding."""
    if poly.is_empty():
        return np.zeros(px.shape, dtype=bool)
    w = _angle_winding(px, py, _edge_array(poly))
    if poly.fill_rule is FillRule.EVEN_ODD:
        return (w % 2) == 1
    return w != 0


@dataclass
class OracleReport:
    grid_n: int
    sampled: int
    skipped_boundary_band: int
    mismatches: int
    mismatch_fraction: float
    area_grid: float
    area_shoelace: float


def compare_regions(
    subject: Polygon,
    clipper: Polygon,
    result: Polygon,
    grid_n: int = 512,
    band: Optional[float] = None,
) -> OracleReport:
    """Sample cell centres of a grid over all three polygons and compare
    membership in ``result`` (non-zero) with membership in both inputs."""
    if grid_n < 16:
        raise ValueError("grid_n must be at least 16")
    pts = [v for poly in (subject, clipper, result) for c in poly.contours for v in c]
    if not pts:
        return OracleReport(grid_n, grid_n * grid_n, 0, 0, 0.0, 0.0, 0.0)
    tol = Tolerance.for_points(pts)
    if band is None:
        band = 10 * tol.eps
    x0, y0, x1, y1 = bbox(pts)
    w, h = (x1 - x0) or 1.0, (y1 - y0) or 1.0
    xs = x0 + (np.arange(grid_n) + 0.5) * (w / grid_n)
    ys = y0 + (np.arange(grid_n) + 0.5) * (h / grid_n)
    px, py = np.meshgrid(xs, ys)

    edges = np.concatenate([_edge_array(p) for p in (subject, clipper, result)])
    keep = _min_distance(px, py, edges) > band
    px, py = px[keep], py[keep]

    expected = grid_membership(subject, px, py) & grid_membership(clipper, px, py)
    got = grid_membership(Polygon(result.contours, FillRule.NON_ZERO), px, py)
    sampled = int(px.size)
    mismatches = int(np.count_nonzero(expected != got))
    return OracleReport(
        grid_n=grid_n,
        sampled=sampled,
        skipped_boundary_band=grid_n * grid_n - sampled,
        mismatches=mismatches,
        mismatch_fraction=mismatches / sampled if sampled else 0.0,
        area_grid=float(np.count_nonzero(expected)) * (w / grid_n) * (h / grid_n),
        area_shoelace=sum(signed_area(c) for c in result.contours),
    )


def _quantize(values):
    return [round(float(v), DECIMALS) for v in values]


def _has_crossing(c: Contour, tol: Tolerance) -> bool:
    n = len(c)
    v = c.vertices
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if segment_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], tol).kind is not IntersectionKind.NONE:
                return True
    return False


def _well_spaced(points, tol: Tolerance) -> bool:
    """No vertex sits within a few eps of a non-incident edge; keeps draws
    away from near-degenerate contacts that the fixtures are not meant to probe."""
    n = len(points)
    gap = 1e3 * tol.eps
    for i, p in enumerate(points):
        for j in range(n):
            if j == i or (j + 1) % n == i:
                continue
            if point_segment_distance(p, points[j], points[(j + 1) % n]) <= gap:
                return False
    return True


def random_fixture(
    seed: int,
    n_vertices: int,
    self_intersecting: bool,
    fill_rule: FillRule = FillRule.NON_ZERO,
    box: float = 100.0,
) -> Polygon:
    """Deterministic random single-contour polygon with coordinates on a 1e-6 lattice."""
    if not 4 <= n_vertices <= 64:
        raise ValueError("n_vertices must be in [4, 64]")
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        if self_intersecting:
            xs = _quantize(rng.uniform(0, box, n_vertices))
            ys = _quantize(rng.uniform(0, box, n_vertices))
        else:
            angles = np.sort(rng.uniform(0, 2 * math.pi, n_vertices))
            radii = rng.uniform(0.3, 1.0, n_vertices) * box / 2
            xs = _quantize(box / 2 + radii * np.cos(angles))
            ys = _quantize(box / 2 + radii * np.sin(angles))
        pts = [Point(x, y) for x, y in zip(xs, ys)]
        if len(set(pts)) < n_vertices:
            continue
        contour = Contour(tuple(pts))
        tol = Tolerance.for_contours([contour])
        if abs(signed_area(contour)) <= tol.eps or not _well_spaced(pts, tol):
            continue
        if _has_crossing(contour, tol) != self_intersecting:
            continue
        return Polygon((contour,), fill_rule)
    raise GenerationFailure(f"no suitable contour for seed {seed} after 1000 draws")


def _hull(points):
    pts = sorted(set(points))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def random_convex(seed: int, n_points: int = 8, box: float = 100.0, fill_rule: FillRule = FillRule.NON_ZERO) -> Polygon:
    """Convex hull of random lattice points; always counter-clockwise."""
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        xs = _quantize(rng.uniform(0, box, n_points))
        ys = _quantize(rng.uniform(0, box, n_points))
        hull = _hull([Point(x, y) for x, y in zip(xs, ys)])
        if len(hull) >= 3 and abs(signed_area(hull)) > 1e-3 * box * box:
            return Polygon((Contour(tuple(hull)),), fill_rule)
    raise GenerationFailure(f"no convex polygon for seed {seed}")
