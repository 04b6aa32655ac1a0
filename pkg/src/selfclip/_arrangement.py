"""Vertex snapping and segment subdivision shared by the clipping stages."""
from __future__ import annotations

import math

import numpy as np

from .geom import IntersectionKind, Point, Tolerance, segment_intersect


class VertexPool:
    """Assigns one integer id to every cluster of points closer than eps.

    The first point seen becomes the representative of its cluster.
    """

    def __init__(self, tol: Tolerance):
        self.eps = tol.eps
        self.points: list[Point] = []
        self._cells: dict[tuple[int, int], list[int]] = {}

    def _cell(self, p):
        return math.floor(p[0] / self.eps), math.floor(p[1] / self.eps)

    def find(self, p):
        cx, cy = self._cell(p)
        best = None
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for i in self._cells.get((cx + dx, cy + dy), ()):
                    d = math.dist(self.points[i], p)
                    if d <= self.eps and (best is None or d < best[0]):
                        best = (d, i)
        return None if best is None else best[1]

    def add(self, p) -> int:
        i = self.find(p)
        if i is not None:
            return i
        i = len(self.points)
        self.points.append(Point(float(p[0]), float(p[1])))
        self._cells.setdefault(self._cell(p), []).append(i)
        return i

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __len__(self):
        return len(self.points)


def candidate_pairs(segments, eps):
    """Index pairs (i, j), i < j, whose padded bounding boxes overlap."""
    if len(segments) < 2:
        return []
    arr = np.asarray([(a[0], a[1], b[0], b[1]) for a, b in segments], dtype=float)
    x0 = np.minimum(arr[:, 0], arr[:, 2]) - eps
    x1 = np.maximum(arr[:, 0], arr[:, 2]) + eps
    y0 = np.minimum(arr[:, 1], arr[:, 3]) - eps
    y1 = np.maximum(arr[:, 1], arr[:, 3]) + eps
    hit = ((x0[:, None] <= x1[None, :]) & (x0[None, :] <= x1[:, None])
           & (y0[:, None] <= y1[None, :]) & (y0[None, :] <= y1[:, None]))
    ii, jj = np.nonzero(np.triu(hit, k=1))
    return list(zip(ii.tolist(), jj.tolist()))


def subdivide(segments, pool: VertexPool, tol: Tolerance):
    """Split every segment at its intersections with all the others.

    Returns, per input segment, the list of vertex ids along it from start to
    end. Collinear overlaps split both segments at the overlap ends, so
    coincident pieces end up with identical id pairs.
    """
    cuts = [[] for _ in segments]
    for i, j in candidate_pairs(segments, tol.eps):
        a1, a2 = segments[i]
        b1, b2 = segments[j]
        r = segment_intersect(a1, a2, b1, b2, tol)
        if r.kind is IntersectionKind.NONE:
            continue
        if r.kind is IntersectionKind.COLLINEAR_OVERLAP:
            pts = r.overlap
        else:
            pts = (r.point,)
        for p in pts:
            cuts[i].append(p)
            cuts[j].append(p)
    out = []
    for (a, b), pts in zip(segments, cuts):
        out.append(_ids_along(a, b, pts, pool))
    return out


def _ids_along(a, b, pts, pool: VertexPool):
    dx, dy = b[0] - a[0], b[1] - a[1]
    L2 = dx * dx + dy * dy
    ia, ib = pool.add(a), pool.add(b)
    inner = []
    for p in pts:
        k = pool.add(p)
        if k in (ia, ib):
            continue
        t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / L2
        inner.append((t, k))
    inner.sort()
    ids = [ia]
    for _, k in inner:
        if k != ids[-1]:
            ids.append(k)
    if ib != ids[-1]:
        ids.append(ib)
    return ids
