"""Clipping of possibly self-intersecting polygons.

Both polygons are decomposed into simple contours and classified into holes
and non-holes. Every non-hole of the subject is clipped against every non-hole
of the clipper; piece edges lying inside holes are then deleted and the hole
boundaries that run through the pieces are added back before the surviving
edges are stitched into closed contours.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from ._arrangement import VertexPool, subdivide
from .classify import ClassifiedContour, FilledRegion, classify, hole_region_contains
from .decompose import decompose_polygon
from .geom import Contour, FillRule, Point, Polygon, Tolerance, point_in_contour, signed_area
from .wa import PieceSet, clip_simple_pair

__all__ = [
    "Edge",
    "EdgeSet",
    "ClipResult",
    "clip_polygons",
    "eliminate_hole_edges",
    "reassemble",
]

HOLE = "hole"


class Edge(NamedTuple):
    a: Point
    b: Point
    origin: str  # "subject", "clipper" or "hole"


@dataclass
class EdgeSet:
    edges: list = field(default_factory=list)
    deleted: int = 0


@dataclass
class ClipResult:
    polygon: Polygon
    dropped_edges: int = 0
    unclosed_chains: int = 0
    diagnostics: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.unclosed_chains == 0


def _piece_edges(pieces: PieceSet):
    for contour, origins in zip(pieces.contours, pieces.origins):
        for (a, b), origin in zip(contour.edges(), origins):
            yield Edge(a, b, origin.value)


def _mid(a, b):
    return Point((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)


def eliminate_hole_edges(
    pieces: PieceSet,
    holes: Sequence[ClassifiedContour],
    tol: Tolerance,
    nonholes: Sequence[ClassifiedContour] = (),
) -> EdgeSet:
    """Drop every piece edge whose midpoint falls inside a hole.

    Piece edges are first cut where they cross hole boundaries so that each
    remaining sub-edge is entirely inside or outside a given hole. A point
    inside a non-hole that is itself nested in the hole (same input polygon)
    does not count as inside the hole.
    """
    edges = list(_piece_edges(pieces))
    if not holes:
        return EdgeSet(edges)
    pool = VertexPool(tol)
    hole_segs = [e for h in holes for e in h.contour.edges()]
    split = subdivide([(e.a, e.b) for e in edges] + hole_segs, pool, tol)
    out = EdgeSet()
    for e, ids in zip(edges, split):
        for u, v in zip(ids, ids[1:]):
            a, b = pool[u], pool[v]
            m = _mid(a, b)
            if any(hole_region_contains(m, h, nonholes, tol) for h in holes):
                out.deleted += 1
            else:
                out.edges.append(Edge(a, b, e.origin))
    return out


def _turn(incoming, outgoing):
    """Clockwise sweep from the reversed incoming direction to the outgoing one."""
    back = math.atan2(-incoming[1], -incoming[0])
    ang = math.atan2(outgoing[1], outgoing[0])
    sweep = (back - ang) % (2 * math.pi)
    return sweep if sweep > 0 else 2 * math.pi


def _stitch(directed, pool):
    """Chain directed id pairs into closed loops, turning as far left as possible
    at shared vertices so loops touch instead of crossing."""
    order = sorted(range(len(directed)), key=lambda k: (pool[directed[k][0]], pool[directed[k][1]]))
    out_of = {}
    for k in order:
        out_of.setdefault(directed[k][0], []).append(k)
    used = [False] * len(directed)
    loops, unclosed = [], 0

    def vec(k):
        p, q = pool[directed[k][0]], pool[directed[k][1]]
        return q[0] - p[0], q[1] - p[1]

    for k0 in order:
        if used[k0]:
            continue
        start = directed[k0][0]
        loop, k = [start], k0
        used[k0] = True
        while True:
            v = directed[k][1]
            cands = [j for j in out_of.get(v, ()) if not used[j]]
            if v == start:
                cands.append(k0)
            if not cands:
                unclosed += 1
                break
            inc = vec(k)
            j = min(cands, key=lambda j: (_turn(inc, vec(j)), j))
            if j == k0:
                loops.append(loop)
                break
            used[j] = True
            loop.append(v)
            k = j
    return loops, unclosed


def _drop_collinear(points, eps):
    pts = list(points)
    changed = True
    while changed and len(pts) > 3:
        changed = False
        for i in range(len(pts)):
            p, v, q = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            dx, dy = q[0] - p[0], q[1] - p[1]
            L = math.hypot(dx, dy)
            if L == 0:
                continue
            off = abs(dx * (v[1] - p[1]) - dy * (v[0] - p[0])) / L
            along = ((v[0] - p[0]) * dx + (v[1] - p[1]) * dy) / (L * L)
            if off <= eps and 0 < along < 1:
                del pts[i]
                changed = True
                break
    return pts


def _canonical(points):
    i = min(range(len(points)), key=lambda k: points[k])
    return points[i:] + points[:i]


def reassemble(
    edges: EdgeSet,
    holes: Sequence[ClassifiedContour],
    pieces: PieceSet,
    tol: Tolerance,
    regions: Optional[tuple[FilledRegion, FilledRegion]] = None,
) -> ClipResult:
    """Close the surviving edges into a polygon.

    Hole boundary stretches lying inside a piece are added with the hole's
    clockwise orientation. Coincident edges are then merged: without
    ``regions`` opposite duplicates cancel (the seams between pieces); with
    ``regions`` each stretch is kept only if the result is filled on exactly
    one side of it, oriented with the filled side on the left.
    """
    pool = VertexPool(tol)
    cand = list(edges.edges)
    hole_segs = [(a, b) for h in holes for a, b in h.contour.edges()]
    region_segs = []
    if regions is not None:
        region_segs = [e for r in regions for es in r._edges for e in es]
    segs = [(e.a, e.b) for e in cand] + hole_segs + region_segs
    split = subdivide(segs, pool, tol)

    directed = []
    for e, ids in zip(cand, split):
        directed.extend((u, v, e.origin) for u, v in zip(ids, ids[1:]))
    for ids in split[len(cand):len(cand) + len(hole_segs)]:
        for u, v in zip(ids, ids[1:]):
            m = _mid(pool[u], pool[v])
            if any(point_in_contour(m, p, tol) is True for p in pieces.contours):
                directed.append((u, v, HOLE))

    groups = {}
    for u, v, origin in directed:
        if u == v:
            continue
        groups.setdefault((min(u, v), max(u, v)), []).append((u, v))

    kept, dropped = [], edges.deleted
    for (u, v), members in sorted(groups.items()):
        if regions is not None:
            a, b = pool[u], pool[v]
            m, d = _mid(a, b), (b[0] - a[0], b[1] - a[1])
            (ls, rs), (lc, rc) = regions[0].sides(m, d), regions[1].sides(m, d)
            left, right = ls and lc, rs and rc
            if left != right:
                kept.append((u, v) if left else (v, u))
                dropped += len(members) - 1
            else:
                dropped += len(members)
        else:
            net = sum(1 if e == (u, v) else -1 for e in members)
            if net:
                kept.append((u, v) if net > 0 else (v, u))
            dropped += len(members) - (1 if net else 0)

    loops, unclosed = _stitch(kept, pool)
    contours, diagnostics = [], []
    for loop in loops:
        pts = _drop_collinear([pool[k] for k in loop], tol.eps)
        if len(pts) < 3 or abs(signed_area(pts)) <= tol.eps * tol.eps:
            diagnostics.append(f"discarded degenerate loop of {len(loop)} vertices")
            continue
        contours.append(Contour(tuple(_canonical(pts))))
    contours.sort(key=lambda c: (c.vertices[0], -signed_area(c)))
    if unclosed:
        diagnostics.append(f"{unclosed} edge chain(s) could not be closed")
    return ClipResult(Polygon(tuple(contours), FillRule.NON_ZERO), dropped, unclosed, diagnostics)


def clip_polygons(subject: Polygon, clipper: Polygon, tol: Optional[Tolerance] = None) -> ClipResult:
    """Intersection of two polygons under their own fill rules."""
    tol = tol or Tolerance.for_polygons(subject, clipper)
    if subject.is_empty() or clipper.is_empty():
        return ClipResult(Polygon((), FillRule.NON_ZERO))

    diagnostics = []
    classified = []
    for group, poly in enumerate((subject, clipper)):
        parts = decompose_polygon(poly, tol)
        if parts.dropped_slivers:
            diagnostics.append(f"{parts.dropped_slivers} zero-area sliver(s) dropped from input {group}")
        if parts.resplits:
            diagnostics.append(f"input {group}: interleaved crossings re-split")
        classified.append(classify(parts.contours, poly, tol, group=group))
    subj_cc, clip_cc = classified

    pieces = PieceSet()
    for s in subj_cc:
        if s.is_hole:
            continue
        for c in clip_cc:
            if not c.is_hole:
                pieces.extend(clip_simple_pair(s.contour, c.contour, tol))

    holes = [cc for cc in subj_cc + clip_cc if cc.is_hole]
    nonholes = [cc for cc in subj_cc + clip_cc if not cc.is_hole]
    kept = eliminate_hole_edges(pieces, holes, tol, nonholes)
    regions = (FilledRegion(subj_cc, tol), FilledRegion(clip_cc, tol))
    result = reassemble(kept, holes, pieces, tol, regions)
    result.diagnostics[:0] = diagnostics
    return result
