"""Split self-intersecting contours into simple ones.

A contour is first planarized (every self-crossing becomes an explicit,
repeated vertex) and then cut into loops with a stack: vertices are pushed in
traversal order and when a vertex comes around again everything above its
earlier occurrence is popped off as one loop.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._arrangement import VertexPool
from .errors import CollinearSelfOverlap, CrossContourCrossing
from .geom import (
    Contour,
    IntersectionKind,
    Orientation,
    Polygon,
    Tolerance,
    orientation_of,
    segment_intersect,
)

__all__ = [
    "PlanarContour",
    "SimpleContourSet",
    "planarize",
    "split_contour",
    "decompose_polygon",
    "stack_split",
    "contour_is_simple",
]


@dataclass(frozen=True)
class PlanarContour:
    """Vertex ring in which each self-crossing appears as a repeated vertex."""

    vertices: tuple

    def edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


@dataclass
class SimpleContourSet:
    contours: list = field(default_factory=list)
    # index of the input contour each output contour came from
    sources: list = field(default_factory=list)
    dropped_slivers: int = 0
    resplits: int = 0

    def __len__(self):
        return len(self.contours)

    def __iter__(self):
        return iter(self.contours)

    def extend(self, other: "SimpleContourSet", source: int):
        self.contours.extend(other.contours)
        self.sources.extend([source] * len(other.contours))
        self.dropped_slivers += other.dropped_slivers
        self.resplits += other.resplits


def _adjacent(i, j, n):
    return abs(i - j) == 1 or abs(i - j) == n - 1


def planarize(c: Contour, tol: Tolerance) -> PlanarContour:
    """Insert every crossing and touching point of ``c`` as a vertex.

    Edges that overlap collinearly in the same direction (a ring wound more
    than once) are split at the overlap ends so the shared stretches become
    identical edges. Overlaps running in opposite directions are rejected.
    """
    pool = VertexPool(tol)
    verts = c.vertices
    n = len(verts)
    ids = [pool.add(v) for v in verts]
    inserts = [[] for _ in range(n)]

    for i in range(n):
        a1, a2 = verts[i], verts[(i + 1) % n]
        for j in range(i + 1, n):
            b1, b2 = verts[j], verts[(j + 1) % n]
            r = segment_intersect(a1, a2, b1, b2, tol)
            if r.kind is IntersectionKind.NONE:
                continue
            if r.kind is IntersectionKind.COLLINEAR_OVERLAP:
                same_dir = ((a2[0] - a1[0]) * (b2[0] - b1[0]) + (a2[1] - a1[1]) * (b2[1] - b1[1])) > 0
                if not same_dir:
                    raise CollinearSelfOverlap(
                        f"edges {i} and {j} retrace each other between "
                        f"({r.overlap[0].x}, {r.overlap[0].y}) and ({r.overlap[1].x}, {r.overlap[1].y})"
                    )
                if _adjacent(i, j, n):
                    continue
                for p in r.overlap:
                    inserts[i].append(p)
                    inserts[j].append(p)
                continue
            if _adjacent(i, j, n):
                continue
            inserts[i].append(r.point)
            inserts[j].append(r.point)

    seq = []
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        dx, dy = b[0] - a[0], b[1] - a[1]
        L2 = dx * dx + dy * dy
        inner = []
        for p in inserts[i]:
            k = pool.add(p)
            if k in (ids[i], ids[(i + 1) % n]):
                continue
            inner.append((((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / L2, k))
        inner.sort()
        for k in [ids[i]] + [k for _, k in inner]:
            if not seq or seq[-1] != k:
                seq.append(k)
    while len(seq) > 1 and seq[-1] == seq[0]:
        seq.pop()
    return PlanarContour(tuple(pool[k] for k in seq))


def stack_split(ids):
    """The stack procedure on a sequence of vertex ids.

    Returns the loops in emission order; each starts with the matched vertex.
    The last loop is whatever is left on the stack.
    """
    stack = []
    where = {}
    loops = []
    for v in ids:
        if v in where:
            i = where[v]
            loops.append(stack[i:])
            for w in stack[i + 1:]:
                del where[w]
            del stack[i + 1:]
        else:
            where[v] = len(stack)
            stack.append(v)
    if stack:
        loops.append(stack)
    return loops


def _angle(frm, to):
    return math.atan2(to[1] - frm[1], to[0] - frm[0])


def _ccw_between(start, end, x):
    """True when direction ``x`` lies strictly inside the ccw sweep start -> end."""
    two_pi = 2 * math.pi
    span = (end - start) % two_pi
    off = (x - start) % two_pi
    return 0 < off < span


def _loops_cross(loops, pts):
    """Whether two loops cross each other at a shared vertex."""
    passes = {}
    for li, loop in enumerate(loops):
        m = len(loop)
        for k, v in enumerate(loop):
            prev_pt, next_pt = pts[loop[k - 1]], pts[loop[(k + 1) % m]]
            passes.setdefault(v, []).append((li, _angle(pts[v], prev_pt), _angle(pts[v], next_pt)))
    for v, ps in passes.items():
        for x in range(len(ps)):
            for y in range(x + 1, len(ps)):
                la, a_in, a_out = ps[x]
                lb, b_in, b_out = ps[y]
                if la == lb:
                    continue
                if _ccw_between(a_in, a_out, b_in) != _ccw_between(a_in, a_out, b_out):
                    # equal angles mean shared edges, which is a touch
                    if b_in in (a_in, a_out) or b_out in (a_in, a_out):
                        continue
                    return True
    return False


def _pairing_split(ids, pts):
    """Re-split by pairing edges at every vertex so that no two loops cross.

    Around each vertex the incoming and outgoing edges are sorted by angle and
    matched like parentheses, which is the only non-crossing way to join them
    at a transversal self-crossing.
    """
    n = len(ids)
    edges = [(ids[k], ids[(k + 1) % n]) for k in range(n)]
    around = {}
    for k, (u, v) in enumerate(edges):
        around.setdefault(u, []).append((_angle(pts[u], pts[v]), 1, k))   # outgoing
        around.setdefault(v, []).append((_angle(pts[v], pts[u]), 0, k))   # incoming
    nxt = {}
    for v, items in around.items():
        items.sort()
        depth, low, start = 0, 0, 0
        for pos, (_, is_out, _) in enumerate(items):
            depth += -1 if is_out else 1
            if depth < low:
                low, start = depth, pos + 1
        open_ = []
        m = len(items)
        for step in range(m):
            _, is_out, k = items[(start + step) % m]
            if is_out:
                nxt[open_.pop()] = k
            else:
                open_.append(k)
    loops = []
    used = [False] * n
    for k0 in range(n):
        if used[k0]:
            continue
        loop, k = [], k0
        while not used[k]:
            used[k] = True
            loop.append(edges[k][0])
            k = nxt[k]
        loops.append(loop)
    out = []
    for loop in loops:
        # a loop that still revisits a vertex only touches itself there
        out.extend(stack_split(loop) if len(set(loop)) < len(loop) else [loop])
    return out


def split_contour(pc: PlanarContour, tol: Tolerance | None = None) -> SimpleContourSet:
    """Cut a planarized ring into simple loops with the stack procedure.

    Loops with fewer than three vertices or zero area are dropped and counted.
    If two emitted loops cross at a shared vertex, which the plain stack can
    produce when crossings interleave, the ring is re-split so the loops only
    touch.
    """
    tol = tol or Tolerance.for_points(pc.vertices)
    pool = VertexPool(tol)
    ids = [pool.add(v) for v in pc.vertices]
    loops = stack_split(ids)
    result = SimpleContourSet()
    if len(loops) > 1 and _loops_cross(loops, pool.points):
        loops = _pairing_split(ids, pool.points)
        result.resplits += 1
    for loop in loops:
        if len(loop) < 3:
            result.dropped_slivers += 1
            continue
        contour = Contour(tuple(pool[k] for k in loop))
        if orientation_of(contour, tol) is Orientation.DEGENERATE:
            result.dropped_slivers += 1
            continue
        result.contours.append(contour)
        result.sources.append(0)
    return result


def _check_cross_contour(poly: Polygon, tol: Tolerance):
    contours = poly.contours
    for i in range(len(contours)):
        for j in range(i + 1, len(contours)):
            for a1, a2 in contours[i].edges():
                for b1, b2 in contours[j].edges():
                    r = segment_intersect(a1, a2, b1, b2, tol)
                    if r.kind is IntersectionKind.CROSSING:
                        raise CrossContourCrossing(
                            f"contours {i} and {j} cross at ({r.point.x}, {r.point.y})"
                        )


def decompose_polygon(poly: Polygon, tol: Tolerance) -> SimpleContourSet:
    _check_cross_contour(poly, tol)
    out = SimpleContourSet()
    for i, c in enumerate(poly.contours):
        out.extend(split_contour(planarize(c, tol), tol), source=i)
    return out


def contour_is_simple(c: Contour, tol: Tolerance) -> bool:
    """Brute-force check: non-adjacent edges never meet, adjacent ones only at their shared vertex."""
    verts = c.vertices
    n = len(verts)
    if len(set(verts)) < n:
        return False
    for i in range(n):
        a1, a2 = verts[i], verts[(i + 1) % n]
        for j in range(i + 1, n):
            b1, b2 = verts[j], verts[(j + 1) % n]
            r = segment_intersect(a1, a2, b1, b2, tol)
            if r.kind is IntersectionKind.NONE:
                continue
            if _adjacent(i, j, n) and r.kind is IntersectionKind.TOUCH:
                continue
            return False
    return True

