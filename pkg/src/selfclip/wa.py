"""Weiler-Atherton intersection of two simple counter-clockwise contours."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ._arrangement import VertexPool
from .classify import representative_point
from .errors import AlternationViolation, NonTermination
from .geom import (
    Contour,
    IntersectionKind,
    Orientation,
    Point,
    Tolerance,
    orientation_of,
    point_in_contour,
    segment_intersect,
    signed_area,
)

__all__ = [
    "BoundaryKind",
    "EdgeOrigin",
    "BoundaryIntersection",
    "PieceSet",
    "find_boundary_intersections",
    "label_entry_exit",
    "wa_traverse",
    "clip_simple_pair",
]


class BoundaryKind(enum.Enum):
    CROSSING = "crossing"  # not yet labeled
    ENTERING = "entering"
    LEAVING = "leaving"
    TANGENT = "tangent"


class EdgeOrigin(enum.Enum):
    SUBJECT = "subject"
    CLIPPER = "clipper"


@dataclass
class BoundaryIntersection:
    point: Point
    subj_edge: int
    subj_t: float
    clip_edge: int
    clip_u: float
    kind: BoundaryKind = BoundaryKind.CROSSING
    visited: bool = False


@dataclass
class PieceSet:
    contours: list = field(default_factory=list)
    # one EdgeOrigin per edge of the matching contour
    origins: list = field(default_factory=list)

    def __len__(self):
        return len(self.contours)

    def __iter__(self):
        return iter(self.contours)

    def extend(self, other: "PieceSet"):
        self.contours.extend(other.contours)
        self.origins.extend(other.origins)

    def area(self) -> float:
        return sum(abs(signed_area(c)) for c in self.contours)


def _norm(edge, t, n):
    return ((edge + 1) % n, 0.0) if t >= 1.0 else (edge, t)


def _param(p, a, b):
    dx, dy = b[0] - a[0], b[1] - a[1]
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / (dx * dx + dy * dy)
    return min(1.0, max(0.0, t))


class _Rings:
    """Both boundaries as id rings with the intersection points spliced in."""

    def __init__(self, S: Contour, C: Contour, xs, tol: Tolerance):
        self.pool = pool = VertexPool(tol)
        self.s_ring = self._ring(S, [(x.subj_edge, x.subj_t, x.point) for x in xs])
        self.c_ring = self._ring(C, [(x.clip_edge, x.clip_u, x.point) for x in xs])
        self.node_of = {}
        for x in xs:
            self.node_of.setdefault(pool.add(x.point), x)
        self.s_pos = {k: i for i, k in enumerate(self.s_ring)}
        self.c_pos = {k: i for i, k in enumerate(self.c_ring)}
        self.C = C
        self.tol = tol

    def _ring(self, contour, marks):
        by_edge = {}
        for e, t, p in marks:
            by_edge.setdefault(e, []).append((t, p))
        ring = []
        for i, v in enumerate(contour.vertices):
            for k in [self.pool.add(v)] + [self.pool.add(p) for _, p in sorted(by_edge.get(i, ()))]:
                if not ring or ring[-1] != k:
                    ring.append(k)
        while len(ring) > 1 and ring[-1] == ring[0]:
            ring.pop()
        return ring

    def segment_inside(self, a, b) -> bool:
        """Whether the subject side (left) of segment a->b lies inside the clipper."""
        ca, cb = self.c_pos.get(a), self.c_pos.get(b)
        n = len(self.c_ring)
        if ca is not None and cb is not None:
            if (ca + 1) % n == cb:
                return True   # shared boundary, same direction
            if (cb + 1) % n == ca:
                return False  # shared boundary, interiors on opposite sides
        pa, pb = self.pool[a], self.pool[b]
        mid = ((pa[0] + pb[0]) / 2.0, (pa[1] + pb[1]) / 2.0)
        return bool(point_in_contour(mid, self.C, self.tol))

    def arc_status(self):
        """Inside/outside flag of the subject arc leaving each node, in subject order."""
        ring = self.s_ring
        n = len(ring)
        out = {}
        for i, k in enumerate(ring):
            if k in self.node_of:
                out[k] = self.segment_inside(k, ring[(i + 1) % n])
        return out

    def nodes_in_subject_order(self):
        return [k for k in self.s_ring if k in self.node_of]


def _raw_intersections(S: Contour, C: Contour, tol: Tolerance):
    ns, nc = len(S), len(C)
    found = []
    for i, (a1, a2) in enumerate(S.edges()):
        for j, (b1, b2) in enumerate(C.edges()):
            r = segment_intersect(a1, a2, b1, b2, tol)
            if r.kind is IntersectionKind.NONE:
                continue
            if r.kind is IntersectionKind.COLLINEAR_OVERLAP:
                for p in r.overlap:
                    found.append((p, *_norm(i, _param(p, a1, a2), ns), *_norm(j, _param(p, b1, b2), nc)))
            else:
                found.append((r.point, *_norm(i, r.t, ns), *_norm(j, r.u, nc)))
    return found


def _apply_labels(rings: _Rings, xs, tangent_only: bool):
    status = rings.arc_status()
    order = rings.nodes_in_subject_order()
    for idx, k in enumerate(order):
        before = status[order[idx - 1]]
        after = status[k]
        x = rings.node_of[k]
        if before == after:
            x.kind = BoundaryKind.TANGENT
        elif not tangent_only:
            x.kind = BoundaryKind.ENTERING if after else BoundaryKind.LEAVING


def find_boundary_intersections(S: Contour, C: Contour, tol: Tolerance) -> list[BoundaryIntersection]:
    """All contacts between the two boundaries, sorted along the subject.

    Contacts where the subject does not pass from one side of the clipper to
    the other are marked TANGENT; shared stretches of boundary count as inside.
    """
    pool = VertexPool(tol)
    for v in S:
        pool.add(v)
    for v in C:
        pool.add(v)
    xs = {}
    for p, se, st, ce, cu in _raw_intersections(S, C, tol):
        k = pool.add(p)
        if k not in xs:
            xs[k] = BoundaryIntersection(pool[k], se, st, ce, cu)
    xs = sorted(xs.values(), key=lambda x: (x.subj_edge, x.subj_t))
    if xs:
        _apply_labels(_Rings(S, C, xs, tol), xs, tangent_only=True)
    return xs


def label_entry_exit(S: Contour, C: Contour, xs: list[BoundaryIntersection], tol: Tolerance):
    """Label each non-tangent intersection ENTERING or LEAVING.

    The label follows the subject arc that starts at the intersection: if its
    midpoint is inside the clipper the subject is entering.
    """
    if not xs:
        return xs
    rings = _Rings(S, C, xs, tol)
    _apply_labels(rings, xs, tangent_only=False)
    labels = [rings.node_of[k].kind for k in rings.nodes_in_subject_order()
              if rings.node_of[k].kind is not BoundaryKind.TANGENT]
    for a, b in zip(labels, labels[1:] + labels[:1]):
        if a is b:
            raise AlternationViolation(f"consecutive {a.value} intersections along the subject")
    return xs


def wa_traverse(S: Contour, C: Contour, xs: list[BoundaryIntersection], tol: Tolerance) -> PieceSet:
    rings = _Rings(S, C, xs, tol)
    pool = rings.pool
    crossing = {k: x for k, x in rings.node_of.items() if x.kind in (BoundaryKind.ENTERING, BoundaryKind.LEAVING)}
    limit = 2 * (len(S) + len(C) + len(xs))
    pieces = PieceSet()
    for start in rings.nodes_in_subject_order():
        x0 = crossing.get(start)
        if x0 is None or x0.kind is not BoundaryKind.ENTERING or x0.visited:
            continue
        x0.visited = True
        ids, origins = [start], []
        ring, pos_map, origin = rings.s_ring, rings.s_pos, EdgeOrigin.SUBJECT
        cur, steps = start, 0
        while True:
            steps += 1
            if steps > limit:
                raise NonTermination(f"traversal exceeded {limit} steps")
            cur = ring[(pos_map[cur] + 1) % len(ring)]
            origins.append(origin)
            if cur == start:
                break
            ids.append(cur)
            x = crossing.get(cur)
            if x is None:
                continue
            if origin is EdgeOrigin.SUBJECT:
                if x.kind is not BoundaryKind.LEAVING:
                    raise AlternationViolation("subject walk met an entering intersection")
                ring, pos_map, origin = rings.c_ring, rings.c_pos, EdgeOrigin.CLIPPER
            else:
                if x.kind is not BoundaryKind.ENTERING:
                    raise AlternationViolation("clipper walk met a leaving intersection")
                ring, pos_map, origin = rings.s_ring, rings.s_pos, EdgeOrigin.SUBJECT
            x.visited = True
        piece = _make_piece(ids, origins, pool, tol)
        if piece is not None:
            pieces.contours.append(piece[0])
            pieces.origins.append(piece[1])
    return pieces


def _make_piece(ids, origins, pool, tol):
    if len(ids) < 3:
        return None
    contour = Contour(tuple(pool[k] for k in ids))
    if orientation_of(contour, tol) is not Orientation.CCW:
        return None
    return contour, tuple(origins)


def _ccw(c: Contour) -> Contour:
    return c.reversed() if signed_area(c) < 0 else c


def clip_simple_pair(S: Contour, C: Contour, tol: Tolerance) -> PieceSet:
    """Intersection of two simple contours as a set of CCW pieces."""
    S, C = _ccw(S), _ccw(C)
    xs = find_boundary_intersections(S, C, tol)
    label_entry_exit(S, C, xs, tol)
    if any(x.kind is not BoundaryKind.TANGENT for x in xs):
        return wa_traverse(S, C, xs, tol)
    # no boundary crossings: containment or disjointness
    rep = representative_point(S, [S, C], tol)
    if point_in_contour(rep, C):
        return PieceSet([S], [(EdgeOrigin.SUBJECT,) * len(S)])
    rep = representative_point(C, [S, C], tol)
    if point_in_contour(rep, S):
        return PieceSet([C], [(EdgeOrigin.CLIPPER,) * len(C)])
    return PieceSet()
