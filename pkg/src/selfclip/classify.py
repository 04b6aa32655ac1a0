"""Winding-based hole classification and orientation normalization."""
from __future__ import annotations

import statistics
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .errors import NoInteriorPoint
from .geom import (
    Contour,
    Point,
    Polygon,
    Tolerance,
    point_in_contour,
    point_segment_distance,
    side_winding,
    signed_area,
    winding_number,
)

__all__ = [
    "ClassifiedContour",
    "FilledRegion",
    "representative_point",
    "classify",
    "canonical_orientation",
    "classified_contains",
    "hole_region_contains",
]


@dataclass(frozen=True)
class ClassifiedContour:
    contour: Contour
    winding: int
    is_hole: bool
    rep_point: Point
    # which input polygon the contour came from; nesting is resolved within a group
    group: int = 0

    @property
    def area(self) -> float:
        return abs(signed_area(self.contour))


def _area_slack(tol: Tolerance, c: Contour) -> float:
    xs = [v.x for v in c]
    ys = [v.y for v in c]
    return tol.eps * max(max(xs) - min(xs) + max(ys) - min(ys), 1.0)


def _scan_lines(ordinates):
    ys = sorted(set(ordinates))
    mids = [(y0 + y1) / 2.0 for y0, y1 in zip(ys, ys[1:])]
    if not mids:
        return []
    med = statistics.median(mids)
    return sorted(mids, key=lambda y: (abs(y - med), y))


def representative_point(c: Contour, all_contours: Iterable[Contour], tol: Tolerance) -> Point:
    """A deterministic point inside ``c`` but outside every smaller contour nested in it.

    Horizontal lines halfway between consecutive vertex ordinates of ``c`` are
    tried from the median outward; each line is cut by every edge of
    ``all_contours`` and the first interval midpoint that qualifies wins.
    """
    others = [d for d in all_contours]
    if not any(d is c for d in others):
        others.append(c)
    edges = [e for d in others for e in d.edges()]
    area_c = abs(signed_area(c))
    slack = _area_slack(tol, c)
    smaller = [d for d in others if d is not c and abs(signed_area(d)) < area_c - slack]
    lo = min(v.y for v in c)
    hi = max(v.y for v in c)

    own = _scan_lines(v.y for v in c)
    extra = _scan_lines([lo, hi] + [v.y for d in others for v in d if lo < v.y < hi])
    for y in own + [y for y in extra if y not in own]:
        xs = set()
        for a, b in edges:
            if (a.y - y) * (b.y - y) < 0:
                xs.add(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y))
            elif a.y == y:
                xs.add(a.x)
        xs = sorted(xs)
        for x0, x1 in zip(xs, xs[1:]):
            if x1 - x0 <= 2 * tol.eps:
                continue
            m = Point((x0 + x1) / 2.0, y)
            if point_in_contour(m, c, tol) is not True:
                continue
            if any(point_segment_distance(m, a, b) <= tol.eps for a, b in edges):
                continue
            if any(point_in_contour(m, d) for d in smaller):
                continue
            return m
    raise NoInteriorPoint(f"no interior point found for contour with {len(c)} vertices")


def canonical_orientation(cc: ClassifiedContour) -> ClassifiedContour:
    """Non-holes counter-clockwise, holes clockwise."""
    area = signed_area(cc.contour)
    if (area < 0) != cc.is_hole:
        return replace(cc, contour=cc.contour.reversed())
    return cc


def classify(
    contours: Iterable[Contour],
    original: Polygon,
    tol: Tolerance,
    group: int = 0,
) -> list[ClassifiedContour]:
    contours = list(contours)
    out = []
    for c in contours:
        rep = representative_point(c, contours, tol)
        w = winding_number(rep, original.contours, tol)
        hole = not original.fill_rule.is_inside(w)
        out.append(canonical_orientation(ClassifiedContour(c, w, hole, rep, group)))
    return out


def _innermost(inside: Sequence[ClassifiedContour]):
    return min(inside, key=lambda cc: cc.area) if inside else None


def classified_contains(p, classified: Sequence[ClassifiedContour]) -> bool:
    """Membership of ``p`` read off the classified set: the smallest contour
    containing ``p`` decides, being filled unless it is a hole."""
    inner = _innermost([cc for cc in classified if point_in_contour(p, cc.contour)])
    return inner is not None and not inner.is_hole


class FilledRegion:
    """The filled area of one decomposed polygon, queried on either side of a segment."""

    def __init__(self, classified: Sequence[ClassifiedContour], tol: Tolerance):
        self.classified = list(classified)
        self.tol = tol
        self._edges = [list(cc.contour.edges()) for cc in self.classified]

    def sides(self, m, direction) -> tuple[bool, bool]:
        left_in, right_in = [], []
        for cc, edges in zip(self.classified, self._edges):
            wl, wr = side_winding(m, direction, edges, self.tol)
            if wl:
                left_in.append(cc)
            if wr:
                right_in.append(cc)
        left, right = _innermost(left_in), _innermost(right_in)
        return (left is not None and not left.is_hole, right is not None and not right.is_hole)

    def contains(self, p) -> bool:
        return classified_contains(p, self.classified)


def hole_region_contains(
    p, hole: ClassifiedContour, nonholes: Sequence[ClassifiedContour], tol: Tolerance
) -> bool:
    """Strictly inside ``hole`` and not inside or on a smaller non-hole of the same group."""
    if point_in_contour(p, hole.contour, tol) is not True:
        return False
    for n in nonholes:
        if n.group != hole.group or n.area >= hole.area:
            continue
        if point_in_contour(n.rep_point, hole.contour) and point_in_contour(p, n.contour, tol) is not False:
            return False
    return True
