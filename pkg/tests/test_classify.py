import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BOWTIE, DOUBLE_SQUARE, OVERLAP, SQUARE4, UNIT, contour, polygon
from selfclip.classify import (
    ClassifiedContour,
    canonical_orientation,
    classified_contains,
    classify,
    representative_point,
)
from selfclip.decompose import decompose_polygon
from selfclip.errors import PointOnBoundary
from selfclip.geom import FillRule, Point, Tolerance, point_in_contour, point_in_polygon, signed_area
from selfclip.oracle import random_fixture


def run(ring, rule):
    poly = polygon(ring, rule=rule)
    tol = Tolerance.for_polygons(poly)
    parts = decompose_polygon(poly, tol)
    return parts, classify(parts.contours, poly, tol)


def test_rep_point_unit_square(unit):
    assert representative_point(unit, [unit], Tolerance(1e-9)) == (0.5, 0.5)


def test_rep_point_lens_inside_lens():
    parts, _ = run(OVERLAP, FillRule.NON_ZERO)
    lens = parts.contours[0]
    p = representative_point(lens, parts.contours, Tolerance(1e-8))
    assert 3 < p.x < 5 and 2 < p.y < 4


def test_rep_point_avoids_nested_contour():
    parts, _ = run(OVERLAP, FillRule.NON_ZERO)
    outer = parts.contours[1]
    p = representative_point(outer, parts.contours, Tolerance(1e-8))
    assert point_in_contour(p, outer)
    assert not point_in_contour(p, parts.contours[0])


def test_rep_point_bowtie_lobe():
    lobe = contour([(0, 0), (2, 2), (0, 4)])
    p = representative_point(lobe, [lobe, contour([(2, 2), (4, 4), (4, 0)])], Tolerance(1e-8))
    assert p.x < 2 and point_in_contour(p, lobe, Tolerance(1e-8))


@pytest.mark.parametrize("rule, hole", [(FillRule.NON_ZERO, False), (FillRule.EVEN_ODD, True)])
def test_lens_classification(rule, hole):
    _, cls = run(OVERLAP, rule)
    lens, outer = cls
    assert lens.winding == 2 and lens.is_hole is hole
    assert outer.winding == 1 and not outer.is_hole
    assert (signed_area(lens.contour) < 0) is hole


def test_bowtie_lobes():
    _, cls = run(BOWTIE, FillRule.NON_ZERO)
    assert [c.winding for c in cls] == [-1, 1]
    assert not any(c.is_hole for c in cls)
    # the clockwise lobe is reversed
    assert [tuple(p) for p in cls[0].contour] == [(4, 0), (4, 4), (2, 2)]
    assert all(signed_area(c.contour) > 0 for c in cls)


def test_doubly_wound_square():
    for rule, hole in [(FillRule.NON_ZERO, False), (FillRule.EVEN_ODD, True)]:
        _, cls = run(DOUBLE_SQUARE, rule)
        assert [c.winding for c in cls] == [2, 2]
        assert all(c.is_hole is hole for c in cls)


@pytest.mark.parametrize(
    "ring, hole, flipped",
    [(UNIT, False, False), (UNIT, True, True), (UNIT[::-1], False, True), (UNIT[::-1], True, False)],
)
def test_canonical_orientation(ring, hole, flipped):
    c = contour(ring)
    cc = canonical_orientation(ClassifiedContour(c, 1, hole, Point(0.5, 0.5)))
    assert (cc.contour == c.reversed()) is flipped
    assert (signed_area(cc.contour) < 0) is hole


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(4, 16), st.sampled_from(list(FillRule)))
def test_classification_invariants(seed, n, rule):
    poly = random_fixture(seed, n, True, rule)
    tol = Tolerance.for_polygons(poly)
    parts = decompose_polygon(poly, tol)
    cls = classify(parts.contours, poly, tol)
    again = classify(parts.contours, poly, tol)
    assert [c.rep_point for c in cls] == [c.rep_point for c in again]
    for cc in cls:
        assert cc.is_hole == (not rule.is_inside(cc.winding))
        assert (signed_area(cc.contour) < 0) == cc.is_hole
        assert point_in_contour(cc.rep_point, cc.contour, tol) is True


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(4, 16), st.sampled_from(list(FillRule)))
def test_region_semantics(seed, n, rule):
    poly = random_fixture(seed, n, True, rule)
    tol = Tolerance.for_polygons(poly)
    parts = decompose_polygon(poly, tol)
    cls = classify(parts.contours, poly, tol)
    rng = np.random.default_rng(seed)
    for x, y in rng.uniform(0, 100, (100, 2)):
        p = Point(x, y)
        try:
            expected = point_in_polygon(p, poly, tol)
        except PointOnBoundary:
            continue
        assert classified_contains(p, cls) == expected
