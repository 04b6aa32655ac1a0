import pytest

from selfclip.geom import Contour, FillRule, Point, Polygon

BOWTIE = [(0, 0), (4, 4), (4, 0), (0, 4)]
RECT = [(1, -1), (3, -1), (3, 5), (1, 5)]
OVERLAP = [(0, 0), (8, 0), (8, 6), (3, 6), (3, 2), (5, 2), (5, 4), (0, 4)]
SQUARE4 = [(0, 0), (4, 0), (4, 4), (0, 4)]
DOUBLE_SQUARE = SQUARE4 + SQUARE4
UNIT = [(0, 0), (1, 0), (1, 1), (0, 1)]


def contour(pts):
    return Contour(tuple(Point(float(x), float(y)) for x, y in pts))


def polygon(*rings, rule=FillRule.NON_ZERO):
    return Polygon(tuple(contour(r) for r in rings), rule)


def cover(*rings, margin=1.0):
    xs = [p[0] for r in rings for p in r]
    ys = [p[1] for r in rings for p in r]
    x0, x1, y0, y1 = min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin
    return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]


@pytest.fixture
def bowtie():
    return polygon(BOWTIE)


@pytest.fixture
def rect():
    return polygon(RECT)


@pytest.fixture
def unit():
    return contour(UNIT)
