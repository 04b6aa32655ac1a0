"""Line-based polygon files and SVG rendering.

File grammar::

    # comment
    fillrule nonzero|evenodd
    contour x1 y1 x2 y2 x3 y3 ...

The fill-rule line is required and must come first; every contour is closed
implicitly.
"""
from __future__ import annotations

import math
import os
import tempfile
from typing import Optional, Sequence

from .errors import MissingFillRule, ParseError, TooFewVertices
from .geom import Contour, FillRule, Point, Polygon, bbox

__all__ = [
    "parse_polygon",
    "write_polygon",
    "read_polygon_file",
    "write_text_atomic",
    "emit_svg",
    "SUBJECT_STYLE",
    "CLIPPER_STYLE",
    "RESULT_STYLE",
]

DUPLICATE_EPS = 1e-12

SUBJECT_STYLE = {"fill": "#1f77b4", "fill-opacity": "0.3", "stroke": "#1f77b4", "stroke-width": "1"}
CLIPPER_STYLE = {"fill": "#ff7f0e", "fill-opacity": "0.3", "stroke": "#ff7f0e", "stroke-width": "1"}
RESULT_STYLE = {"fill": "none", "stroke": "#000000", "stroke-width": "2"}


def _float(tok: str, lineno: int) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise ParseError(f"not a number: {tok!r}", lineno) from None
    if not math.isfinite(v):
        raise ParseError(f"non-finite coordinate: {tok!r}", lineno)
    return v


def _close(p, q) -> bool:
    return abs(p[0] - q[0]) <= DUPLICATE_EPS and abs(p[1] - q[1]) <= DUPLICATE_EPS


def _parse_contour(tokens, lineno) -> Contour:
    if len(tokens) % 2:
        raise ParseError("odd number of coordinates", lineno)
    vals = [_float(t, lineno) for t in tokens]
    pts = [Point(vals[i], vals[i + 1]) for i in range(0, len(vals), 2)]
    if len(pts) < 3:
        raise TooFewVertices(f"contour needs at least 3 vertices, got {len(pts)}", lineno)
    for i in range(len(pts)):
        if _close(pts[i - 1], pts[i]):
            raise ParseError(f"duplicate consecutive vertex ({pts[i].x}, {pts[i].y})", lineno)
    return Contour(tuple(pts))


def parse_polygon(text: str) -> Polygon:
    rule = None
    contours = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        key = head.lower()
        if key == "fillrule":
            if rule is not None:
                raise ParseError("second fillrule declaration", lineno)
            if len(rest) != 1:
                raise ParseError("fillrule takes one argument", lineno)
            try:
                rule = FillRule(rest[0].lower())
            except ValueError:
                raise ParseError(f"unknown fill rule {rest[0]!r}", lineno) from None
        elif key == "contour":
            if rule is None:
                raise MissingFillRule("fillrule must be the first declaration", lineno)
            contours.append(_parse_contour(rest, lineno))
        else:
            raise ParseError(f"unknown keyword {head!r}", lineno)
    if rule is None:
        raise MissingFillRule("no fillrule declaration")
    return Polygon(tuple(contours), rule)


def _num(v: float) -> str:
    """12 significant digits when that reproduces ``v`` exactly, else the
    shortest string that does."""
    v = float(v) + 0.0  # folds -0.0 into 0.0
    s = format(v, ".12g")
    return s if float(s) == v else repr(v)


def write_polygon(poly: Polygon) -> str:
    lines = [f"fillrule {poly.fill_rule.value}"]
    if poly.is_empty():
        lines.append("# empty")
    for c in poly.contours:
        lines.append("contour " + " ".join(f"{_num(p.x)} {_num(p.y)}" for p in c))
    return "\n".join(lines) + "\n"


def read_polygon_file(path) -> Polygon:
    with open(path, encoding="utf-8") as fh:
        return parse_polygon(fh.read())


def write_text_atomic(path, text: str):
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _path_data(poly: Polygon) -> str:
    parts = []
    for c in poly.contours:
        pts = " L ".join(f"{_num(p.x)} {_num(-p.y)}" for p in c)
        parts.append(f"M {pts} Z")
    return " ".join(parts)


def emit_svg(layers: Sequence[tuple[Polygon, Optional[dict]]], out=None) -> str:
    """Render polygons as one SVG document, first layer at the bottom.

    Each layer is a ``(polygon, style)`` pair; a ``None`` style picks the
    subject, clipper and result defaults for the first three layers. The
    y axis is flipped so that +y points up. If ``out`` is given the document
    is also written there.
    """
    if not layers:
        raise ValueError("at least one layer is required")
    defaults = [SUBJECT_STYLE, CLIPPER_STYLE, RESULT_STYLE]
    box = bbox(v for poly, _ in layers for c in poly.contours for v in c) or (0.0, 0.0, 1.0, 1.0)
    x0, y0, x1, y1 = box
    w, h = (x1 - x0) or 1.0, (y1 - y0) or 1.0
    pad = 0.05 * max(w, h)
    view = f"{_num(x0 - pad)} {_num(-y1 - pad)} {_num(w + 2 * pad)} {_num(h + 2 * pad)}"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}">',
    ]
    for i, (poly, style) in enumerate(layers):
        if style is None:
            style = defaults[min(i, len(defaults) - 1)]
        attrs = " ".join(f'{k}="{v}"' for k, v in style.items())
        lines.append(
            f'  <path d="{_path_data(poly)}" fill-rule="{poly.fill_rule.value}" '
            f'vector-effect="non-scaling-stroke" {attrs}/>'
        )
    lines.append("</svg>")
    doc = "\n".join(lines) + "\n"
    if out is not None:
        if hasattr(out, "write"):
            out.write(doc)
        else:
            write_text_atomic(out, doc)
    return doc
