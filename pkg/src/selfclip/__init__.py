"""Intersection of self-intersecting polygons under even-odd or non-zero fill rules."""
from .classify import ClassifiedContour, FilledRegion, canonical_orientation, classify, representative_point
from .decompose import PlanarContour, SimpleContourSet, decompose_polygon, planarize, split_contour
from .errors import (
    AlternationViolation,
    CollinearSelfOverlap,
    CrossContourCrossing,
    DegenerateContour,
    GenerationFailure,
    GeometryError,
    MissingFillRule,
    NoInteriorPoint,
    NonTermination,
    ParseError,
    PointOnBoundary,
    SelfClipError,
    TooFewVertices,
)
from .geom import (
    Contour,
    FillRule,
    IntersectionKind,
    Orientation,
    Point,
    Polygon,
    SegmentIntersection,
    Tolerance,
    orientation_of,
    point_in_polygon,
    segment_intersect,
    signed_area,
    winding_number,
)
from .oracle import OracleReport, compare_regions, random_convex, random_fixture, winding_oracle
from .pipeline import ClipResult, clip_polygons, eliminate_hole_edges, reassemble
from .polyio import emit_svg, parse_polygon, write_polygon
from .wa import BoundaryIntersection, BoundaryKind, PieceSet, clip_simple_pair, find_boundary_intersections, label_entry_exit, wa_traverse

__version__ = "0.1.0"
