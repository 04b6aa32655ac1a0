"""Exception hierarchy.

Parse problems and geometry problems are kept apart so the CLI can map them
to distinct exit codes.
"""


class SelfClipError(Exception):
    """Base class for every error raised by this package."""


class GeometryError(SelfClipError):
    pass


class PointOnBoundary(GeometryError):
    """Winding number queried for a point lying on a contour."""


class CollinearSelfOverlap(GeometryError):
    pass


class CrossContourCrossing(GeometryError):
    pass


class DegenerateContour(GeometryError):
    pass


class NoInteriorPoint(GeometryError):
    pass


class AlternationViolation(GeometryError):
    pass


class NonTermination(GeometryError):
    pass


class GenerationFailure(SelfClipError):
    pass


class ParseError(SelfClipError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MissingFillRule(ParseError):
    pass


class TooFewVertices(ParseError):
    pass
