"""Exception types raised across the package."""


class HypanError(Exception):
    """Base class for all errors raised by hypan."""


class DuplicatePoint(HypanError):
    """Two points of a cloud coincide; distance matrices must be positive off-diagonal."""

    def __init__(self, i, j):
        self.indices = (i, j)
        super().__init__(f"points {i} and {j} coincide")


class InvalidDistanceMatrix(HypanError):
    """Distance matrix violates a construction invariant (shape, diagonal, symmetry, positivity)."""


class InvalidDimension(HypanError):
    pass


class FewerThanFivePoints(HypanError):
    pass


class ZeroBaseDistance(HypanError):
    pass


class PointOnBoundary(HypanError):
    pass


class NonFiniteInput(HypanError):
    pass


class BaseAtOrigin(HypanError):
    pass


class BaseOutsideBall(HypanError):
    pass


class PoleInput(HypanError):
    pass


class NotOrthogonal(HypanError):
    pass


class PointAtPuncture(HypanError):
    pass


class ParseError(HypanError):
    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class NotSquare(HypanError):
    pass


class AsymmetricInput(HypanError):
    pass


class NonzeroDiagonal(HypanError):
    pass


class DimensionMismatch(HypanError):
    def __init__(self, point_index):
        self.point_index = point_index
        super().__init__(f"point {point_index} has the wrong number of coordinates")


class EmptyCloud(HypanError):
    pass
