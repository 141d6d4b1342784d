"""Typed failures raised by the geometry kernel and everything built on it.

The class names double as the reason codes printed by the CLI, so they are
kept short and free of an ``Error`` suffix.
"""


class GeometryError(ValueError):
    """Base class for every degenerate-input condition."""


class ZeroImage(GeometryError):
    pass


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class InfinitePoint(GeometryError):
    pass


class InfiniteCenter(GeometryError):
    pass


class NotOnLine(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class CoincidesWithBasePoint(GeometryError):
    pass


class UndefinedCrossRatio(GeometryError):
    pass


class Singular(GeometryError):
    pass


class CollinearSources(GeometryError):
    pass


class OnSideLine(GeometryError):
    pass


class DegenerateP(GeometryError):
    pass


class OnSideOfABC(DegenerateP):
    pass


class OnSideOfAnticomplementary(DegenerateP):
    pass


class UnknownName(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class RouteMismatch(RuntimeError):
    """Two independent computations of the same object disagreed."""


class ProofFailed(Exception):
    """A polynomial that should vanish identically did not."""

    def __init__(self, report, label, polynomial):
        super().__init__(f"{report.theorem}: {label} does not vanish: {polynomial}")
        self.report = report
        self.label = label
        self.polynomial = polynomial
