"""Exception types shared across the package."""


class SemialgError(Exception):
    """Base class for all package errors."""


class ZeroPolynomial(SemialgError):
    """Root isolation was asked about the identically-zero polynomial."""


class EmptyWindow(SemialgError):
    """The requested window does not meet the region being decomposed."""


class DegenerateInterval(SemialgError):
    """An interval with nonpositive span where a positive one is required."""


class WindowMismatch(SemialgError):
    """Two complexes that must share a window do not."""


class OverlapSide(SemialgError):
    """A cutting graph partially overlaps a side it was meant to cross."""


class DuplicateSet(SemialgError):
    """Two inputs define the same point set where distinct sets are required."""


class MixedSigns(SemialgError):
    """An arc contains a sign change of f' or f'' in its interior."""


class ParallelTangents(SemialgError):
    """Tangent lines at the two abscissae are parallel; no apex exists."""


class NotBelowGraph(SemialgError):
    """A polyline vertex lies above the graph it must stay below."""


class NotConvexIncreasing(SemialgError):
    """The arc is not strictly convex upward and strictly increasing."""


class OutsideRegion(SemialgError):
    """A geodesic endpoint lies outside the admissible region."""


class Disconnected(SemialgError):
    """The two endpoints lie in different components at the sampling resolution."""


class Unreachable(SemialgError):
    """No grid path between the endpoints at the given resolution."""


class CurveEscapesComplex(SemialgError):
    """A curve sample lies in no cell of the complex."""


class ParseError(SemialgError):
    """Scene text is not valid JSON or has the wrong shape."""


class ValidationError(SemialgError):
    """A parsed document violates its invariants."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
