"""Distinguished points of a polynomial graph and arc convexity classes.

The graph 0-cells of every decomposition come from here: strict inflection
points (sign change of f'') and local minima (f' sign change - to +), plus
all zeros of f' for splitting into monotone pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import MixedSigns, ZeroPolynomial
from .poly import Interval, Polynomial, isolate_real_roots


@dataclass(frozen=True)
class CriticalProfile:
    strict_inflections: tuple
    local_minima: tuple
    f_prime_zeros: tuple


class ArcClass(Enum):
    CONVEX_DOWN = "ConvexDown"
    CONVEX_UP_INCREASING = "ConvexUpIncreasing"
    CONVEX_UP_DECREASING = "ConvexUpDecreasing"
    LINEAR = "Linear"


def _flank_sign(p: Polynomial, x: float, side: float, neighbors, window: Interval, tol: float) -> float:
    """Sign of p sampled a safe distance from x toward ``side``.

    The sample sits at max(tol, gap/4) from x, where gap is the distance to
    the nearest neighbor zero (or window edge) on that side.
    """
    if side > 0:
        others = [n for n in neighbors if n > x + tol] + [window.hi]
        gap = min(others) - x
    else:
        others = [n for n in neighbors if n < x - tol] + [window.lo]
        gap = x - max(others)
    if gap <= 0:
        return 0.0
    h = max(tol, 0.25 * gap)
    return p(x + side * h)


def critical_profile(f: Polynomial, window: Interval, tol: float = 1e-9) -> CriticalProfile:
    """Strict inflections and local minima of f inside the window.

    Degree <= 1 inputs yield an empty profile (f'' is the zero polynomial,
    not an error).  Critical points exactly on the window boundary are
    reported but carry no flanking classification on the missing side.
    """
    if window.span <= 0:
        raise ValueError("window must be nonempty")
    d1 = f.derivative()
    d2 = d1.derivative()

    try:
        z1 = isolate_real_roots(d1, window, tol).values() if not d1.is_zero() else []
    except ZeroPolynomial:
        z1 = []
    try:
        z2 = isolate_real_roots(d2, window, tol).values() if not d2.is_zero() else []
    except ZeroPolynomial:
        z2 = []

    inflections = []
    for x in z2:
        left = _flank_sign(d2, x, -1.0, z2, window, tol)
        right = _flank_sign(d2, x, +1.0, z2, window, tol)
        if left * right < 0.0:
            inflections.append(x)

    minima = []
    for x in z1:
        left = _flank_sign(d1, x, -1.0, z1, window, tol)
        right = _flank_sign(d1, x, +1.0, z1, window, tol)
        if left < 0.0 < right:
            minima.append(x)

    return CriticalProfile(tuple(inflections), tuple(minima), tuple(z1))


def classify_arc(f: Polynomial, arc: Interval, tol: float = 1e-9) -> ArcClass:
    """Convexity class of f on an arc free of f'/f'' sign changes.

    Raises MixedSigns when a zero of f' or f'' lies strictly inside the arc
    (detected by comparing samples near the endpoints with the midpoint).
    """
    d1 = f.derivative()
    d2 = d1.derivative()
    if d2.is_zero():
        return ArcClass.LINEAR

    h = min(tol, 0.25 * arc.span)
    xs = (arc.lo + h, arc.mid, arc.hi - h)
    s1 = [d1(x) for x in xs]
    s2 = [d2(x) for x in xs]
    if max(s2) > 0 > min(s2) or max(s1) > 0 > min(s1):
        raise MixedSigns(f"f' or f'' changes sign inside {arc}")

    if s2[1] < 0:
        return ArcClass.CONVEX_DOWN
    if s1[1] > 0:
        return ArcClass.CONVEX_UP_INCREASING
    if s1[1] < 0:
        return ArcClass.CONVEX_UP_DECREASING
    # f' vanishing at the midpoint of a supposedly monotone arc
    raise MixedSigns(f"f' vanishes in the interior of {arc}")


def split_abscissae(f: Polynomial, window: Interval, tol: float = 1e-9) -> list:
    """Abscissae at which the window must be split so that classify_arc
    succeeds on every resulting arc: all zeros of f' and f''."""
    d1 = f.derivative()
    d2 = d1.derivative()
    pts = set()
    for d in (d1, d2):
        if not d.is_zero() and d.degree() >= 1:
            pts.update(isolate_real_roots(d, window, tol).values())
    return sorted(pts)
