"""Univariate polynomials, real-root isolation, and rotated graph geometry.

Coefficients are double-precision reals stored low degree to high.  Root
isolation is bisection on monotone pieces (split at derivative roots) plus
Newton polishing; no exact arithmetic is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ZeroPolynomial


@dataclass(frozen=True)
class Interval:
    """A closed real interval [lo, hi]."""

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval lo {self.lo} > hi {self.hi}")

    @property
    def span(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol


class Polynomial:
    """A real univariate polynomial.

    The zero polynomial has an empty coefficient tuple; otherwise the
    trailing (highest-degree) coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [float(c) for c in coeffs]
        while cs and cs[-1] == 0.0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Polynomial is immutable")

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        """Horner evaluation; works on floats and numpy arrays alike."""
        result = 0.0 * x if hasattr(x, "shape") else 0.0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def derivative(self) -> "Polynomial":
        if len(self.coeffs) <= 1:
            return Polynomial()
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0.0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0.0] * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1.0)

    def scale(self, k: float) -> "Polynomial":
        return Polynomial(k * c for c in self.coeffs)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0.0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)) by Horner over polynomials."""
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * inner + Polynomial([c])
        return result

    def shift_down(self, dy: float) -> "Polynomial":
        """The polynomial x -> self(x) - dy (graph translated downward)."""
        cs = list(self.coeffs) or [0.0]
        cs[0] -= dy
        return Polynomial(cs)

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


SIMPLE = "simple"
SUSPECTED_MULTIPLE = "suspected-multiple"


@dataclass(frozen=True)
class Root:
    interval: Interval
    refined: float
    flag: str = SIMPLE


@dataclass
class RootSet:
    """Isolated real roots, sorted ascending."""

    roots: list = field(default_factory=list)

    def values(self) -> list:
        return [r.refined for r in self.roots]

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def _newton_polish(p: Polynomial, dp: Polynomial, x: float, lo: float, hi: float) -> float:
    for _ in range(40):
        fx = p(x)
        dfx = dp(x)
        if dfx == 0.0:
            break
        step = fx / dfx
        nx = x - step
        if not (lo <= nx <= hi):
            break
        if nx == x:
            break
        x = nx
        if abs(step) < 1e-16 * max(1.0, abs(x)):
            break
    return x


def _bisect_root(p: Polynomial, lo: float, hi: float, tol: float) -> tuple:
    flo = p(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = p(mid)
        if fm == 0.0:
            lo = hi = mid
            break
        if (flo < 0.0) != (fm < 0.0):
            hi = mid
        else:
            lo, flo = mid, fm
    x = _newton_polish(p, p.derivative(), 0.5 * (lo + hi), lo, hi)
    return lo, hi, x


def _value_scale(p: Polynomial, x: float) -> float:
    """Magnitude of the evaluation terms; a residual much smaller than
    machine-eps times this is numerically zero."""
    ax = abs(x)
    return sum(abs(c) * ax**k for k, c in enumerate(p.coeffs)) or 1.0


def isolate_real_roots(p: Polynomial, window: Interval, tol: float = 1e-9) -> RootSet:
    """Every real root of ``p`` in ``window``, bracketed to width <= tol.

    Roots closer than ``tol`` are merged into one and flagged
    suspected-multiple, as are derivative roots where ``p`` nearly vanishes
    without a sign change (even-multiplicity touches).

    Raises ZeroPolynomial for the identically-zero input.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.degree() == 0:
        return RootSet([])

    # Split the window into monotone pieces at derivative roots, so each
    # piece carries at most one sign-change root.
    dp = p.derivative()
    if dp.degree() >= 1:
        crit = isolate_real_roots(dp, window, tol).values()
    else:
        crit = []
    breakpoints = sorted({window.lo, window.hi, *crit})

    found = []  # (x, flag)
    for x in breakpoints:
        if abs(p(x)) <= 1e-10 * _value_scale(p, x):
            flag = SUSPECTED_MULTIPLE if window.lo < x < window.hi and x in crit else SIMPLE
            found.append((x, flag))

    for lo, hi in zip(breakpoints, breakpoints[1:]):
        flo, fhi = p(lo), p(hi)
        if abs(flo) <= 1e-10 * _value_scale(p, lo) or abs(fhi) <= 1e-10 * _value_scale(p, hi):
            continue  # endpoint root already recorded
        if (flo < 0.0) != (fhi < 0.0):
            _, _, x = _bisect_root(p, lo, hi, tol)
            found.append((x, SIMPLE))

    found.sort()
    merged = []
    for x, flag in found:
        if merged and x - merged[-1][0] < tol:
            px, _ = merged[-1]
            merged[-1] = (0.5 * (px + x), SUSPECTED_MULTIPLE)
        else:
            merged.append((x, flag))

    roots = [
        Root(Interval(max(window.lo, x - 0.5 * tol), min(window.hi, x + 0.5 * tol)), x, flag)
        for x, flag in merged
    ]
    return RootSet(roots)


class RotatedGraph:
    """The graph of ``y = poly(x)`` rotated counterclockwise by ``theta``.

    The membership predicate at a world point (x, y) is
    ``poly(cos(t)x + sin(t)y) - (-sin(t)x + cos(t)y)``: positive strictly
    inside the associated half-plane, zero on the graph, negative outside.
    """

    __slots__ = ("poly", "theta", "_cos", "_sin")

    def __init__(self, poly: Polynomial, theta: float = 0.0):
        if not isinstance(poly, Polynomial):
            poly = Polynomial(poly)
        theta = float(theta) % (2.0 * math.pi)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "_cos", math.cos(theta))
        object.__setattr__(self, "_sin", math.sin(theta))

    def __setattr__(self, *a):
        raise AttributeError("RotatedGraph is immutable")

    def membership(self, point) -> float:
        x, y = point[0], point[1]
        u = self._cos * x + self._sin * y
        v = -self._sin * x + self._cos * y
        return self.poly(u) - v

    def to_frame(self, point) -> tuple:
        """World point -> (u, v) coordinates in the graph's own frame."""
        x, y = point[0], point[1]
        return (self._cos * x + self._sin * y, -self._sin * x + self._cos * y)

    def from_frame(self, u, v) -> tuple:
        return (self._cos * u - self._sin * v, self._sin * u + self._cos * v)

    def parametrize(self, t):
        """World coordinates of the graph point with frame abscissa ``t``."""
        pt = self.poly(t)
        return (self._cos * t - self._sin * pt, self._sin * t + self._cos * pt)

    def tangent(self, t) -> tuple:
        """Unit tangent direction (in world coordinates) at abscissa ``t``."""
        d = self.poly.derivative()(t)
        n = math.hypot(1.0, d)
        return ((self._cos - self._sin * d) / n, (self._sin + self._cos * d) / n)

    def same_set_as(self, other: "RotatedGraph") -> bool:
        """Whether the two rotated graphs are the same point set."""
        return graph_intersections(self, other, Interval(-1.0, 1.0)) is OVERLAP_PARTIAL

    def __repr__(self):
        return f"RotatedGraph({self.poly!r}, theta={self.theta:.6g})"


class _OverlapPartial:
    """Sentinel: the two graphs overlap along a whole stretch."""

    def __repr__(self):
        return "OverlapPartial"


OVERLAP_PARTIAL = _OverlapPartial()


def membership(g: RotatedGraph, point) -> float:
    return g.membership(point)


def composed_membership(a: RotatedGraph, b: RotatedGraph) -> Polynomial:
    """b's membership predicate along a's parametrization, as a polynomial
    in a's frame abscissa."""
    delta = a.theta - b.theta
    c, s = math.cos(delta), math.sin(delta)
    t = Polynomial([0.0, 1.0])
    u = t.scale(c) - a.poly.scale(s)  # frame-b abscissa of the point
    v = t.scale(s) + a.poly.scale(c)  # frame-b ordinate
    return b.poly.compose(u) - v


def graph_intersections(a: RotatedGraph, b: RotatedGraph, window: Interval, tol: float = 1e-9):
    """Intersection points of two rotated graphs, in world coordinates.

    ``window`` is the abscissa range searched in a's local frame.  Returns
    OVERLAP_PARTIAL when the composed predicate is identically zero.
    """
    q = composed_membership(a, b)
    scale = max(1.0, a.poly.max_abs_coeff(), b.poly.max_abs_coeff())
    if q.max_abs_coeff() <= 1e-12 * scale:
        return OVERLAP_PARTIAL
    if q.degree() < 1:
        return []
    roots = isolate_real_roots(q, window, tol)
    return [a.parametrize(r) for r in roots.values()]


def graph_intersection_params(a: RotatedGraph, b: RotatedGraph, window: Interval, tol: float = 1e-9):
    """Like graph_intersections but returning a-frame abscissae."""
    q = composed_membership(a, b)
    scale = max(1.0, a.poly.max_abs_coeff(), b.poly.max_abs_coeff())
    if q.max_abs_coeff() <= 1e-12 * scale:
        return OVERLAP_PARTIAL
    if q.degree() < 1:
        return []
    return isolate_real_roots(q, window, tol).values()


def line_through(p, q) -> tuple:
    """A segment's carrier line as a rotated constant graph.

    Returns (graph, t_p, t_q): the RotatedGraph whose parametrization covers
    the line, and the parameters of the two input points on it.
    """
    dx, dy = q[0] - p[0], q[1] - p[1]
    phi = math.atan2(dy, dx)
    c, s = math.cos(phi), math.sin(phi)
    d = -s * p[0] + c * p[1]
    g = RotatedGraph(Polynomial([d]), phi)
    tp = c * p[0] + s * p[1]
    tq = c * q[0] + s * q[1]
    return g, tp, tq
