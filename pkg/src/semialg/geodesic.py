"""Shortest-length curves: tangent apexes, zigzag curves, and geodesics.

The zigzag machinery works in the frame of a single polynomial graph
(convex-upward stretches).  Geodesics below a graph are computed as the
greatest convex minorant of the pinned ceiling and then snapped to exact
tangency by Newton iteration; geodesics inside a type-I region are reduced
to the below-graph problem in the frame of the side they hug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import (
    Disconnected,
    NotBelowGraph,
    NotConvexIncreasing,
    OutsideRegion,
    ParallelTangents,
    Unreachable,
)
from .features import ArcClass, classify_arc
from .oracle import OracleConfig, arc_length_quadrature, polygonal_shortest_path
from .poly import Interval, Polynomial, RotatedGraph


@dataclass(frozen=True)
class Tolerances:
    eps_len: float = 1e-9
    eps_geom: float = 1e-9
    max_refine: int = 10_000

    def __post_init__(self):
        if self.eps_len <= 0 or self.eps_geom <= 0 or self.max_refine <= 0:
            raise ValueError("all tolerances must be positive")


def _dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


@dataclass(frozen=True)
class Segment:
    p: tuple
    q: tuple

    def length(self) -> float:
        return _dist(self.p, self.q)

    @property
    def start(self):
        return self.p

    @property
    def end(self):
        return self.q

    def direction_at_start(self):
        d = self.length()
        if d == 0:
            return (0.0, 0.0)
        return ((self.q[0] - self.p[0]) / d, (self.q[1] - self.p[1]) / d)

    def direction_at_end(self):
        return self.direction_at_start()

    def sample(self, n: int):
        ts = np.linspace(0.0, 1.0, max(2, n))
        return [
            (self.p[0] + t * (self.q[0] - self.p[0]), self.p[1] + t * (self.q[1] - self.p[1]))
            for t in ts
        ]


@dataclass(frozen=True)
class GraphArc:
    graph: RotatedGraph
    interval: Interval
    reversed: bool = False  # traversed from hi to lo when True

    def length(self) -> float:
        return arc_length_quadrature(self.graph.poly, self.interval)

    @property
    def start(self):
        t = self.interval.hi if self.reversed else self.interval.lo
        return self.graph.parametrize(t)

    @property
    def end(self):
        t = self.interval.lo if self.reversed else self.interval.hi
        return self.graph.parametrize(t)

    def _signed_tangent(self, t):
        tx, ty = self.graph.tangent(t)
        if self.reversed:
            return (-tx, -ty)
        return (tx, ty)

    def direction_at_start(self):
        return self._signed_tangent(self.interval.hi if self.reversed else self.interval.lo)

    def direction_at_end(self):
        return self._signed_tangent(self.interval.lo if self.reversed else self.interval.hi)

    def sample(self, n: int):
        ts = np.linspace(self.interval.lo, self.interval.hi, max(2, n))
        if self.reversed:
            ts = ts[::-1]
        return [self.graph.parametrize(float(t)) for t in ts]


@dataclass
class PiecewiseCurve:
    """A chain of segments and graph arcs with consecutive endpoints equal."""

    pieces: list = field(default_factory=list)

    CHAIN_TOL = 1e-9

    def validate(self):
        for a, b in zip(self.pieces, self.pieces[1:]):
            if _dist(a.end, b.start) > self.CHAIN_TOL:
                raise ValueError(f"pieces do not chain: {a.end} vs {b.start}")

    def length(self) -> float:
        return sum(p.length() for p in self.pieces)

    @property
    def start(self):
        return self.pieces[0].start

    @property
    def end(self):
        return self.pieces[-1].end

    def alternates(self) -> bool:
        kinds = [isinstance(p, GraphArc) for p in self.pieces]
        return all(a != b for a, b in zip(kinds, kinds[1:]))

    def sample(self, per_piece: int = 64):
        pts = []
        for piece in self.pieces:
            s = piece.sample(per_piece)
            if pts:
                s = s[1:]
            pts.extend(s)
        return pts

    def reversed_curve(self) -> "PiecewiseCurve":
        out = []
        for piece in reversed(self.pieces):
            if isinstance(piece, Segment):
                out.append(Segment(piece.q, piece.p))
            else:
                out.append(GraphArc(piece.graph, piece.interval, not piece.reversed))
        return PiecewiseCurve(out)


def tangent_apex(f: Polynomial, a: float, b: float, eps_geom: float = 1e-9):
    """Intersection of the tangent lines to f at abscissae a and b."""
    if a == b:
        raise ValueError("tangent abscissae must differ")
    d = f.derivative()
    da, db = d(a), d(b)
    scale = max(1.0, abs(da), abs(db))
    if abs(da - db) <= eps_geom * scale:
        raise ParallelTangents(f"f'({a}) = f'({b}) = {da}")
    x = (f(b) - f(a) + a * da - b * db) / (da - db)
    y = f(a) + da * (x - a)
    return (x, y)


@dataclass
class ZigzagCurve:
    """Polyline tangent to the graph at every other vertex.

    Vertices are A - apex_1 - t_1 - apex_2 - ... - apex_{m+1} - B where the
    t_j are interior tangent points (frame coordinates of the graph of f).
    """

    f: Polynomial
    a: float  # abscissa of A (on the graph)
    b: float  # abscissa of B
    tangent_abscissae: tuple = ()

    def __post_init__(self):
        self.tangent_abscissae = tuple(sorted(self.tangent_abscissae))

    @property
    def endpoints(self):
        return ((self.a, self.f(self.a)), (self.b, self.f(self.b)))

    @property
    def tangent_points(self):
        return [(t, self.f(t)) for t in self.tangent_abscissae]

    @property
    def apexes(self):
        chain = [self.a, *self.tangent_abscissae, self.b]
        return [tangent_apex(self.f, u, v) for u, v in zip(chain, chain[1:])]

    def polyline(self) -> list:
        if self.a == self.b:
            return [(self.a, self.f(self.a))]
        pts = [(self.a, self.f(self.a))]
        tps = self.tangent_points
        for j, apex in enumerate(self.apexes):
            pts.append(apex)
            if j < len(tps):
                pts.append(tps[j])
        pts.append((self.b, self.f(self.b)))
        return pts

    def length(self) -> float:
        pts = self.polyline()
        return sum(_dist(p, q) for p, q in zip(pts, pts[1:]))


def refine_zigzag(z: ZigzagCurve, f: Polynomial = None) -> ZigzagCurve:
    """Insert the midpoint-abscissa tangent point in every gap.

    Strictly shortens any nondegenerate zigzag (triangle inequality at each
    replaced apex).
    """
    f = f or z.f
    if z.a == z.b:
        return z
    chain = [z.a, *z.tangent_abscissae, z.b]
    new = list(z.tangent_abscissae)
    for u, v in zip(chain, chain[1:]):
        new.append(0.5 * (u + v))
    return ZigzagCurve(f, z.a, z.b, tuple(sorted(new)))


class TriangleGap(NamedTuple):
    l_inscribed: float
    l_zigzag: float
    l_triangle: float
    identity_residual: float


def triangle_completion_gap(f: Polynomial, partition) -> TriangleGap:
    """Inscribed, zigzag, and triangle-completed lengths over a partition.

    Uses the closed forms for the completed triangles and checks the exact
    identity: the completed-minus-inscribed gap equals
    sum_j (s_j - s_{j-1}) * (g(s_j) - g_hat_j) with g = f' + sqrt(1 + f'^2)
    and g_hat_j evaluated at the secant slope (which the mean value theorem
    makes exactly g at the intermediate point).
    """
    q = [float(s) for s in partition]
    if len(q) < 2 or any(u >= v for u, v in zip(q, q[1:])):
        raise ValueError("partition must be sorted with at least 2 points")
    arc = Interval(q[0], q[-1])
    if classify_arc(f, arc) is not ArcClass.CONVEX_UP_INCREASING:
        raise NotConvexIncreasing(f"f is not convex-up increasing on {arc}")

    d = f.derivative()
    pts = [(s, f(s)) for s in q]
    l_inscribed = sum(_dist(p, r) for p, r in zip(pts, pts[1:]))

    l_zigzag = ZigzagCurve(f, q[0], q[-1], tuple(q[1:-1])).length()

    l_triangle = 0.0
    g_sum = 0.0
    for (s0, y0), (s1, y1) in zip(pts, pts[1:]):
        ds = s1 - s0
        slope1 = d(s1)
        hyp = ds * math.hypot(1.0, slope1)  # |A_j'' A_j|
        vert = y0 - y1 - slope1 * (s0 - s1)  # |A_{j-1} A_j''|
        l_triangle += hyp + vert
        secant = (y1 - y0) / ds
        g_here = slope1 + math.hypot(1.0, slope1)
        g_hat = secant + math.hypot(1.0, secant)
        g_sum += ds * (g_here - g_hat)

    residual = abs((l_triangle - l_inscribed) - g_sum)
    return TriangleGap(l_inscribed, l_zigzag, l_triangle, residual)


# ---------------------------------------------------------------------------
# Zigzag replacement of an arbitrary polygonal curve
# ---------------------------------------------------------------------------


def _on_tangent_line(f, d, t, p, eps):
    return abs(f(t) + d(t) * (p[0] - t) - p[1]) <= eps * max(1.0, abs(p[1]))


def _tangent_point_through(f: Polynomial, p, lo: float, hi: float, eps: float):
    """Abscissa D in (lo, hi) whose tangent line passes through p.

    For convex f with p on the tangent line at lo, the residual
    f(D) + f'(D)(px - D) - py decreases from positive to negative as D
    slides right, so bisection applies.
    """
    d = f.derivative()

    def res(t):
        return f(t) + d(t) * (p[0] - t) - p[1]

    # res vanishes at lo itself (p sits on the tangent there); bracket the
    # second root by scanning strictly inside the interval
    n = 256
    ts = [lo + (hi - lo) * k / n for k in range(n + 1)]
    rs = [res(t) for t in ts]
    bracket = None
    for k in range(1, n):
        if rs[k] > 0.0 >= rs[k + 1]:
            bracket = (ts[k], ts[k + 1], rs[k], rs[k + 1])
            break
    if bracket is None:
        return None
    a, b, ra, rb = bracket
    for _ in range(80):
        m = 0.5 * (a + b)
        rm = res(m)
        if rm == 0.0 or b - a < eps:
            return m
        if ra * rm <= 0:
            b, rb = m, rm
        else:
            a, ra = m, rm
    return 0.5 * (a + b)


def _first_crossing(points, start_idx, line_f, eps):
    """First index k > start_idx and point where the polyline crosses the
    line (given as a residual function positive above)."""
    prev = points[start_idx]
    rp = line_f(prev)
    for k in range(start_idx + 1, len(points)):
        cur = points[k]
        rc = line_f(cur)
        if rp * rc <= 0 and (abs(rp) > eps or abs(rc) > eps):
            denom = rc - rp
            t = 0.0 if denom == 0 else -rp / denom
            w = (prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1]))
            return k, w
        prev, rp = cur, rc
    return None, None


def _corner_count(pts, eps=1e-9) -> int:
    """Polyline vertices where the direction actually turns."""
    corners = 2  # endpoints
    for p0, p1, p2 in zip(pts, pts[1:], pts[2:]):
        cross = (p1[0] - p0[0]) * (p2[1] - p1[1]) - (p1[1] - p0[1]) * (p2[0] - p1[0])
        if abs(cross) > eps * max(1.0, _dist(p0, p1) * _dist(p1, p2)):
            corners += 1
    return corners


def _tangentize(pts, f: Polynomial, tol: Tolerances):
    """Make the first and last segments tangent at the on-graph endpoints by
    cutting along the endpoint tangent lines (shortens or keeps length)."""
    d = f.derivative()
    eps = tol.eps_geom

    def tangent_residual(anchor_x, p):
        return p[1] - (f(anchor_x) + d(anchor_x) * (p[0] - anchor_x))

    # left end
    a = pts[0]
    slope_in = (pts[1][1] - a[1]) / (pts[1][0] - a[0]) if pts[1][0] != a[0] else math.inf
    if slope_in > d(a[0]) + 1e-9:
        raise NotBelowGraph("initial segment climbs above the tangent at the left endpoint")
    if slope_in < d(a[0]) - 1e-9:
        k, w = _first_crossing(pts, 1, lambda p: tangent_residual(a[0], p), eps)
        if k is None:
            raise NotBelowGraph("polyline never returns to the left tangent line")
        pts = [a, w] + pts[k:]
    # right end
    b = pts[-1]
    slope_out = (b[1] - pts[-2][1]) / (b[0] - pts[-2][0]) if b[0] != pts[-2][0] else math.inf
    if slope_out < d(b[0]) - 1e-9:
        raise NotBelowGraph("final segment arrives from above the tangent at the right endpoint")
    if slope_out > d(b[0]) + 1e-9:
        rev = pts[::-1]
        k, w = _first_crossing(rev, 1, lambda p: tangent_residual(b[0], p), eps)
        if k is None:
            raise NotBelowGraph("polyline never returns to the right tangent line")
        pts = rev[k:][::-1] + [w, b]
    return pts


def zigzagify(poly_curve, f: Polynomial, arc: Interval, tol: Tolerances = Tolerances()) -> ZigzagCurve:
    """Replace a below-graph polygonal curve by a zigzag tangent curve that
    is no longer and has no more corners.

    The endpoints must lie on the graph over a convex-up-increasing arc.
    Non-tangent first/last segments are first cut along the endpoint tangent
    lines; vertices above the graph raise NotBelowGraph.
    """
    pts = [tuple(map(float, p)) for p in poly_curve]
    if len(pts) < 2:
        raise ValueError("need at least endpoints")
    eps = tol.eps_geom
    for p in pts:
        if f(p[0]) - p[1] < -eps * max(1.0, abs(p[1])):
            raise NotBelowGraph(f"vertex {p} lies above the graph")
    a, b = pts[0][0], pts[-1][0]
    if a == b:
        return ZigzagCurve(f, a, b)
    if classify_arc(f, Interval(min(a, b), max(a, b))) is not ArcClass.CONVEX_UP_INCREASING:
        raise NotConvexIncreasing("zigzagify requires a convex-up increasing arc")

    input_len = sum(_dist(p, q) for p, q in zip(pts, pts[1:]))
    input_corners = _corner_count(pts)
    if len(pts) > 2:
        pts = _tangentize(pts, f, tol)
    abscissae = _zigzag_rec(pts, f, tol)
    z = ZigzagCurve(f, a, b, tuple(t for t in abscissae if a < t < b))
    if z.length() > input_len + tol.eps_len or _corner_count(z.polyline()) > max(3, input_corners):
        raise RuntimeError("zigzag replacement failed to shorten the input")
    return z


def _zigzag_rec(pts, f: Polynomial, tol: Tolerances) -> list:
    """Interior tangent abscissae of a zigzag no longer than the polyline.

    Follows the inductive replacement: apex test, sliding-tangent search,
    then recursion on the tail beyond the found tangent point.
    """
    eps = tol.eps_geom
    d = f.derivative()
    a, b = pts[0][0], pts[-1][0]
    if len(pts) <= 3:
        return []
    apex = tangent_apex(f, a, b, eps)
    p1 = pts[1]

    # Case 1: first vertex at or beyond the apex on the tangent ray -> A-C-B.
    if not _on_tangent_line(f, d, a, p1, 1e-7) or p1[0] >= apex[0] - eps:
        return []

    dd = _tangent_point_through(f, p1, a, b, eps)
    if dd is None:
        return []
    line = lambda p: p[1] - (f(dd) + d(dd) * (p[0] - dd))  # >0 above l_D

    p2 = pts[2]
    r2 = line(p2)
    if abs(r2) <= 1e-7 * max(1.0, abs(p2[1])) and p2[0] >= dd - eps:
        # second vertex sits on l_D to the right of D: recurse past D
        tail = [(dd, f(dd))] + pts[2:]
        return [dd] + _zigzag_rec(tail, f, tol)
    k, w = _first_crossing(pts, 2, line, eps)
    if k is not None:
        tail = [(dd, f(dd)), w] + pts[k:]
        return [dd] + _zigzag_rec(tail, f, tol)
    # Configuration not covered by the inductive cases: drop the first
    # interior vertex when the direct segment stays below the graph.
    chord_ok = all(
        f(x) >= y - eps
        for x, y in _chord_samples(pts[0], p2)
    )
    if chord_ok:
        return _zigzag_rec([pts[0]] + pts[2:], f, tol)
    raise NotBelowGraph("polyline configuration not reducible to a zigzag")


def _chord_samples(p, q, n=17):
    return [
        (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
        for t in (k / (n - 1.0) for k in range(n))
    ]


# ---------------------------------------------------------------------------
# Geodesics below a graph
# ---------------------------------------------------------------------------


def _lower_hull(xs, ys):
    """Indices of the lower convex hull of the points (xs[i], ys[i])."""
    hull = []
    for i in range(len(xs)):
        while len(hull) >= 2:
            i1, i2 = hull[-2], hull[-1]
            cross = (xs[i2] - xs[i1]) * (ys[i] - ys[i1]) - (ys[i2] - ys[i1]) * (xs[i] - xs[i1])
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(i)
    return hull


def _newton_tangent_from_point(f, p, t0, eps):
    """Solve f(t) + f'(t)(px - t) = py for the tangency abscissa."""
    d = f.derivative()
    dd = d.derivative()
    t = t0
    for _ in range(100):
        r = f(t) + d(t) * (p[0] - t) - p[1]
        dr = dd(t) * (p[0] - t)
        if dr == 0:
            break
        nt = t - r / dr
        if abs(nt - t) < eps * max(1.0, abs(t)):
            return nt
        t = nt
    return t


def _newton_common_tangent(f, u0, v0, eps):
    """Common tangent line of the graph at two abscissae: solve
    f'(u) = f'(v), f(v) - f(u) = f'(u)(v - u)."""
    d = f.derivative()
    dd = d.derivative()
    u, v = u0, v0
    for _ in range(100):
        r1 = d(u) - d(v)
        r2 = f(v) - f(u) - d(u) * (v - u)
        j11, j12 = dd(u), -dd(v)
        j21 = -dd(u) * (v - u)
        j22 = d(v) - d(u)
        det = j11 * j22 - j12 * j21
        if det == 0:
            break
        du = (r1 * j22 - r2 * j12) / det
        dv = (j11 * r2 - j21 * r1) / det
        u, v = u - du, v - dv
        if abs(du) < eps and abs(dv) < eps:
            break
    return u, v


def geodesic_below_graph(f: Polynomial, a, b, tol: Tolerances = Tolerances()) -> PiecewiseCurve:
    """Shortest curve from a to b inside the closed region below the graph.

    Straight segment when the chord fits; otherwise the greatest convex
    minorant of the ceiling pinned at the endpoints, snapped to exact
    tangency abscissae by Newton iteration.  Arcs appear only over
    convex-upward stretches.
    """
    a = (float(a[0]), float(a[1]))
    b = (float(b[0]), float(b[1]))
    eps = tol.eps_geom
    for p in (a, b):
        if f(p[0]) - p[1] < -max(eps, 1e-12 * max(1.0, abs(p[1]))):
            raise OutsideRegion(f"endpoint {p} lies above the graph")

    flipped = a[0] > b[0]
    if flipped:
        a, b = b, a
    if f.degree() <= 1 or b[0] - a[0] <= eps:
        curve = PiecewiseCurve([Segment(a, b)])
        return curve.reversed_curve() if flipped else curve

    n = 2048
    xs = np.linspace(a[0], b[0], n)
    ceil = np.asarray(f(xs), dtype=float)
    ceil[0] = min(ceil[0], a[1])
    ceil[-1] = min(ceil[-1], b[1])
    hull = _lower_hull(xs, ceil)

    # contact runs: maximal stretches of grid-adjacent hull vertices
    interior = [i for i in hull if i not in (0, n - 1)]
    runs = []
    for i in interior:
        if runs and i == runs[-1][-1] + 1:
            runs[-1].append(i)
        else:
            runs.append([i])
    # single-sample contacts are widened so the junction solves can anchor
    runs = [r for r in runs if len(r) >= 1]

    if not runs:
        curve = PiecewiseCurve([Segment(a, b)])
        return curve.reversed_curve() if flipped else curve

    a_on_graph = abs(f(a[0]) - a[1]) <= 1e-7 * max(1.0, abs(a[1]))
    b_on_graph = abs(f(b[0]) - b[1]) <= 1e-7 * max(1.0, abs(b[1]))

    # snap each run's endpoints analytically
    bounds = []
    for idx, run in enumerate(runs):
        t_left = float(xs[run[0]])
        t_right = float(xs[run[-1]])
        prev_anchor = a if idx == 0 else None
        next_anchor = b if idx == len(runs) - 1 else None

        if prev_anchor is not None:
            if idx == 0 and a_on_graph and run[0] <= 1:
                t_left = a[0]
            else:
                t_left = _newton_tangent_from_point(f, prev_anchor, t_left, eps)
        if next_anchor is not None:
            if idx == len(runs) - 1 and b_on_graph and run[-1] >= n - 2:
                t_right = b[0]
            else:
                t_right = _newton_tangent_from_point(f, next_anchor, t_right, eps)
        bounds.append([t_left, t_right])

    for j in range(len(runs) - 1):
        u, v = _newton_common_tangent(f, bounds[j][1], bounds[j + 1][0], eps)
        bounds[j][1] = u
        bounds[j + 1][0] = v

    # merge runs that collapsed into each other after snapping
    merged = [bounds[0]]
    for t_l, t_r in bounds[1:]:
        if t_l <= merged[-1][1] + eps:
            merged[-1][1] = max(merged[-1][1], t_r)
        else:
            merged.append([t_l, t_r])
    merged = [(t_l, t_r) for t_l, t_r in merged if t_r - t_l > eps]

    graph = RotatedGraph(f, 0.0)
    pieces = []
    cursor = a
    for t_l, t_r in merged:
        p_l = (t_l, f(t_l))
        if _dist(cursor, p_l) > eps:
            pieces.append(Segment(cursor, p_l))
        pieces.append(GraphArc(graph, Interval(t_l, t_r)))
        cursor = (t_r, f(t_r))
    if _dist(cursor, b) > eps:
        pieces.append(Segment(cursor, b))
    if not pieces:
        pieces = [Segment(a, b)]

    curve = PiecewiseCurve(pieces)
    curve.validate()
    return curve.reversed_curve() if flipped else curve


# ---------------------------------------------------------------------------
# Geodesics inside a type-I region
# ---------------------------------------------------------------------------


def _rubber_band(member, pts, tol, max_iter=200):
    """Shorten a polyline by midpoint moves and shortcuts, staying feasible."""

    def seg_ok(p, q):
        n = max(8, int(_dist(p, q) / 0.01))
        for k in range(1, n):
            t = k / n
            if member((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))) < -tol:
                return False
        return True

    for _ in range(max_iter):
        changed = False
        # shortcut pass
        out = [pts[0]]
        i = 0
        while i < len(pts) - 1:
            j = len(pts) - 1
            while j > i + 1 and not seg_ok(pts[i], pts[j]):
                j -= 1
            if j > i + 1:
                changed = True
            out.append(pts[j])
            i = j
        pts = out
        # midpoint smoothing
        new = [pts[0]]
        for k in range(1, len(pts) - 1):
            mid = (0.5 * (new[-1][0] + pts[k + 1][0]), 0.5 * (new[-1][1] + pts[k + 1][1]))
            cand = mid
            if member(cand) >= -tol and seg_ok(new[-1], cand) and seg_ok(cand, pts[k + 1]):
                if _dist(new[-1], cand) + _dist(cand, pts[k + 1]) < _dist(new[-1], pts[k]) + _dist(
                    pts[k], pts[k + 1]
                ) - 1e-14:
                    new.append(cand)
                    changed = True
                    continue
            new.append(pts[k])
        new.append(pts[-1])
        pts = new
        if not changed:
            break
    return pts


def geodesic_in_region(region, a, b, tol: Tolerances = Tolerances(), grid_n: int = 192) -> PiecewiseCurve:
    """Shortest curve between two points of a closed type-I region.

    Chord when it fits; otherwise a sampled taut string identifies the side
    the curve hugs, and the problem is solved analytically below that side's
    graph in its own frame, then checked against the other sides.
    """
    a = (float(a[0]), float(a[1]))
    b = (float(b[0]), float(b[1]))
    eps = tol.eps_geom
    if not region.contains(a, tol=1e-7) or not region.contains(b, tol=1e-7):
        raise OutsideRegion("geodesic endpoints must lie in the region")

    member = region.membership_floor

    def seg_ok(p, q, n=256):
        for k in range(1, n):
            t = k / n
            if member((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))) < -1e-9:
                return False
        return True

    if seg_ok(a, b):
        return PiecewiseCurve([Segment(a, b)])

    window = region.bbox()
    try:
        path = polygonal_shortest_path(member, a, b, window, OracleConfig(grid_n=grid_n))
    except Unreachable as exc:  # pragma: no cover - depends on sampling
        raise Disconnected(str(exc)) from exc
    pts = _rubber_band(member, list(path.vertices), 1e-9)

    # which non-synthetic sides does the taut polyline hug?
    diam = math.hypot(window[1] - window[0], window[3] - window[2])
    near = 4.0 * diam / grid_n
    touched = []
    for side in region.sides:
        if side.synthetic:
            continue
        hits = sum(1 for p in pts[1:-1] if abs(side.graph.membership(p)) <= near)
        if hits:
            touched.append((hits, side))
    if not touched:
        return PiecewiseCurve([Segment(a, b)])

    touched.sort(key=lambda kv: -kv[0])
    side = touched[0][1]
    g = side.graph
    fa, fb = g.to_frame(a), g.to_frame(b)
    frame_curve = geodesic_below_graph(g.poly, fa, fb, tol)

    pieces = []
    for piece in frame_curve.pieces:
        if isinstance(piece, Segment):
            pieces.append(Segment(g.from_frame(*piece.p), g.from_frame(*piece.q)))
        else:
            pieces.append(GraphArc(g, piece.interval, piece.reversed))
    curve = PiecewiseCurve(pieces)
    curve.validate()

    for p in curve.sample(64):
        if member(p) < -1e-6:
            raise OutsideRegion(
                "geodesic interacts with more than one curved side; not supported"
            )
    return curve
