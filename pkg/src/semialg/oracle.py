"""Brute-force length references: grid shortest paths and arc-length quadrature.

These are the independent oracles the analytic geodesics are checked
against.  The path search knows nothing about tangency or graph structure:
it only ever asks a membership predicate whether points are inside.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import OutsideRegion, Unreachable
from .poly import Interval, Polynomial

RESOLUTION_FACTOR = 4.0  # resolution_bound = 4 * window diameter / grid_n


@dataclass(frozen=True)
class OracleConfig:
    grid_n: int = 192
    neighbor_radius: int = 3
    tol: float = 1e-9

    def __post_init__(self):
        if self.grid_n < 32:
            raise ValueError("grid_n must be >= 32")
        if self.neighbor_radius < 2:
            raise ValueError("neighbor_radius must be >= 2")


@dataclass
class OraclePath:
    vertices: list
    length: float
    resolution_bound: float


def adaptive_simpson(func, lo: float, hi: float, tol: float) -> float:
    """Adaptive Simpson quadrature with absolute tolerance ``tol``."""
    if hi <= lo:
        return 0.0

    def simpson(a, fa, b, fb, m, fm):
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(a, fa, b, fb, m, fm, whole, eps, depth):
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm, frm = func(lm), func(rm)
        left = simpson(a, fa, m, fm, lm, flm)
        right = simpson(m, fm, b, fb, rm, frm)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return recurse(a, fa, m, fm, lm, flm, left, 0.5 * eps, depth - 1) + recurse(
            m, fm, b, fb, rm, frm, right, 0.5 * eps, depth - 1
        )

    mid = 0.5 * (lo + hi)
    f_lo, f_hi, f_mid = func(lo), func(hi), func(mid)
    whole = simpson(lo, f_lo, hi, f_hi, mid, f_mid)
    return recurse(lo, f_lo, hi, f_hi, mid, f_mid, whole, tol, 48)


def arc_length_quadrature(f: Polynomial, interval: Interval, tol: float = 1e-10) -> float:
    """Length of the graph of f over the interval: integral of sqrt(1+f'^2)."""
    d = f.derivative()
    return adaptive_simpson(lambda x: math.hypot(1.0, d(x)), interval.lo, interval.hi, tol)


def _directions(radius: int) -> list:
    dirs = []
    for dx in range(-radius, radius + 1):
        for dy in range(-radius, radius + 1):
            if (dx, dy) == (0, 0):
                continue
            if math.gcd(abs(dx), abs(dy)) == 1:
                dirs.append((dx, dy))
    return dirs


def _segment_inside(member, p, q, tol, checks=8):
    for k in range(1, checks + 1):
        t = k / (checks + 1.0)
        if member((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))) < -tol:
            return False
    return True


def polygonal_shortest_path(member, a, b, window, cfg: OracleConfig = OracleConfig()) -> OraclePath:
    """Shortest polygonal path from a to b inside {member >= -tol}.

    ``member`` must accept numpy coordinate arrays as well as single points.
    ``window`` is (xmin, xmax, ymin, ymax).  Grid Dijkstra over samples with
    edges whose connecting segments pass 8 interior membership checkpoints,
    followed by a greedy shortcut pass that removes angular quantization
    error; the remaining gap is covered by resolution_bound.
    """
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import dijkstra

    xmin, xmax, ymin, ymax = window
    n = cfg.grid_n
    tol = cfg.tol
    if member(a) < -tol or member(b) < -tol:
        raise OutsideRegion("oracle endpoints must lie in the region")

    xs = np.linspace(xmin, xmax, n)
    ys = np.linspace(ymin, ymax, n)
    hx = xs[1] - xs[0]
    hy = ys[1] - ys[0]
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    feasible = np.asarray(member((gx, gy))) >= -tol

    node_id = -np.ones((n, n), dtype=np.int64)
    fi, fj = np.nonzero(feasible)
    node_id[fi, fj] = np.arange(fi.size)
    n_nodes = fi.size
    if n_nodes == 0:
        raise Unreachable("no feasible grid samples in the window")

    rows, cols, weights = [], [], []
    checks = np.arange(1, 9) / 9.0
    for dx, dy in _directions(cfg.neighbor_radius):
        if dx < 0 or (dx == 0 and dy < 0):
            continue  # undirected; keep one orientation
        si = slice(max(0, -dx), n - max(0, dx))
        sj = slice(max(0, -dy), n - max(0, dy))
        ti = slice(max(0, dx), n - max(0, -dx))
        tj = slice(max(0, dy), n - max(0, -dy))
        ok = feasible[si, sj] & feasible[ti, tj]
        if not ok.any():
            continue
        x0, y0 = gx[si, sj][ok], gy[si, sj][ok]
        ex, ey = dx * hx, dy * hy
        inside = np.ones(x0.shape, dtype=bool)
        for t in checks:
            inside &= np.asarray(member((x0 + t * ex, y0 + t * ey))) >= -tol
            if not inside.any():
                break
        if not inside.any():
            continue
        src = node_id[si, sj][ok][inside]
        dst = node_id[ti, tj][ok][inside]
        w = math.hypot(ex, ey)
        rows.append(src)
        cols.append(dst)
        weights.append(np.full(src.shape, w))

    # endpoints as exact extra nodes, linked to nearby grid samples
    extra = [tuple(map(float, a)), tuple(map(float, b))]
    ex_rows, ex_cols, ex_w = [], [], []
    reach = cfg.neighbor_radius + 1
    for e_idx, p in enumerate(extra):
        i0 = int(round((p[0] - xmin) / hx))
        j0 = int(round((p[1] - ymin) / hy))
        for di in range(-reach, reach + 1):
            for dj in range(-reach, reach + 1):
                i, j = i0 + di, j0 + dj
                if 0 <= i < n and 0 <= j < n and feasible[i, j]:
                    q = (xs[i], ys[j])
                    if _segment_inside(member, p, q, tol):
                        ex_rows.append(n_nodes + e_idx)
                        ex_cols.append(node_id[i, j])
                        ex_w.append(math.hypot(p[0] - q[0], p[1] - q[1]))
    if _segment_inside(member, a, b, tol):
        ex_rows.append(n_nodes)
        ex_cols.append(n_nodes + 1)
        ex_w.append(math.hypot(a[0] - b[0], a[1] - b[1]))

    total = n_nodes + 2
    row = np.concatenate([*(rows or [np.empty(0, np.int64)]), np.asarray(ex_rows, np.int64)])
    col = np.concatenate([*(cols or [np.empty(0, np.int64)]), np.asarray(ex_cols, np.int64)])
    wgt = np.concatenate([*(weights or [np.empty(0)]), np.asarray(ex_w)])
    graph = coo_matrix((wgt, (row, col)), shape=(total, total))

    dist, pred = dijkstra(
        graph, directed=False, indices=n_nodes, return_predecessors=True
    )
    if not np.isfinite(dist[n_nodes + 1]):
        raise Unreachable("endpoints are not connected at this resolution")

    path_ids = []
    cur = n_nodes + 1
    while cur != n_nodes:
        path_ids.append(cur)
        cur = pred[cur]
    path_ids.append(n_nodes)
    path_ids.reverse()

    coord = {n_nodes: extra[0], n_nodes + 1: extra[1]}
    pts = []
    for pid in path_ids:
        if pid in coord:
            pts.append(coord[pid])
        else:
            i, j = fi[pid], fj[pid]
            pts.append((float(xs[i]), float(ys[j])))

    pts = _shortcut(member, pts, tol, max(hx, hy))
    length = sum(math.hypot(p[0] - q[0], p[1] - q[1]) for p, q in zip(pts, pts[1:]))
    diam = math.hypot(xmax - xmin, ymax - ymin)
    return OraclePath(pts, length, RESOLUTION_FACTOR * diam / n)


def _shortcut(member, pts, tol, h):
    """Greedy string pulling: replace runs of vertices by feasible chords."""
    for _ in range(3):
        out = [pts[0]]
        i = 0
        changed = False
        while i < len(pts) - 1:
            j = len(pts) - 1
            while j > i + 1:
                p, q = pts[i], pts[j]
                n_checks = max(8, int(math.hypot(q[0] - p[0], q[1] - p[1]) / max(h, 1e-12)) * 2)
                if _segment_inside(member, p, q, tol, checks=n_checks):
                    changed = True
                    break
                j -= 1
            out.append(pts[j])
            i = j
        pts = out
        if not changed:
            break
    return pts
