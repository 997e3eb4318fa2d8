"""Planar subdivision of a window by segments and rotated-graph arcs.

Edges stay analytic (a RotatedGraph plus a parameter interval); geometry
questions that need only topology (angular ordering at vertices, face
traversal, containment) are answered on cached polyline samplings of the
edges.  Faces with holes are supported: a negative-area cycle is attached
to the smallest positive cycle containing it.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field

from .poly import (
    OVERLAP_PARTIAL,
    Interval,
    Polynomial,
    RotatedGraph,
    graph_intersection_params,
    isolate_real_roots,
)


def _dist(p, q):
    return math.hypot(p[0] - q[0], p[1] - q[1])


@dataclass
class Node:
    id: int
    point: tuple


@dataclass
class Edge:
    id: int
    graph: RotatedGraph
    interval: Interval
    n_lo: int
    n_hi: int
    synthetic: bool = False
    polyline: list = field(default_factory=list)

    def other(self, node_id):
        return self.n_hi if node_id == self.n_lo else self.n_lo


@dataclass
class Face:
    id: int
    boundary: list  # [(edge_id, +1 | -1), ...] outer cycle, CCW
    holes: list  # list of cycles, each [(edge_id, dir), ...]
    polygon: list  # polyline of the outer cycle
    hole_polygons: list
    rep_point: tuple
    area: float

    def contains(self, point, tol: float = 0.0) -> bool:
        if not _point_in_polygon(point, self.polygon):
            return False
        return all(not _point_in_polygon(point, h) for h in self.hole_polygons)


def _point_in_polygon(p, polygon) -> bool:
    """Even-odd crossing test against a closed polyline."""
    x, y = p
    inside = False
    n = len(polygon)
    for i in range(n):
        x0, y0 = polygon[i]
        x1, y1 = polygon[(i + 1) % n]
        if (y0 > y) != (y1 > y):
            xc = x0 + (y - y0) / (y1 - y0) * (x1 - x0)
            if xc > x:
                inside = not inside
    return inside


def _polygon_area(polygon) -> float:
    s = 0.0
    n = len(polygon)
    for i in range(n):
        x0, y0 = polygon[i]
        x1, y1 = polygon[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


class Subdivision:
    """A planar subdivision of an axis-aligned window."""

    def __init__(self, window, tol: float = 1e-7, with_frame: bool = True):
        self.window = tuple(float(v) for v in window)  # xmin, xmax, ymin, ymax
        xmin, xmax, ymin, ymax = self.window
        self.diam = math.hypot(xmax - xmin, ymax - ymin)
        self.tol = tol * max(1.0, self.diam)
        self.sample_step = self.diam / 512.0
        self.nodes: list[Node] = []
        self.edges: dict[int, Edge] = {}
        self._next_edge = 0
        self._node_hash: dict[tuple, list] = {}
        if with_frame:
            corners = [(xmin, ymin), (xmax, ymin), (xmax, ymax), (xmin, ymax)]
            for p, q in zip(corners, corners[1:] + corners[:1]):
                self.insert_segment(p, q, synthetic=True)

    # -- nodes --------------------------------------------------------------

    def _hash_key(self, p):
        s = max(self.tol, 1e-12)
        return (round(p[0] / s), round(p[1] / s))

    def add_node(self, point) -> int:
        point = (float(point[0]), float(point[1]))
        kx, ky = self._hash_key(point)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for nid in self._node_hash.get((kx + dx, ky + dy), ()):
                    if _dist(self.nodes[nid].point, point) <= self.tol:
                        return nid
        nid = len(self.nodes)
        self.nodes.append(Node(nid, point))
        self._node_hash.setdefault((kx, ky), []).append(nid)
        return nid

    # -- edges --------------------------------------------------------------

    def _polylinize(self, graph, t0, t1):
        d = graph.poly.derivative()
        span = t1 - t0
        slope = 1.0
        for k in range(9):
            slope = max(slope, abs(d(t0 + span * k / 8.0)))
        n = int(min(2048, max(8, math.ceil(span * math.hypot(1.0, slope) / self.sample_step))))
        pts = [graph.parametrize(t0 + span * k / n) for k in range(n + 1)]
        return pts

    def _add_edge_raw(self, graph, t0, t1, synthetic) -> int:
        if t1 - t0 <= 1e-12:
            return -1
        p_lo = graph.parametrize(t0)
        p_hi = graph.parametrize(t1)
        n_lo = self.add_node(p_lo)
        n_hi = self.add_node(p_hi)
        if n_lo == n_hi and _dist(p_lo, p_hi) <= self.tol:
            return -1
        eid = self._next_edge
        self._next_edge += 1
        poly = self._polylinize(graph, t0, t1)
        poly[0] = self.nodes[n_lo].point
        poly[-1] = self.nodes[n_hi].point
        self.edges[eid] = Edge(eid, graph, Interval(t0, t1), n_lo, n_hi, synthetic, poly)
        return eid

    def _split_edge(self, eid: int, params: list):
        edge = self.edges[eid]
        cuts = sorted(
            t
            for t in params
            if edge.interval.lo + 1e-12 < t < edge.interval.hi - 1e-12
        )
        if not cuts:
            return
        del self.edges[eid]
        ts = [edge.interval.lo, *cuts, edge.interval.hi]
        for t0, t1 in zip(ts, ts[1:]):
            self._add_edge_raw(edge.graph, t0, t1, edge.synthetic)

    def insert_segment(self, p, q, synthetic: bool = False):
        from .poly import line_through

        g, tp, tq = line_through(p, q)
        self.insert_chain(g, min(tp, tq), max(tp, tq), synthetic=synthetic)

    def insert_chain(self, graph: RotatedGraph, t0: float, t1: float, synthetic: bool = False):
        """Insert the arc of ``graph`` over [t0, t1], splitting existing
        edges and the new chain at every intersection."""
        if t1 - t0 <= 1e-12:
            return
        my_cuts = []
        pending_splits = []  # (edge_id, [params on that edge])
        for eid, edge in list(self.edges.items()):
            res = graph_intersection_params(graph, edge.graph, Interval(t0, t1))
            if res is OVERLAP_PARTIAL:
                # co-graph overlap: cut both at each other's endpoints
                u0 = edge.graph.to_frame(graph.parametrize(t0))[0]
                u1 = edge.graph.to_frame(graph.parametrize(t1))[0]
                pending_splits.append((eid, [u0, u1]))
                v0 = graph.to_frame(edge.graph.parametrize(edge.interval.lo))[0]
                v1 = graph.to_frame(edge.graph.parametrize(edge.interval.hi))[0]
                my_cuts.extend([v0, v1])
                continue
            hits = []
            for t in res:
                p = graph.parametrize(t)
                u = edge.graph.to_frame(p)[0]
                if edge.interval.contains(u, tol=1e-9):
                    hits.append(u)
                    my_cuts.append(t)
            if hits:
                pending_splits.append((eid, hits))
        for eid, params in pending_splits:
            if eid in self.edges:
                self._split_edge(eid, params)

        ts = sorted({t0, t1, *(t for t in my_cuts if t0 < t < t1)})
        for a, b in zip(ts, ts[1:]):
            if b - a <= 1e-12:
                continue
            if self._duplicate_exists(graph, a, b):
                continue
            self._add_edge_raw(graph, a, b, synthetic)

    def _duplicate_exists(self, graph, a, b) -> bool:
        mid = graph.parametrize(0.5 * (a + b))
        p_a = graph.parametrize(a)
        p_b = graph.parametrize(b)
        for edge in self.edges.values():
            res = graph_intersection_params(graph, edge.graph, Interval(a, b))
            if res is not OVERLAP_PARTIAL:
                continue
            u_mid = edge.graph.to_frame(mid)[0]
            u_a = edge.graph.to_frame(p_a)[0]
            u_b = edge.graph.to_frame(p_b)[0]
            lo, hi = min(u_a, u_b), max(u_a, u_b)
            if edge.interval.contains(u_mid, tol=1e-9) and edge.interval.lo <= lo + 1e-9 and edge.interval.hi >= hi - 1e-9:
                return True
        return False

    # -- faces ----------------------------------------------------------------

    def _half_edges(self):
        """Directed half-edges with departure angles, grouped per node."""
        outgoing = {}  # node -> list of (angle, (eid, dir))
        for eid, edge in self.edges.items():
            poly = edge.polyline
            ang_fwd = math.atan2(poly[1][1] - poly[0][1], poly[1][0] - poly[0][0])
            ang_bwd = math.atan2(poly[-2][1] - poly[-1][1], poly[-2][0] - poly[-1][0])
            outgoing.setdefault(edge.n_lo, []).append((ang_fwd, (eid, +1)))
            outgoing.setdefault(edge.n_hi, []).append((ang_bwd, (eid, -1)))
        for lst in outgoing.values():
            lst.sort(key=lambda it: (it[0], it[1]))
        return outgoing

    def faces(self) -> list:
        """All bounded faces of the subdivision (holes attached)."""
        outgoing = self._half_edges()
        next_he = {}
        for node, lst in outgoing.items():
            angles = [a for a, _ in lst]
            for ang, he in lst:
                # arriving along the reverse of `he`'s twin: find the
                # outgoing half-edge immediately clockwise of the reversed
                # arrival direction
                eid, direction = he
                edge = self.edges[eid]
                arrive_node = edge.n_hi if direction > 0 else edge.n_lo
                arr_lst = outgoing[arrive_node]
                arr_angles = [a for a, _ in arr_lst]
                poly = edge.polyline
                if direction > 0:
                    back = math.atan2(poly[-2][1] - poly[-1][1], poly[-2][0] - poly[-1][0])
                else:
                    back = math.atan2(poly[1][1] - poly[0][1], poly[1][0] - poly[0][0])
                idx = bisect_left(arr_angles, back - 1e-13)
                # step clockwise (previous entry, cyclic); skip the twin
                j = (idx - 1) % len(arr_lst)
                cand = arr_lst[j][1]
                if cand == (eid, -direction) and len(arr_lst) > 1:
                    j = (j - 1) % len(arr_lst)
                    cand = arr_lst[j][1]
                next_he[he] = cand

        visited = set()
        cycles = []
        for start in sorted(next_he):
            if start in visited:
                continue
            cyc = []
            he = start
            for _ in range(len(next_he) + 1):
                cyc.append(he)
                visited.add(he)
                he = next_he[he]
                if he == start:
                    break
            cycles.append(cyc)

        # polygonalize cycles, compute signed areas
        recs = []
        for cyc in cycles:
            pts = []
            for eid, direction in cyc:
                poly = self.edges[eid].polyline
                seq = poly if direction > 0 else poly[::-1]
                pts.extend(seq[:-1])
            recs.append((cyc, pts, _polygon_area(pts)))

        positive = [r for r in recs if r[2] > 1e-14]
        negative = [r for r in recs if r[2] <= 1e-14]

        faces = []
        for fid, (cyc, pts, area) in enumerate(
            sorted(positive, key=lambda r: (-r[2], r[0]))
        ):
            faces.append(Face(fid, cyc, [], pts, [], None, area))

        # attach hole cycles to the smallest positive cycle containing them
        for cyc, pts, area in negative:
            probe = pts[0]
            owner = None
            for f in sorted(faces, key=lambda f: f.area):
                if _point_in_polygon(probe, f.polygon) and not any(
                    _point_in_polygon(probe, h) for h in f.hole_polygons
                ):
                    owner = f
                    break
            if owner is not None:
                owner.holes.append(cyc)
                owner.hole_polygons.append(pts)
            # cycles not inside any positive cycle bound the window exterior

        for f in faces:
            f.rep_point = self._rep_point(f)
        return faces

    def _rep_point(self, face: Face):
        ys = sorted({p[1] for p in face.polygon})
        seeds = [0.5 * (a + b) for a, b in zip(ys, ys[1:]) if b - a > 4e-9]
        seeds.sort(key=lambda y: -min(y - ys[0], ys[-1] - y))
        rings = [face.polygon] + face.hole_polygons
        for y in seeds[:64]:
            xs = []
            for ring in rings:
                n = len(ring)
                for i in range(n):
                    x0, y0 = ring[i]
                    x1, y1 = ring[(i + 1) % n]
                    if (y0 > y) != (y1 > y):
                        xs.append(x0 + (y - y0) / (y1 - y0) * (x1 - x0))
            xs.sort()
            best = None
            for a, b in zip(xs[::2], xs[1::2]):
                if b - a > 4e-9 and (best is None or b - a > best[1] - best[0]):
                    best = (a, b)
            if best is None:
                continue
            cand = (0.5 * (best[0] + best[1]), y)
            if face.contains(cand):
                return cand
        # tiny sliver: fall back to nudging off the boundary midpoint
        mid = face.polygon[len(face.polygon) // 2]
        return mid


def window_chains(graph: RotatedGraph, window) -> list:
    """Parameter intervals over which the rotated graph lies inside the
    (closed) window rectangle."""
    xmin, xmax, ymin, ymax = window
    radius = max(math.hypot(x, y) for x in (xmin, xmax) for y in (ymin, ymax)) + 1.0
    search = Interval(-radius, radius)

    from .poly import line_through

    boundary = [
        line_through((xmin, ymin), (xmax, ymin))[0],
        line_through((xmax, ymin), (xmax, ymax))[0],
        line_through((xmax, ymax), (xmin, ymax))[0],
        line_through((xmin, ymax), (xmin, ymin))[0],
    ]
    cuts = {search.lo, search.hi}
    for line in boundary:
        res = graph_intersection_params(graph, line, search)
        if res is OVERLAP_PARTIAL:
            continue
        cuts.update(res)
    ts = sorted(cuts)
    chains = []
    eps = 1e-9
    for a, b in zip(ts, ts[1:]):
        if b - a <= 1e-12:
            continue
        x, y = graph.parametrize(0.5 * (a + b))
        if xmin - eps <= x <= xmax + eps and ymin - eps <= y <= ymax + eps:
            if chains and abs(chains[-1][1] - a) <= 1e-12:
                chains[-1][1] = b
            else:
                chains.append([a, b])
    return [(a, b) for a, b in chains]
