"""Cell decompositions of polynomial half-planes, open sets, and curves.

The brick pattern for a closed half-plane: graph 0-cells at integer
abscissae, strict inflections, and local minima; vertical walls below each;
per column, horizontal rungs one spacing apart below the column's top
minimum.  Open variants replace graph-adjacent 2-cells by stacked copies of
the graph edge at depths spacing/2^n.  Everything is realized inside a
finite window: the complex is truncated at the lowest rung row that fits,
and cells created by the truncation are flagged synthetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegenerateInterval, EmptyWindow, WindowMismatch
from .features import critical_profile
from .poly import Interval, Polynomial, RotatedGraph, isolate_real_roots, line_through
from .subdivision import Subdivision, _point_in_polygon

DEFAULT_RESOLUTION = 1e-4


def _dist(p, q):
    return math.hypot(p[0] - q[0], p[1] - q[1])


@dataclass
class VertexCell:
    id: str
    point: tuple
    synthetic: bool = False
    dim: int = 0


@dataclass
class EdgeCell:
    id: str
    graph: RotatedGraph
    interval: Interval
    endpoints: tuple  # (vertex id at lo, vertex id at hi); None for open ends
    synthetic: bool = False
    dim: int = 1
    _polyline: list = field(default_factory=list, repr=False)

    def polyline(self):
        if not self._polyline:
            d = self.graph.poly.derivative()
            span = self.interval.span
            slope = max((abs(d(self.interval.lo + span * k / 8.0)) for k in range(9)), default=0.0)
            n = int(min(1024, max(8, math.ceil(span * math.hypot(1.0, slope) / 0.01))))
            self._polyline = [
                self.graph.parametrize(self.interval.lo + span * k / n) for k in range(n + 1)
            ]
        return self._polyline

    def bbox(self):
        pts = self.polyline()
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return min(xs), max(xs), min(ys), max(ys)

    def distance_to(self, point) -> float:
        pts = self.polyline()
        k = min(range(len(pts)), key=lambda i: _dist(point, pts[i]))
        best = _dist(point, pts[k])
        lo, hi = self.interval.lo, self.interval.hi
        span = hi - lo
        if span <= 0:
            return best
        t0 = lo + span * max(0, k - 1) / (len(pts) - 1)
        t1 = lo + span * min(len(pts) - 1, k + 1) / (len(pts) - 1)
        for _ in range(50):
            m1 = t0 + (t1 - t0) / 3.0
            m2 = t1 - (t1 - t0) / 3.0
            if _dist(point, self.graph.parametrize(m1)) <= _dist(point, self.graph.parametrize(m2)):
                t1 = m2
            else:
                t0 = m1
        return min(best, _dist(point, self.graph.parametrize(0.5 * (t0 + t1))))

    @property
    def is_segment(self) -> bool:
        return self.graph.poly.degree() <= 0


@dataclass
class FaceCell:
    id: str
    boundary: list  # edge cell ids
    polygon: list  # closed polyline of the outer cycle
    hole_polygons: list = field(default_factory=list)
    rep_point: tuple = None
    synthetic: bool = False
    dim: int = 2

    def contains(self, point) -> bool:
        if not _point_in_polygon(point, self.polygon):
            return False
        return all(not _point_in_polygon(point, h) for h in self.hole_polygons)

    def bbox(self):
        xs = [p[0] for p in self.polygon]
        ys = [p[1] for p in self.polygon]
        return min(xs), max(xs), min(ys), max(ys)


@dataclass
class CellComplex:
    """0-/1-/2-cells with incidence, realized inside a finite window."""

    window: tuple  # (xmin, xmax, ymin, ymax)
    cells: list = field(default_factory=list)
    incidence: dict = field(default_factory=dict)

    def __post_init__(self):
        self._by_id = {c.id: c for c in self.cells}
        self._counts = [0, 0, 0]
        for c in self.cells:
            self._counts[c.dim] += 1

    def _register(self, cell):
        self.cells.append(cell)
        self._by_id[cell.id] = cell
        self._counts[cell.dim] += 1
        return cell

    def add_vertex(self, point, synthetic=False, tol=1e-9) -> str:
        for c in self.cells:
            if c.dim == 0 and _dist(c.point, point) <= tol:
                return c.id
        cid = f"v{self._counts[0]}"
        self._register(VertexCell(cid, (float(point[0]), float(point[1])), synthetic))
        return cid

    def add_edge(self, graph, interval, endpoints=(None, None), synthetic=False) -> str:
        cid = f"e{self._counts[1]}"
        self._register(EdgeCell(cid, graph, interval, tuple(endpoints), synthetic))
        self.incidence[cid] = tuple(e for e in endpoints if e is not None)
        return cid

    def add_face(self, boundary, polygon, holes=(), rep_point=None, synthetic=False) -> str:
        cid = f"f{self._counts[2]}"
        self._register(FaceCell(cid, list(boundary), list(polygon), list(holes), rep_point, synthetic))
        self.incidence[cid] = tuple(boundary)
        return cid

    def get(self, cid):
        return self._by_id[cid]

    def zero_cells(self, include_synthetic=True):
        return [c for c in self.cells if c.dim == 0 and (include_synthetic or not c.synthetic)]

    def one_cells(self, include_synthetic=True):
        return [c for c in self.cells if c.dim == 1 and (include_synthetic or not c.synthetic)]

    def two_cells(self, include_synthetic=True):
        return [c for c in self.cells if c.dim == 2 and (include_synthetic or not c.synthetic)]

    def locate(self, point, tol: float = 1e-7):
        """Cell containing the point; near-boundary points go to the
        lower-dimensional cell.  None when the point is uncovered."""
        best_v, dv = None, tol
        for c in self.cells:
            if c.dim == 0:
                d = _dist(c.point, point)
                if d <= dv:
                    best_v, dv = c.id, d
        if best_v is not None:
            return best_v
        best_e, de = None, tol
        for c in self.cells:
            if c.dim == 1:
                x0, x1, y0, y1 = c.bbox()
                if not (x0 - tol <= point[0] <= x1 + tol and y0 - tol <= point[1] <= y1 + tol):
                    continue
                d = c.distance_to(point)
                if d <= de:
                    best_e, de = c.id, d
        if best_e is not None:
            return best_e
        for c in self.cells:
            if c.dim == 2:
                x0, x1, y0, y1 = c.bbox()
                if x0 <= point[0] <= x1 and y0 <= point[1] <= y1 and c.contains(point):
                    return c.id
        return None

    def covers(self, point, tol: float = 1e-7) -> bool:
        return self.locate(point, tol) is not None


# ---------------------------------------------------------------------------
# Column machinery shared by the closed and open half-plane decompositions
# ---------------------------------------------------------------------------


def _column_layout(f: Polynomial, window, spacing, tol):
    xmin, xmax, ymin, ymax = window
    xs = {float(xmin), float(xmax)}
    xs.update(float(n) for n in range(math.ceil(xmin), math.floor(xmax) + 1))
    profile = critical_profile(f, Interval(xmin, xmax), tol)
    xs.update(profile.strict_inflections)
    xs.update(profile.local_minima)
    for level in (ymin, ymax):
        shifted = f.shift_down(level)
        if not shifted.is_zero() and shifted.degree() >= 1:
            xs.update(isolate_real_roots(shifted, Interval(xmin, xmax), tol).values())
    borders = []
    for x in sorted(xs):
        if not borders or x - borders[-1] > max(tol, 1e-9):
            borders.append(x)

    columns = []
    for lo, hi in zip(borders, borders[1:]):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm <= ymin + 1e-12:
            continue
        graph_top = fm <= ymax + 1e-12
        m_top = min(f(v) for v in (lo, hi, *[z for z in profile.f_prime_zeros if lo < z < hi]))
        m_c = min(m_top, ymax) if graph_top else ymax
        k_max = int(math.floor((m_c - ymin) / spacing + 1e-9))
        levels = [m_c - k * spacing for k in range(1, k_max + 1)]
        columns.append(
            {
                "lo": lo,
                "hi": hi,
                "graph": graph_top,
                "levels": levels,
                "bottom": levels[-1] if levels else ymin,
                "closed_at_window": not levels,
            }
        )
    if not columns:
        raise EmptyWindow("window does not meet the region below the graph")
    return columns, profile


def _linear_rows(f: Polynomial, column, spacing, ymin):
    """Rung depths for deg <= 1: parallel transports of the graph itself."""
    m_top = min(f(column["lo"]), f(column["hi"]))
    k_max = int(math.floor((m_top - ymin) / spacing + 1e-9))
    return [k * spacing for k in range(1, k_max + 1)]


def _horizontal_edge(y, x0, x1):
    g, t0, t1 = line_through((x0, y), (x1, y))
    return g, Interval(min(t0, t1), max(t0, t1))


def _vertical_edge(x, y0, y1):
    g, t0, t1 = line_through((x, min(y0, y1)), (x, max(y0, y1)))
    return g, Interval(min(t0, t1), max(t0, t1))


class _HalfPlaneBuilder:
    """Builds brick (closed) and stacked (open) half-plane decompositions."""

    def __init__(self, f, window, spacing, tol, open_set, resolution):
        self.f = f
        self.window = tuple(float(v) for v in window)
        self.spacing = spacing
        self.tol = tol
        self.open_set = open_set
        self.resolution = resolution
        self.linear = f.degree() <= 1
        self.columns, self.profile = _column_layout(f, self.window, spacing, tol)
        self.copy_depths = []
        if open_set:
            n_copies = max(1, int(math.floor(math.log2(spacing / resolution))) - 1)
            self.copy_depths = [spacing / 2**n for n in range(1, n_copies + 1)]
        self.cc = CellComplex(self.window)
        self.wall_pieces = {}  # border x -> list of (y_lo, y_hi, edge_id)

    # boundary ordinates of a column, top to bottom (excluding the graph)
    def _column_cuts(self, col):
        xmin, xmax, ymin, ymax = self.window
        cuts = []  # (kind, payload) kind in {graph_copy, level, window_top}
        if col["graph"]:
            if self.open_set:
                for d in sorted(self.copy_depths):  # shallowest first
                    cuts.append(("copy", d))
        else:
            cuts.append(("window_top", ymax))
        if self.linear and col["graph"]:
            for d in _linear_rows(self.f, col, self.spacing, ymin):
                cuts.append(("copy_row", d))
        else:
            for lv in col["levels"]:
                cuts.append(("level", lv))
        if col["closed_at_window"] or (self.linear and col["graph"] and not _linear_rows(self.f, col, self.spacing, ymin)):
            cuts.append(("window_bottom", ymin))
        return cuts

    def _wall_y(self, x, cut):
        kind, val = cut
        if kind in ("copy", "copy_row"):
            return self.f(x) - val
        return val

    def build(self) -> CellComplex:
        f, cc = self.f, self.cc
        xmin, xmax, ymin, ymax = self.window

        # -- walls ---------------------------------------------------------
        border_xs = sorted({c["lo"] for c in self.columns} | {c["hi"] for c in self.columns})
        for x in border_xs:
            adj = [c for c in self.columns if abs(c["lo"] - x) <= 1e-12 or abs(c["hi"] - x) <= 1e-12]
            entries = []  # (y, synthetic, is_graph_vertex)
            graph_adj = any(c["graph"] for c in adj)
            if graph_adj and not self.open_set:
                entries.append((min(f(x), ymax), abs(f(x) - min(f(x), ymax)) > 1e-9, True))
            if not graph_adj:
                entries.append((ymax, True, False))
            seen_cuts = set()
            for c in adj:
                for cut in self._column_cuts(c):
                    y = self._wall_y(x, cut)
                    key = round(y, 12)
                    if key in seen_cuts:
                        continue
                    seen_cuts.add(key)
                    synthetic = cut[0] in ("window_bottom",)
                    entries.append((y, synthetic, False))
            entries.sort(key=lambda e: -e[0])
            dedup = []
            for y, syn, is_graph in entries:
                if dedup and abs(dedup[-1][0] - y) <= 1e-9:
                    continue
                dedup.append((y, syn, is_graph))
            ids = []
            for y, syn, _ in dedup:
                ids.append((y, cc.add_vertex((x, y), synthetic=syn)))
            pieces = []
            for (y0, v0), (y1, v1) in zip(ids, ids[1:]):
                g, iv = _vertical_edge(x, y1, y0)
                eid = cc.add_edge(g, iv, (v1, v0))
                pieces.append((y1, y0, eid))
            if self.open_set and graph_adj:
                # synthetic stub reaching toward the excluded graph point
                y_top = ids[0][0]
                if f(x) - y_top > 1e-12:
                    g, iv = _vertical_edge(x, y_top, f(x))
                    eid = cc.add_edge(g, iv, (ids[0][1], None), synthetic=True)
                    pieces.append((y_top, f(x), eid))
            self.wall_pieces[x] = pieces

        # -- per-column horizontals and faces -------------------------------
        for col in self.columns:
            lo, hi = col["lo"], col["hi"]
            mid = 0.5 * (lo + hi)
            cuts = self._column_cuts(col)
            boundaries = []  # (edge_id, y_at(x) callable, synthetic)
            if col["graph"] and not self.open_set:
                graph = RotatedGraph(f, 0.0)
                eid = cc.add_edge(
                    graph,
                    Interval(lo, hi),
                    (self._node(lo, f(lo)), self._node(hi, f(hi))),
                )
                boundaries.append((eid, f, False))
            elif col["graph"] and self.open_set:
                boundaries.append((None, f, True))  # excluded graph as virtual top
            for cut in cuts:
                kind, val = cut
                synthetic = kind in ("window_top", "window_bottom")
                if kind in ("copy", "copy_row"):
                    shifted = RotatedGraph(f.shift_down(val), 0.0)
                    eid = cc.add_edge(
                        shifted,
                        Interval(lo, hi),
                        (self._node(lo, f(lo) - val), self._node(hi, f(hi) - val)),
                    )
                    boundaries.append((eid, (lambda d: lambda x: f(x) - d)(val), False))
                else:
                    g, iv = _horizontal_edge(val, lo, hi)
                    eid = cc.add_edge(
                        g,
                        iv,
                        (self._node(lo, val), self._node(hi, val)),
                        synthetic=synthetic,
                    )
                    boundaries.append((eid, (lambda v: lambda x: v)(val), synthetic))

            for (e_top, y_top, syn_top), (e_bot, y_bot, syn_bot) in zip(boundaries, boundaries[1:]):
                samples = 24
                xs = [lo + (hi - lo) * k / samples for k in range(samples + 1)]
                poly = [(x, y_top(x)) for x in xs] + [(x, y_bot(x)) for x in reversed(xs)]
                walls = self._walls_between(lo, hi, y_bot, y_top)
                boundary = [e for e in (e_top, e_bot) if e is not None] + walls
                rep = (mid, 0.5 * (y_top(mid) + y_bot(mid)))
                cc.add_face(boundary, poly, rep_point=rep, synthetic=syn_top or syn_bot or e_top is None)
        return cc

    def _node(self, x, y):
        for wx, pieces in self.wall_pieces.items():
            if abs(wx - x) <= 1e-9:
                break
        for c in self.cc.cells:
            if c.dim == 0 and _dist(c.point, (x, y)) <= 1e-9:
                return c.id
        return self.cc.add_vertex((x, y))

    def _walls_between(self, lo, hi, y_bot, y_top):
        out = []
        for x, side in ((lo, lo), (hi, hi)):
            yb = y_bot(side)
            yt = y_top(side)
            for (py0, py1, eid) in self.wall_pieces.get(x, ()):
                if py0 >= yb - 1e-9 and py1 <= yt + 1e-9:
                    out.append(eid)
        return out


def brick_decomposition(f: Polynomial, window, spacing: float = 1.0, tol: float = 1e-9) -> CellComplex:
    """Brick-pattern decomposition of {y <= f(x)} clipped to the window.

    0-cells on the graph sit at integer abscissae, strict inflections, and
    local minima; vertical walls hang below each; every column gets
    horizontal rungs at spacing, 2*spacing, ... below the column's top
    minimum, and the complex stops at the lowest rung that fits (a column
    too shallow for any rung is closed by a synthetic window-bottom edge).
    For deg(f) <= 1 the rungs are parallel transports of the graph itself,
    giving the plain grid.
    """
    if spacing <= 0:
        raise ValueError("spacing must be positive")
    xmin, xmax, ymin, ymax = window
    if xmax - xmin <= 0 or ymax - ymin <= 0:
        raise EmptyWindow("window is degenerate")
    return _HalfPlaneBuilder(f, window, spacing, tol, open_set=False, resolution=DEFAULT_RESOLUTION).build()


def open_halfplane_decomposition(
    f: Polynomial,
    window,
    spacing: float = 1.0,
    resolution: float = DEFAULT_RESOLUTION,
    tol: float = 1e-9,
) -> CellComplex:
    """Open-half-plane decomposition: the brick pattern with all graph cells
    removed and each graph-adjacent 2-cell re-subdivided by copies of its
    graph edge at depths spacing/2^n (n = 1, 2, ... down to the resolution).

    No emitted cell touches the graph; the sliver between the shallowest
    copy and the graph, and the wall stubs reaching toward it, are flagged
    synthetic.
    """
    if spacing <= 0:
        raise ValueError("spacing must be positive")
    xmin, xmax, ymin, ymax = window
    if xmax - xmin <= 0 or ymax - ymin <= 0:
        raise EmptyWindow("window is degenerate")
    return _HalfPlaneBuilder(f, window, spacing, tol, open_set=True, resolution=resolution).build()


# ---------------------------------------------------------------------------
# Open curve decomposition
# ---------------------------------------------------------------------------

WHOLE = "whole"
HALF_OPEN = "half_open"
BOUNDED = "bounded"


def open_curve_decomposition(
    g: RotatedGraph,
    kind: str,
    window: Interval,
    x0: float = None,
    x1: float = None,
    resolution: float = DEFAULT_RESOLUTION,
) -> CellComplex:
    """Cells of an open polynomial curve, parametrized in its own frame.

    'whole': 0-cells at integer abscissae.  'half_open': 0-cells at x0 + m
    (m >= 1) and x0 + 1/2^n, accumulating toward the excluded endpoint.
    'bounded': dyadic ladders from both open endpoints plus the integers
    strictly between them.  The ladders stop at the resolution; the stub
    arcs beyond the last emitted 0-cell are synthetic.
    """
    cuts = set()
    lo, hi = float(window.lo), float(window.hi)
    if kind == WHOLE:
        cuts.update(float(n) for n in range(math.ceil(lo), math.floor(hi) + 1))
    elif kind == HALF_OPEN:
        if x0 is None:
            raise ValueError("half_open needs x0")
        lo = max(lo, x0)
        m = 1
        while x0 + m <= hi + 1e-12:
            cuts.add(x0 + m)
            m += 1
        n = 1
        while 0.5**n - 0.5 ** (n + 1) >= resolution:
            if x0 + 0.5**n <= hi + 1e-12:
                cuts.add(x0 + 0.5**n)
            n += 1
    elif kind == BOUNDED:
        if x0 is None or x1 is None:
            raise ValueError("bounded needs x0 and x1")
        if x1 - x0 <= 0:
            raise DegenerateInterval(f"bounded curve with x1 {x1} <= x0 {x0}")
        lo, hi = max(lo, x0), min(hi, x1)
        cuts.update(float(n) for n in range(math.ceil(x0), math.floor(x1) + 1) if x0 < n < x1)
        n = 1
        while 0.5**n - 0.5 ** (n + 1) >= resolution:
            a, b = x0 + 0.5**n, x1 - 0.5**n
            if a < b:
                cuts.add(a)
                cuts.add(b)
            n += 1
    else:
        raise ValueError(f"unknown curve kind {kind!r}")

    params = sorted(t for t in cuts if lo - 1e-12 <= t <= hi + 1e-12)
    ends = [g.parametrize(lo), g.parametrize(hi)]
    pad = 1.0
    win = (
        min(p[0] for p in ends) - pad,
        max(p[0] for p in ends) + pad,
        min(p[1] for p in ends) - pad,
        max(p[1] for p in ends) + pad,
    )
    cc = CellComplex(win)
    if not params:
        cc.add_edge(g, Interval(lo, hi), (None, None), synthetic=True)
        return cc
    ids = [cc.add_vertex(g.parametrize(t)) for t in params]
    if lo < params[0] - 1e-12:
        cc.add_edge(g, Interval(lo, params[0]), (None, ids[0]), synthetic=True)
    for (t0, v0), (t1, v1) in zip(zip(params, ids), zip(params[1:], ids[1:])):
        cc.add_edge(g, Interval(t0, t1), (v0, v1))
    if params[-1] < hi - 1e-12:
        cc.add_edge(g, Interval(params[-1], hi), (ids[-1], None), synthetic=True)
    return cc


# ---------------------------------------------------------------------------
# Overlay
# ---------------------------------------------------------------------------


def complex_from_subdivision(sub: Subdivision, mask=None) -> CellComplex:
    """Extract a CellComplex from a subdivision, keeping faces whose
    representative point passes the mask (all faces when mask is None)."""
    faces = sub.faces()
    if mask is not None:
        faces = [f for f in faces if mask(f.rep_point)]
    cc = CellComplex(sub.window)

    used_edges = set()
    for f in faces:
        for eid, _ in f.boundary:
            used_edges.add(eid)
        for hole in f.holes:
            for eid, _ in hole:
                used_edges.add(eid)
    node_map = {}
    for eid in sorted(used_edges):
        edge = sub.edges[eid]
        for nid in (edge.n_lo, edge.n_hi):
            if nid not in node_map:
                node_map[nid] = None
    for nid in sorted(node_map):
        node_map[nid] = cc.add_vertex(sub.nodes[nid].point)
    edge_map = {}
    for eid in sorted(used_edges):
        edge = sub.edges[eid]
        edge_map[eid] = cc.add_edge(
            edge.graph,
            edge.interval,
            (node_map[edge.n_lo], node_map[edge.n_hi]),
            edge.synthetic,
        )
    for f in faces:
        seen = []
        for eid, _ in f.boundary:
            mapped = edge_map[eid]
            if mapped not in seen:
                seen.append(mapped)
        cc.add_face(seen, f.polygon, holes=f.hole_polygons, rep_point=f.rep_point)
    return cc


def overlay(a: CellComplex, b: CellComplex, region_mask=None) -> CellComplex:
    """Overlay two complexes sharing a window: pairwise 1-cell intersection
    points become 0-cells, 1-cells are split there, and the 2-cells are the
    faces of the combined planar subdivision restricted to the mask."""
    if tuple(a.window) != tuple(b.window):
        raise WindowMismatch(f"{a.window} vs {b.window}")
    sub = Subdivision(a.window)
    for source in (a, b):
        for cell in source.cells:
            if cell.dim == 1:
                sub.insert_chain(cell.graph, cell.interval.lo, cell.interval.hi, cell.synthetic)
    cc = complex_from_subdivision(sub, region_mask)
    for source in (a, b):  # isolated 0-cells carry over
        endpoint_ids = set()
        for c in source.cells:
            if c.dim == 1:
                endpoint_ids.update(e for e in c.endpoints if e)
        for c in source.cells:
            if c.dim == 0 and c.id not in endpoint_ids:
                if region_mask is None or region_mask(c.point):
                    cc.add_vertex(c.point)
    return cc


def unit_grid(window, origin=(0.0, 0.0), spacing: float = 1.0) -> CellComplex:
    """An axis-aligned grid complex covering the window."""
    xmin, xmax, ymin, ymax = window
    sub = Subdivision(window)
    x = origin[0] + spacing * math.ceil((xmin - origin[0]) / spacing - 1e-12)
    while x <= xmax + 1e-12:
        sub.insert_segment((x, ymin), (x, ymax))
        x += spacing
    y = origin[1] + spacing * math.ceil((ymin - origin[1]) / spacing - 1e-12)
    while y <= ymax + 1e-12:
        sub.insert_segment((xmin, y), (xmax, y))
        y += spacing
    return complex_from_subdivision(sub)
