"""Type-I region decompositions, basic-set classification, and unions.

Intersections of polynomial half-planes are split into type-I regions by
inserting each bounding graph into a planar subdivision of the window and
keeping the faces where every membership is nonnegative.  Strict basic
sets are classified into the four variants (empty, finite points, open
polynomial curve, type-II regions); finite unions are assembled from the
per-kind constructions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .cells import (
    BOUNDED,
    HALF_OPEN,
    WHOLE,
    CellComplex,
    complex_from_subdivision,
    open_curve_decomposition,
    open_halfplane_decomposition,
    overlay,
)
from .errors import DuplicateSet, OverlapSide
from .poly import (
    OVERLAP_PARTIAL,
    Interval,
    Polynomial,
    RotatedGraph,
    graph_intersection_params,
    isolate_real_roots,
)
from .subdivision import Subdivision, _point_in_polygon, window_chains

VERTEX_TOL = 1e-7


def _dist(p, q):
    return math.hypot(p[0] - q[0], p[1] - q[1])


@dataclass(frozen=True)
class HalfPlane:
    graph: RotatedGraph
    strict: bool = False  # True: {membership > 0}; False: {membership >= 0}

    def membership(self, point):
        return self.graph.membership(point)

    def same_set_as(self, other: "HalfPlane") -> bool:
        return self.strict == other.strict and self.graph.same_set_as(other.graph)


@dataclass
class Side:
    graph: RotatedGraph
    interval: Interval
    synthetic: bool = False  # window-edge sides

    def midpoint(self):
        return self.graph.parametrize(self.interval.mid)

    def endpoints(self):
        return (self.graph.parametrize(self.interval.lo), self.graph.parametrize(self.interval.hi))


@dataclass
class TypeIRegion:
    """A connected face bounded by sides on polynomial graphs.

    ``boundary_components`` lists cyclic side chains (outer first); the
    region is closed when ``closed`` (type I) and an open interior when not
    (type II).
    """

    boundary_components: list  # list of list[Side]
    closed: bool = True
    _polygons: list = field(default_factory=list, repr=False)

    @property
    def sides(self):
        return [s for comp in self.boundary_components for s in comp]

    def vertices(self):
        out = []
        for comp in self.boundary_components:
            for side in comp:
                for p in side.endpoints():
                    if not any(_dist(p, q) <= VERTEX_TOL for q in out):
                        out.append(p)
        return out

    def polygons(self):
        if not self._polygons:
            for comp in self.boundary_components:
                pts = []
                for side in comp:
                    seg = _sample_side(side)
                    if pts and _dist(pts[-1], seg[0]) > _dist(pts[-1], seg[-1]):
                        seg = seg[::-1]
                    pts.extend(seg[:-1])
                self._polygons.append(pts)
        return self._polygons

    def contains(self, point, tol: float = 0.0) -> bool:
        polys = self.polygons()
        inside = _point_in_polygon(point, polys[0]) and all(
            not _point_in_polygon(point, h) for h in polys[1:]
        )
        if inside:
            return True
        if tol > 0:
            near = self.boundary_distance(point) <= tol
            return near if self.closed else False
        return False

    def boundary_distance(self, point) -> float:
        best = math.inf
        for poly in self.polygons():
            for p, q in zip(poly, poly[1:] + poly[:1]):
                best = min(best, _point_segment_dist(point, p, q))
        return best

    def membership_floor(self, point):
        """Signed inside-ness proxy: positive inside, negative outside,
        magnitude approximately the boundary distance.  Vectorizes over
        numpy coordinate arrays."""
        if hasattr(point[0], "shape"):
            xs = np.asarray(point[0])
            flat = [
                self.membership_floor((float(x), float(y)))
                for x, y in zip(xs.ravel(), np.asarray(point[1]).ravel())
            ]
            return np.asarray(flat).reshape(xs.shape)
        d = self.boundary_distance(point)
        return d if self.contains(point) else -d

    def bbox(self):
        pts = [p for poly in self.polygons() for p in poly]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return (min(xs), max(xs), min(ys), max(ys))


def _sample_side(side: Side, n: int = 64):
    t0, t1 = side.interval.lo, side.interval.hi
    return [side.graph.parametrize(t0 + (t1 - t0) * k / n) for k in range(n + 1)]


def _point_segment_dist(p, a, b):
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    denom = dx * dx + dy * dy
    if denom == 0:
        return math.hypot(px - ax, py - ay)
    t = max(0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / denom))
    return math.hypot(px - ax - t * dx, py - ay - t * dy)


@dataclass
class TypeIDecomposition:
    regions: list  # TypeIRegion
    shared_vertices: list = field(default_factory=list)  # (point, [region indices])
    source_graphs: list = field(default_factory=list)

    def __len__(self):
        return len(self.regions)


# ---------------------------------------------------------------------------
# Half-plane intersection -> type-I regions
# ---------------------------------------------------------------------------


def _face_to_region(face, sub, closed=True) -> TypeIRegion:
    comps = []
    for cycle in [face.boundary] + face.holes:
        sides = []
        for eid, _ in cycle:
            edge = sub.edges[eid]
            prev = sides[-1] if sides else None
            if (
                prev is not None
                and prev.synthetic == edge.synthetic
                and _same_graph(prev.graph, edge.graph)
                and _mergeable(prev, edge)
            ):
                prev.interval = Interval(
                    min(prev.interval.lo, edge.interval.lo),
                    max(prev.interval.hi, edge.interval.hi),
                )
                continue
            sides.append(Side(edge.graph, edge.interval, edge.synthetic))
        # wrap-around merge
        if len(sides) >= 2 and sides[0].synthetic == sides[-1].synthetic and _same_graph(
            sides[0].graph, sides[-1].graph
        ) and _mergeable(sides[0], sides[-1]):
            sides[0].interval = Interval(
                min(sides[0].interval.lo, sides[-1].interval.lo),
                max(sides[0].interval.hi, sides[-1].interval.hi),
            )
            sides.pop()
        comps.append(sides)
    region = TypeIRegion(comps, closed=closed)
    region._polygons = [face.polygon] + face.hole_polygons
    return region


def _same_graph(a: RotatedGraph, b: RotatedGraph) -> bool:
    if a is b:
        return True
    probe = Interval(-1.0, 1.0)
    return graph_intersection_params(a, b, probe) is OVERLAP_PARTIAL


def _mergeable(a: Side, b: Side) -> bool:
    return (
        abs(a.interval.hi - b.interval.lo) <= 1e-7
        or abs(b.interval.hi - a.interval.lo) <= 1e-7
    )


def dedupe_halfplanes(hs) -> list:
    out = []
    for h in hs:
        if not any(h.same_set_as(o) for o in out):
            out.append(h)
    return out


def intersect_halfplanes(hs, window, tol: float = 1e-9) -> TypeIDecomposition:
    """Split the intersection of polynomial half-planes into type-I regions.

    Every bounding graph is inserted into a window subdivision; faces whose
    representative point satisfies all memberships are kept, adjacent
    co-graph sides are merged, and vertex sharing between regions is
    recorded for the validation report.
    """
    hs = dedupe_halfplanes(list(hs))
    sub = Subdivision(window)
    for h in hs:
        for t0, t1 in window_chains(h.graph, window):
            sub.insert_chain(h.graph, t0, t1)

    kept = []
    for face in sub.faces():
        p = face.rep_point
        if all(h.membership(p) >= -tol for h in hs):
            kept.append(face)

    regions = [_face_to_region(face, sub) for face in kept]
    decomp = TypeIDecomposition(regions, source_graphs=[h.graph for h in hs])
    decomp.shared_vertices = _shared_vertices(regions)
    return decomp


def _shared_vertices(regions) -> list:
    buckets = []  # (point, [region indices])
    for idx, region in enumerate(regions):
        for v in region.vertices():
            for entry in buckets:
                if _dist(entry[0], v) <= VERTEX_TOL:
                    if idx not in entry[1]:
                        entry[1].append(idx)
                    break
            else:
                buckets.append((v, [idx]))
    return [(p, ids) for p, ids in buckets if len(ids) >= 2]


def split_region_by_graph(region: TypeIRegion, g: RotatedGraph, window) -> list:
    """Cut one type-I region by a graph: pieces of the graph interior to the
    region split it; returns the resulting regions (the input unchanged when
    the graph misses it)."""
    for side in region.sides:
        if not side.synthetic and _same_graph(side.graph, g):
            res = graph_intersection_params(g, side.graph, Interval(-1.0, 1.0))
            if res is OVERLAP_PARTIAL:
                raise OverlapSide("cutting graph partially overlaps a side of the region")
    sub = Subdivision(window)
    for comp in region.boundary_components:
        for side in comp:
            sub.insert_chain(side.graph, side.interval.lo, side.interval.hi, side.synthetic)
    for t0, t1 in window_chains(g, window):
        sub.insert_chain(g, t0, t1)
    out = []
    for face in sub.faces():
        if region.contains(face.rep_point):
            piece = _face_to_region(face, sub)
            piece.cut_sign = 1 if g.membership(face.rep_point) > 0 else -1
            out.append(piece)
    return out


@dataclass
class PropertyReport:
    passes: dict
    witnesses: dict

    def all_pass(self) -> bool:
        return all(self.passes.values())


def validate_decomposition(d: TypeIDecomposition) -> PropertyReport:
    """Structural check of the four decomposition properties: side
    provenance, adjacent-side distinctness, pairwise vertex sharing <= 1,
    and vertex fan-out <= 2 regions."""
    passes = {1: True, 2: True, 3: True, 4: True}
    witnesses = {1: [], 2: [], 3: [], 4: []}

    for ridx, region in enumerate(d.regions):
        for comp in region.boundary_components:
            real = [s for s in comp if not s.synthetic]
            if d.source_graphs:
                for s in real:
                    if not any(_same_graph(s.graph, g) for g in d.source_graphs):
                        passes[1] = False
                        witnesses[1].append((ridx, s.midpoint()))
            ordered = [s for s in comp]
            for s0, s1 in zip(ordered, ordered[1:] + ordered[:1]):
                if s0.synthetic or s1.synthetic or s0 is s1:
                    continue
                if _adjacent(s0, s1) and _same_graph(s0.graph, s1.graph):
                    passes[2] = False
                    witnesses[2].append((ridx, s0.midpoint()))

    for i in range(len(d.regions)):
        for j in range(i + 1, len(d.regions)):
            shared = _shared_points(d.regions[i], d.regions[j])
            if len(shared) > 1:
                passes[3] = False
                witnesses[3].append((i, j, shared))

    for point, ids in _shared_vertices(d.regions):
        if len(ids) >= 3:
            passes[4] = False
            witnesses[4].append((point, ids))
    return PropertyReport(passes, witnesses)


def _adjacent(s0: Side, s1: Side) -> bool:
    e0 = s0.endpoints()
    e1 = s1.endpoints()
    return any(_dist(p, q) <= VERTEX_TOL for p in e0 for q in e1)


def _shared_points(r0: TypeIRegion, r1: TypeIRegion) -> list:
    out = []
    for v in r0.vertices():
        if any(_dist(v, w) <= VERTEX_TOL for w in r1.vertices()):
            if not any(_dist(v, u) <= VERTEX_TOL for u in out):
                out.append(v)
    return out


# ---------------------------------------------------------------------------
# Classification of strict basic sets (Thm 4.5 variants)
# ---------------------------------------------------------------------------


class ClassTag(Enum):
    EMPTY = "Empty"
    FINITE_POINTS = "FinitePoints"
    OPEN_CURVE = "OpenPolynomialCurve"
    TYPE_II = "TypeIIRegions"


@dataclass(frozen=True)
class CurvePiece:
    kind: str  # whole | half_open | bounded
    x0: float = None
    x1: float = None


@dataclass
class Classification:
    tag: ClassTag
    points: list = field(default_factory=list)
    curve: RotatedGraph = None
    pieces: list = field(default_factory=list)  # CurvePiece
    regions: TypeIDecomposition = None


def _check_distinct(graphs):
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            if _same_graph(graphs[i], graphs[j]):
                raise DuplicateSet("two inputs define the same point set")


def classify_basic_set(curves, opens, window, tol: float = 1e-7) -> Classification:
    """Classify {g_1=0} ∩ ... ∩ {g_m=0} ∩ {f_1>0} ∩ ... ∩ {f_k>0}.

    m = 0: type-II regions (interiors of the closed intersection).
    m = 1: open pieces of the curve where every open membership is positive,
    each whole, half-open, or bounded.  m >= 2: the common points of all
    curves that satisfy the opens, or empty.
    """
    curves = list(curves)
    opens = [h if isinstance(h, HalfPlane) else HalfPlane(h, strict=True) for h in opens]
    _check_distinct([c for c in curves] + [])
    _check_distinct([h.graph for h in opens])

    if not curves and not opens:
        raise ValueError("empty description")

    if not curves:
        decomp = intersect_halfplanes(opens, window)
        open_regions = []
        for r in decomp.regions:
            open_regions.append(TypeIRegion(r.boundary_components, closed=False))
            open_regions[-1]._polygons = r._polygons
        d2 = TypeIDecomposition(open_regions, decomp.shared_vertices, decomp.source_graphs)
        if not open_regions:
            return Classification(ClassTag.EMPTY)
        return Classification(ClassTag.TYPE_II, regions=d2)

    if len(curves) == 1:
        g = curves[0]
        xmin, xmax, ymin, ymax = window
        radius = max(math.hypot(x, y) for x in (xmin, xmax) for y in (ymin, ymax)) + 1.0
        cuts = set()
        bounded_somewhere = False
        for h in opens:
            q_roots = graph_intersection_params(g, h.graph, Interval(-radius, radius))
            if q_roots is OVERLAP_PARTIAL:
                raise DuplicateSet("a curve coincides with the boundary of an open half-plane")
            cuts.update(q_roots)
            bounded_somewhere = True
        ts = sorted({-radius, radius, *cuts})
        live = []
        for a, b in zip(ts, ts[1:]):
            mid = 0.5 * (a + b)
            p = g.parametrize(mid)
            if all(h.membership(p) > tol * -1 for h in opens) and all(
                h.membership(p) > 0 for h in opens
            ):
                if live and abs(live[-1][1] - a) <= 1e-12:
                    live[-1][1] = b
                else:
                    live.append([a, b])
        pieces = []
        for a, b in live:
            left_open = a > -radius + 1e-9
            right_open = b < radius - 1e-9
            if left_open and right_open:
                pieces.append(CurvePiece(BOUNDED, a, b))
            elif left_open:
                pieces.append(CurvePiece(HALF_OPEN, x0=a))
            elif right_open:
                pieces.append(CurvePiece(HALF_OPEN, x0=None, x1=b))
            else:
                pieces.append(CurvePiece(WHOLE))
        if not pieces:
            return Classification(ClassTag.EMPTY)
        return Classification(ClassTag.OPEN_CURVE, curve=g, pieces=pieces)

    # m >= 2: intersect the first two curves, filter by the rest
    xmin, xmax, ymin, ymax = window
    radius = max(math.hypot(x, y) for x in (xmin, xmax) for y in (ymin, ymax)) + 1.0
    from .poly import graph_intersections

    candidates = graph_intersections(curves[0], curves[1], Interval(-radius, radius))
    if candidates is OVERLAP_PARTIAL:
        raise DuplicateSet("two curves define the same point set")
    points = []
    for p in candidates:
        if all(abs(c.membership(p)) <= tol for c in curves) and all(
            h.membership(p) > 0 for h in opens
        ):
            if not any(_dist(p, q) <= tol for q in points):
                points.append(p)
    if not points:
        return Classification(ClassTag.EMPTY)
    return Classification(ClassTag.FINITE_POINTS, points=sorted(points))


# ---------------------------------------------------------------------------
# Boundary arrangements and union decompositions
# ---------------------------------------------------------------------------

IN = "in"
BOUNDARY = "boundary"
OUT = "out"


@dataclass
class PlaneArrangement:
    faces: list  # TypeIRegion
    open_sides: list  # Side
    vertices: list  # points
    face_flags: list
    side_flags: list
    vertex_flags: list


def arrange_boundaries(regions, window) -> PlaneArrangement:
    """Insert every boundary side of the given (type II) regions into a
    window subdivision and flag each face, open side, and vertex as inside
    the union, on its boundary, or outside."""
    sub = Subdivision(window)
    for region in regions:
        for comp in region.boundary_components:
            for side in comp:
                if side.synthetic:
                    continue
                sub.insert_chain(side.graph, side.interval.lo, side.interval.hi)

    def in_union(p):
        return any(r.contains(p) for r in regions)

    faces = []
    face_flags = []
    for face in sub.faces():
        region = _face_to_region(face, sub)
        faces.append(region)
        face_flags.append(IN if in_union(face.rep_point) else OUT)

    open_sides = []
    side_flags = []
    for eid in sorted(sub.edges):
        edge = sub.edges[eid]
        side = Side(edge.graph, edge.interval, edge.synthetic)
        open_sides.append(side)
        mid = side.midpoint()
        if in_union(mid):
            side_flags.append(IN)
        elif any(
            not s.synthetic
            and abs(s.graph.membership(mid)) <= 1e-7
            for r in regions
            for s in r.sides
        ) and not edge.synthetic:
            side_flags.append(BOUNDARY)
        else:
            side_flags.append(OUT)

    vertices = []
    vertex_flags = []
    used = set()
    for eid in sorted(sub.edges):
        edge = sub.edges[eid]
        for nid in (edge.n_lo, edge.n_hi):
            if nid in used:
                continue
            used.add(nid)
            p = sub.nodes[nid].point
            vertices.append(p)
            if in_union(p):
                vertex_flags.append(IN)
            elif any(r.boundary_distance(p) <= 1e-7 for r in regions):
                vertex_flags.append(BOUNDARY)
            else:
                vertex_flags.append(OUT)
    return PlaneArrangement(faces, open_sides, vertices, face_flags, side_flags, vertex_flags)


def union_cell_decomposition(points, curves, regions, window, resolution: float = 1e-4) -> CellComplex:
    """Cell decomposition of a finite union of points, open polynomial
    curves, and type-II regions.

    Region interiors get overlaid open-half-plane decompositions; interior
    sides and vertices of the union get curve cells and 0-cells; curve
    pieces outside the union closure get open-curve decompositions with
    intersection points and stranded endpoints as 0-cells; isolated points
    become 0-cells unless already covered.
    """
    cc = CellComplex(tuple(float(v) for v in window))
    xmin, xmax, ymin, ymax = window
    radius = max(math.hypot(x, y) for x in (xmin, xmax) for y in (ymin, ymax)) + 1.0

    region_union = list(regions)

    def in_union(p):
        return any(r.contains(p) for r in region_union)

    def in_closure(p, tol=1e-9):
        return any(r.contains(p) or r.boundary_distance(p) <= tol for r in region_union)

    if region_union:
        arr = arrange_boundaries(region_union, window)
        for face, flag in zip(arr.faces, arr.face_flags):
            if flag != IN:
                continue
            side_graphs = []
            for s in face.sides:
                if not s.synthetic and not any(_same_graph(s.graph, g) for g in side_graphs):
                    side_graphs.append(s.graph)
            sub_complex = _type_ii_cells(face, side_graphs, window, resolution)
            _merge_cells(cc, sub_complex)
        for side, flag in zip(arr.open_sides, arr.side_flags):
            if flag != IN or side.synthetic:
                continue
            piece = open_curve_decomposition(
                side.graph, BOUNDED, side.interval, side.interval.lo, side.interval.hi, resolution
            )
            _merge_cells(cc, piece)
        for v, flag in zip(arr.vertices, arr.vertex_flags):
            if flag == IN:
                cc.add_vertex(v, tol=1e-7)

    # curves: split at union closure and at mutual intersections
    curve_list = list(curves)
    for idx, (g, pieces) in enumerate(curve_list):
        extra_zero = []
        for jdx, (g2, _) in enumerate(curve_list):
            if jdx == idx:
                continue
            res = graph_intersection_params(g, g2, Interval(-radius, radius))
            if res is OVERLAP_PARTIAL:
                continue
            extra_zero.extend(res)
        for piece in pieces:
            lo = piece.x0 if piece.x0 is not None else -radius
            hi = piece.x1 if piece.x1 is not None else radius
            outside = _params_outside_closure(g, lo, hi, in_closure)
            for a, b, closed_lo, closed_hi in outside:
                dec = open_curve_decomposition(
                    g,
                    BOUNDED,
                    Interval(a, b),
                    a,
                    b,
                    resolution,
                )
                _merge_cells(cc, dec)
                if closed_lo:
                    cc.add_vertex(g.parametrize(a), tol=1e-7)
                if closed_hi:
                    cc.add_vertex(g.parametrize(b), tol=1e-7)
            for t in extra_zero:
                if lo <= t <= hi and not in_union(g.parametrize(t)):
                    cc.add_vertex(g.parametrize(t), tol=1e-7)

    for p in points:
        cc.add_vertex(p, tol=1e-7)
    return cc


def _params_outside_closure(g, lo, hi, in_closure, samples=512):
    """Maximal parameter intervals of the curve outside the union closure,
    with flags for whether each end abuts the closure (endpoint re-added)."""
    ts = [lo + (hi - lo) * k / samples for k in range(samples + 1)]
    flags = [not in_closure(g.parametrize(t)) for t in ts]
    out = []
    k = 0
    while k <= samples:
        if flags[k]:
            start = k
            while k <= samples and flags[k]:
                k += 1
            a, b = ts[start], ts[k - 1]
            closed_lo = start > 0
            closed_hi = k <= samples
            if closed_lo:
                a = _bisect_flag(g, ts[start - 1], ts[start], in_closure)
            if closed_hi:
                b = _bisect_flag(g, ts[k - 1], ts[k], in_closure, rising=False)
            if b - a > 1e-9:
                out.append((a, b, closed_lo, closed_hi))
        k += 1
    return out


def _bisect_flag(g, t_in, t_out, in_closure, rising=True):
    for _ in range(60):
        m = 0.5 * (t_in + t_out)
        if in_closure(g.parametrize(m)):
            t_in = m
        else:
            t_out = m
    return t_out


def _type_ii_cells(face: TypeIRegion, side_graphs, window, resolution) -> CellComplex:
    """Overlay of the open-half-plane decompositions of the face's side
    graphs, masked to the face interior."""
    mask = lambda p: face.contains(p)
    acc = None
    for g in side_graphs:
        piece = _open_halfplane_in_frame(g, window, resolution)
        acc = piece if acc is None else overlay(acc, piece, None)
    if acc is None:
        return CellComplex(tuple(window))
    return overlay(acc, CellComplex(tuple(window)), mask)


def _open_halfplane_in_frame(g: RotatedGraph, window, resolution) -> CellComplex:
    """Open-half-plane decomposition of {membership(g) > 0} built in g's
    frame and mapped back to world coordinates."""
    xmin, xmax, ymin, ymax = window
    corners = [(x, y) for x in (xmin, xmax) for y in (ymin, ymax)]
    frame_pts = [g.to_frame(p) for p in corners]
    fx = [p[0] for p in frame_pts]
    fy = [p[1] for p in frame_pts]
    frame_window = (min(fx), max(fx), min(fy), max(fy))
    frame_cc = open_halfplane_decomposition(g.poly, frame_window, 1.0, resolution)
    world_cc = CellComplex(tuple(window))
    vid_map = {}
    for c in frame_cc.cells:
        if c.dim == 0:
            vid_map[c.id] = world_cc.add_vertex(g.from_frame(*c.point), c.synthetic)
    for c in frame_cc.cells:
        if c.dim == 1:
            rotated = RotatedGraph(c.graph.poly, (c.graph.theta + g.theta) % (2 * math.pi))
            eps = [vid_map.get(e) for e in c.endpoints]
            world_cc.add_edge(rotated, c.interval, tuple(eps), c.synthetic)
    for c in frame_cc.cells:
        if c.dim == 2:
            poly = [g.from_frame(*p) for p in c.polygon]
            rep = g.from_frame(*c.rep_point) if c.rep_point else None
            world_cc.add_face(list(c.boundary), poly, rep_point=rep, synthetic=c.synthetic)
    return world_cc


def _merge_cells(target: CellComplex, source: CellComplex):
    vid_map = {}
    for c in source.cells:
        if c.dim == 0:
            vid_map[c.id] = target.add_vertex(c.point, c.synthetic, tol=1e-9)
    for c in source.cells:
        if c.dim == 1:
            eps = tuple(vid_map.get(e) for e in c.endpoints)
            target.add_edge(c.graph, c.interval, eps, c.synthetic)
        elif c.dim == 2:
            target.add_face([], c.polygon, holes=c.hole_polygons, rep_point=c.rep_point, synthetic=c.synthetic)
