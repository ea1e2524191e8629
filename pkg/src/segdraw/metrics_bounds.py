"""Segment decompositions, drawing verification and closed-form bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Mapping, Optional, Sequence

from .errors import BadStackingOrder, CoincidentVertices, DomainTooSmall, NotOuterpath
from .geometry import Point, cross, line_key, segments_properly_intersect
from .plane_graph import PlaneGraph


@dataclass
class SegmentDecomposition:
    segments: list  # each a tuple of vertices in order along its line
    ports: dict

    @property
    def seg(self) -> int:
        return len(self.segments)

    @property
    def openseg(self) -> int:
        return sum(self.ports.values())

    def segment_edges(self) -> list:
        return [[(s[i], s[i + 1]) for i in range(len(s) - 1)] for s in self.segments]

    def is_open(self, v) -> bool:
        return self.ports.get(v, 0) > 0


def _edge_list(graph) -> list:
    if isinstance(graph, PlaneGraph):
        return graph.edges()
    return [tuple(e) for e in graph]


def decompose_segments(graph, coords: Mapping) -> SegmentDecomposition:
    """Group edges into maximal straight chains.

    ``graph`` is a :class:`PlaneGraph` or an iterable of edges; ``coords``
    maps vertices to exact points.
    """
    edges = _edge_list(graph)
    pts = {v: coords[v] if isinstance(coords[v], Point) else Point(*coords[v]) for e in edges for v in e}
    seen = {}
    for v, p in pts.items():
        if p in seen:
            raise CoincidentVertices(f"vertices {seen[p]} and {v} share a point")
        seen[p] = v
    lines: dict = {}
    for a, b in edges:
        lines.setdefault(line_key(pts[a], pts[b]), []).append((a, b))
    segments = []
    for key in sorted(lines, key=lambda k: k.as_tuple()):
        coord = (lambda p: p.x) if key.b != 0 else (lambda p: p.y)
        spans = []
        for a, b in lines[key]:
            if coord(pts[a]) > coord(pts[b]):
                a, b = b, a
            spans.append((coord(pts[a]), coord(pts[b]), a, b))
        spans.sort(key=lambda s: (s[0], s[1]))
        chain = [spans[0][2], spans[0][3]]
        for _, _, a, b in spans[1:]:
            if a == chain[-1]:
                chain.append(b)
            else:
                segments.append(tuple(chain))
                chain = [a, b]
        segments.append(tuple(chain))
    ports: dict = {v: 0 for v in pts}
    for s in segments:
        ports[s[0]] += 1
        ports[s[-1]] += 1
    return SegmentDecomposition(segments, ports)


# verification ------------------------------------------------------------------


@dataclass
class DrawingReport:
    injective: bool = True
    planar: bool = True
    embedding_preserved: bool = True
    faces_convex: bool = True
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.injective and self.planar and self.embedding_preserved and self.faces_convex

    def as_dict(self) -> dict:
        return {
            "injective": self.injective,
            "planar": self.planar,
            "embedding_preserved": self.embedding_preserved,
            "faces_convex": self.faces_convex,
        }


def _half(dx, dy) -> int:
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def ccw_order(center: Point, others: Mapping) -> list:
    """Keys of ``others`` sorted counterclockwise by direction from ``center``."""

    def cmp(a, b):
        pa, pb = others[a], others[b]
        ax, ay = pa.x - center.x, pa.y - center.y
        bx, by = pb.x - center.x, pb.y - center.y
        ha, hb = _half(ax, ay), _half(bx, by)
        if ha != hb:
            return ha - hb
        c = ax * by - ay * bx
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(others, key=cmp_to_key(cmp))


def _same_cycle(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    if a[0] not in b:
        return False
    k = list(b).index(a[0])
    return list(a) == list(b[k:]) + list(b[:k])


def signed_area2(points: Sequence) -> Fraction:
    s = Fraction(0)
    k = len(points)
    for i in range(k):
        p, q = points[i], points[(i + 1) % k]
        s += p.x * q.y - q.x * p.y
    return s


def face_is_convex(points: Sequence) -> bool:
    """Counterclockwise polygon with only left turns or straight angles."""
    k = len(points)
    if signed_area2(points) <= 0:
        return False
    for i in range(k):
        a, b, c = points[i - 1], points[i], points[(i + 1) % k]
        t = cross(a, b, c)
        if t < 0:
            return False
        if t == 0 and (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) <= 0:
            return False
    return True


def verify_drawing(graph: PlaneGraph, coords: Mapping) -> DrawingReport:
    report = DrawingReport()
    pts = {v: coords[v] if isinstance(coords[v], Point) else Point(*coords[v]) for v in graph.rotation}
    if len(set(pts.values())) != len(pts):
        report.injective = False
        report.planar = False
        report.problems.append("coincident vertices")
        return report
    edges = graph.edges()
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if segments_properly_intersect((pts[a], pts[b]), (pts[c], pts[d])):
                report.planar = False
                report.problems.append(f"edges {a}-{b} and {c}-{d} cross")
                break
        if not report.planar:
            break
    for v, rot in graph.rotation.items():
        order = ccw_order(pts[v], {w: pts[w] for w in rot})
        if not _same_cycle(order, rot):
            report.embedding_preserved = False
            report.problems.append(f"rotation at {v} differs")
            break
    if signed_area2([pts[v] for v in graph.outer]) >= 0:
        report.embedding_preserved = False
        report.problems.append("outer face is not the unbounded face")
    for fi in graph.internal_faces():
        if not face_is_convex([pts[v] for v in graph.faces[fi]]):
            report.faces_convex = False
            report.problems.append(f"face {graph.faces[fi]} is not convex")
            break
    return report


def internal_vertices_on_segments(graph: PlaneGraph, coords: Mapping) -> bool:
    """Every internal vertex lies strictly inside some segment of the drawing."""
    dec = decompose_segments(graph, coords)
    inner = set()
    for s in dec.segments:
        inner.update(s[1:-1])
    return all(v in inner for v in graph.rotation if not graph.is_outer_vertex(v))


# bounds -----------------------------------------------------------------------

LOWER_BOUND_CLASSES = ("outerpath", "2tree_or_maxouterplanar", "planar3tree", "odd_degree")


def lower_bounds(n: int, graph_class: str) -> int:
    """Universal lower bound on the segment number for a graph class.

    For ``odd_degree`` the argument is the number of odd-degree vertices.
    """
    if graph_class == "outerpath":
        if n < 3:
            raise DomainTooSmall("outerpaths need n >= 3")
        return n // 2 + 2
    if graph_class in ("2tree_or_maxouterplanar", "2tree", "maxouterplanar"):
        if n < 3:
            raise DomainTooSmall("2-trees need n >= 3")
        return -(-(n + 7) // 5)
    if graph_class in ("planar3tree", "3tree"):
        if n < 6:
            raise DomainTooSmall("the planar 3-tree bound needs n >= 6")
        return n + 4
    if graph_class in ("odd_degree", "eta"):
        if n < 0 or n % 2:
            raise DomainTooSmall("the number of odd-degree vertices is even and non-negative")
        return n // 2
    raise ValueError(f"unknown class {graph_class!r}")


def curve_bound(n: int, k: int) -> int:
    """Lower bound on curves pairwise crossing at most k times."""
    if n < 3 or k < 1:
        raise DomainTooSmall("need n >= 3 and k >= 1")
    return -(-(2 * n + 3 * k - 6) // (3 * k + 1))


@dataclass
class PseudoArcCensus:
    k: int
    n: int
    counts: tuple = ()  # counts[i] = number of arcs with i internal edges, i = 0..k

    def __post_init__(self):
        self.counts = tuple(self.counts) + (0,) * (self.k + 1 - len(self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")


def pseudo_arc_bound(census: PseudoArcCensus) -> int:
    k, n = census.k, census.n
    if n < 3 or k < 1:
        raise DomainTooSmall("need n >= 3 and k >= 1")
    surplus = sum((2 * k - 2 * i + 1) * c for i, c in enumerate(census.counts[: k + 1]))
    return -(-(2 * n + 3 * k - 6 + surplus) // (3 * k + 1))


def arc_bound(n: int) -> int:
    """Lower bound for drawings with circular arcs, ``ceil(2n/7)``."""
    return -(-(2 * n) // 7)


@dataclass
class BoundEntry:
    name: str
    formula: int
    drawing: int
    satisfied: bool
    kind: str = "lower"


@dataclass
class BoundReport:
    entries: list

    @property
    def ok(self) -> bool:
        return all(e.satisfied for e in self.entries)


def odd_degree_count(graph: PlaneGraph) -> int:
    return sum(1 for v in graph.rotation if graph.degree(v) % 2)


def check_against_bounds(graph: PlaneGraph, coords: Mapping, graph_class: Optional[str]) -> BoundReport:
    dec = decompose_segments(graph, coords)
    seg = dec.seg
    eta = odd_degree_count(graph)
    entries = [BoundEntry("odd_degree", eta // 2, seg, seg >= eta // 2)]
    n = graph.n
    if graph_class in ("outerpath", "2tree_or_maxouterplanar", "2tree", "maxouterplanar", "planar3tree", "3tree"):
        lb = lower_bounds(n, graph_class)
        entries.append(BoundEntry(graph_class, lb, seg, seg >= lb))
    elif graph_class == "fourreg":
        entries.append(BoundEntry("fourreg_upper", n + 3, seg, seg <= n + 3, "upper"))
    elif graph_class == "cn2":
        entries.append(BoundEntry("cn2_lower", n, seg, seg >= n))
        entries.append(BoundEntry("fourreg_upper", n + 3, seg, seg <= n + 3, "upper"))
    return BoundReport(entries)


def float_points(coords: Mapping) -> dict:
    return {v: (float(p.x), float(p.y)) if isinstance(p, Point) else (float(p[0]), float(p[1])) for v, p in coords.items()}



# outerpath ports --------------------------------------------------------------


@dataclass
class OuterpathPortReport:
    n: int
    openseg: int
    # clause name -> offending vertices (or vertex pairs)
    violations: dict = field(default_factory=dict)

    CLAUSES = ("ear_or_odd_open", "companions", "bend_companion", "consecutive_fours", "four_after_three", "openseg")

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def passed(self, clause: str) -> bool:
        return not self.violations.get(clause)


def _adjacency(graph) -> dict:
    adj: dict = {}
    for a, b in _edge_list(graph):
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def stacking_bases(adj: Mapping, order: Sequence) -> list:
    """For each vertex from the third on, the edge it was stacked on.

    Raises BadStackingOrder unless every prefix is a maximal outerpath whose
    first triangle is an end of the weak dual path, and NotOuterpath when the
    whole graph is not a maximal outerpath.
    """
    n = len(adj)
    if sorted(order, key=repr) != sorted(adj, key=repr) or len(set(order)) != n:
        raise BadStackingOrder("order is not a permutation of the vertices")
    m = sum(len(s) for s in adj.values()) // 2
    if n < 3 or m != 2 * n - 3:
        raise NotOuterpath("a maximal outerpath has 2n-3 edges and n >= 3")
    pos = {v: i for i, v in enumerate(order)}
    if order[1] not in adj[order[0]]:
        raise BadStackingOrder("the first two vertices are not adjacent")
    last_tri: set = set()
    bases = []
    for i in range(2, n):
        v = order[i]
        earlier = [w for w in adj[v] if pos[w] < i]
        if len(earlier) != 2 or earlier[1] not in adj[earlier[0]]:
            raise BadStackingOrder(f"vertex {v!r} is not stacked on an edge")
        u, w = sorted(earlier, key=lambda x: pos[x])
        base = frozenset((u, w))
        if i > 2:
            # the new triangle must hang off the current end of the dual path
            if base not in last_tri:
                raise BadStackingOrder(f"vertex {v!r} does not extend the dual path at its end")
        last_tri = {frozenset((u, v)), frozenset((w, v))}
        bases.append((u, w))
    return bases


def check_outerpath_ports(graph, order: Sequence, coords: Mapping) -> OuterpathPortReport:
    """Check the port properties every outerplanar drawing of a maximal outerpath has.

    ``order`` must be a stacking order starting at an end triangle.
    """
    adj = _adjacency(graph)
    bases = stacking_bases(adj, order)
    dec = decompose_segments(graph, coords)
    ports = dec.ports
    deg = {v: len(adj[v]) for v in adj}
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    report = OuterpathPortReport(n, dec.openseg, {c: [] for c in OuterpathPortReport.CLAUSES})
    bad = report.violations

    for v in order:
        if (deg[v] == 2 or deg[v] % 2) and ports[v] == 0:
            bad["ear_or_odd_open"].append(v)

    for i in range(2, n):
        v = order[i]
        if deg[v] < 5:
            continue
        companions = order[i + 1 : i + deg[v] - 3]
        if len(companions) != deg[v] - 4 or any(w not in adj[v] or deg[w] != 3 for w in companions):
            bad["companions"].append(v)
            continue
        if deg[v] >= 6 and ports[v] == 0 and not any(ports[w] >= 3 for w in companions):
            bad["bend_companion"].append(v)

    for i in range(1, n):
        u, v = order[i - 1], order[i]
        if deg[u] == 4 and deg[v] == 4 and ports[u] == 0 and ports[v] == 0:
            bad["consecutive_fours"].append((u, v))

    for i in range(3, n):
        u, v = order[i - 1], order[i]
        a, b = bases[i - 2]
        if u not in (a, b):
            continue
        w = b if u == a else a
        if ports[v] == 0 and deg[v] == 4 and deg[u] == 3 and deg[w] == 5 and ports[u] < 3 and ports[w] < 3:
            bad["four_after_three"].append(v)

    if n >= 4 and dec.openseg < n + 1:
        bad["openseg"].append(dec.openseg)
    return report
