"""Graph families with known segment numbers, with explicit drawings."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .errors import BadParameter
from .geometry import Point, lerp
from .metrics_bounds import ccw_order, signed_area2
from .plane_graph import PlaneGraph, build


@dataclass
class NamedDrawing:
    graph: PlaneGraph
    drawing: dict
    declared_segments: int


@dataclass
class FamilyInstance:
    graph: PlaneGraph
    drawing: Optional[dict] = None
    graph_class: Optional[str] = None
    declared_segments: Optional[int] = None
    parameter: Optional[int] = None
    extra_drawings: dict = field(default_factory=dict)
    stacking_order: Optional[list] = None


def rotation_from_coords(adj: dict, coords: dict) -> dict:
    """Counterclockwise neighbour order read off a (floating point) layout."""
    rot = {}
    for v, nbrs in adj.items():
        x, y = coords[v]

        def ang(w):
            return math.atan2(float(coords[w][1]) - float(y), float(coords[w][0]) - float(x))

        rot[v] = sorted(nbrs, key=ang)
    return rot


def _adj_from_edges(n: int, edges) -> dict:
    adj = {v: [] for v in range(n)}
    for a, b in edges:
        if b not in adj[a]:
            adj[a].append(b)
            adj[b].append(a)
    return adj


def plane_graph_from_drawing(edges, points: Mapping) -> PlaneGraph:
    """Plane graph whose embedding is read off an exact straight-line drawing."""
    adj: dict = {v: [] for v in points}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    rot = {v: ccw_order(points[v], {w: points[w] for w in nbrs}) for v, nbrs in adj.items()}
    graph = PlaneGraph(rot)
    for walk in graph.faces:
        if signed_area2([points[v] for v in walk]) < 0:
            return PlaneGraph(rot, (walk[0], walk[1]))
    raise ValueError("drawing has no clockwise face")


def cn2_edges(n: int) -> list:
    return sorted({tuple(sorted((i, (i + d) % n))) for i in range(n) for d in (1, 2)})


def gen_Cn2(n: int) -> FamilyInstance:
    """Square of the n-cycle embedded as an antiprism with outer face 0,1,2."""
    if n < 6 or n % 2:
        raise BadParameter("C_n^2 needs an even n >= 6")
    coords = {}
    for i in range(n):
        r = 2.0 if i % 2 == 0 else math.cos(2 * math.pi / n)
        a = 2 * math.pi * i / n
        coords[i] = (r * math.cos(a), r * math.sin(a))
    rot = rotation_from_coords(_adj_from_edges(n, cn2_edges(n)), coords)
    graph = build(n, rot, [0, 1, 2])
    return FamilyInstance(graph, graph_class="fourreg", parameter=n)


def gen_outerpath_Rn(n: int) -> FamilyInstance:
    """Zigzag strip outerpath: i ~ i+1 and i ~ i+2, all degrees at most 4."""
    if n < 4:
        raise BadParameter("R_n needs n >= 4")
    pts = {i: Point(i, i % 2) for i in range(n)}
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)]
    graph = plane_graph_from_drawing(edges, pts)
    return FamilyInstance(graph, graph_class="outerpath", parameter=n, stacking_order=list(range(n)))


def rn_missing_edges(n: int) -> list:
    """The three edges that turn R_n into C_n^2."""
    return [(0, n - 2), (0, n - 1), (1, n - 1)]


def gen_Pr(r: int) -> FamilyInstance:
    """Fan outerpath on 2r+6 vertices drawn with r+5 segments.

    The apex sits at the origin.  The rim lies on the two legs of a V with
    its corner straight below the apex, so that every line through the apex
    meets one leg on each side.
    """
    if r < 0:
        raise BadParameter("r must be non-negative")
    apex, corner = 0, 1
    pts = {apex: Point(0, 0), corner: Point(0, -1)}
    left, right = [], []
    for j in range(1, r + 3):
        mu = Fraction(-1) + Fraction(2 * j, r + 3)
        lv, rv = 2 * j, 2 * j + 1
        pts[lv] = Point(-1 / (1 - mu), mu / (1 - mu))
        pts[rv] = Point(1 / (1 + mu), -mu / (1 + mu))
        left.append(lv)
        right.append(rv)
    rim = list(reversed(left)) + [corner] + list(reversed(right))
    edges = [(apex, v) for v in rim] + [(rim[i], rim[i + 1]) for i in range(len(rim) - 1)]
    graph = plane_graph_from_drawing(edges, pts)
    order = [rim[0], rim[1], apex] + rim[2:]
    return FamilyInstance(
        graph,
        drawing=pts,
        graph_class="outerpath",
        declared_segments=r + 5,
        parameter=r,
        stacking_order=order,
    )


def bn_edges(n: int) -> list:
    """Edges of B_n; vertex ``i`` is v_{i+1}, so 0 and 1 see every other vertex."""
    edges = {(0, i) for i in range(2, n)} | {(1, i) for i in range(2, n)}
    edges |= {(i, i + 1) for i in range(n - 1)}
    return sorted(edges)


def _bn_fan_drawing(n: int) -> dict:
    # 0 and 1 on the outer face, the path 2..n-1 stacked on a vertical line
    pts = {0: Point(-1, 0), 1: Point(1, 0)}
    for i in range(2, n):
        pts[i] = Point(0, i - 1)
    return pts


def _bn_folded_drawing(n: int) -> dict:
    """Vertex 0 inside; 1 and the path's middle edge form the outer triangle.

    The path runs along two lines, y = 1 + x above vertex 0 and y = -1 - x
    below it, and vertex 1 sits left of where they meet.  Vertices on the
    two lines are paired through vertex 0, so each pair shares a segment.
    """
    pts = {0: Point(0, 0), 1: Point(-2, 0)}
    top = list(range(2, n // 2 + 1))
    bottom = list(range(n // 2 + 1, n))
    for j, v in enumerate(top):
        a = Fraction(2 * j + 1, 4)
        pts[v] = Point(a, 1 + a)
        t = Fraction(-1) / (1 + 2 * a)
        pts[bottom[j]] = Point(t * a, t * (1 + a))
    if len(bottom) > len(top):
        last = pts[bottom[len(top) - 1]]
        x = (last.x - 1) / 2
        pts[bottom[-1]] = Point(x, -1 - x)
    return pts


def gen_Bn(n: int) -> FamilyInstance:
    """B_n with two drawings: "A" on 2n-2 segments and "B" on ceil(3n/2)+1.

    The main drawing is "B", which needs a different outer face.
    """
    if n < 6:
        raise BadParameter("B_n needs n >= 6")
    edges = bn_edges(n)
    fan = _bn_fan_drawing(n)
    folded = _bn_folded_drawing(n)
    g_fan = plane_graph_from_drawing(edges, fan)
    g_folded = plane_graph_from_drawing(edges, folded)
    best = -(-3 * n // 2) + 1
    return FamilyInstance(
        g_folded,
        drawing=folded,
        graph_class="planar3tree",
        declared_segments=best,
        parameter=n,
        extra_drawings={
            "A": NamedDrawing(g_fan, fan, 2 * n - 2),
            "B": NamedDrawing(g_folded, folded, best),
        },
    )


def _meet(p: Point, q: Point, r: Point, s: Point) -> Point:
    """Intersection of line pq with line rs."""
    d1, d2 = q - p, s - r
    den = d1.x * d2.y - d1.y * d2.x
    if den == 0:
        raise ValueError("parallel lines")
    w = r - p
    t = (w.x * d2.y - w.y * d2.x) / den
    return Point(p.x + t * d1.x, p.y + t * d1.y)


def gen_Tk(k: int) -> FamilyInstance:
    """Planar 3-tree on 4k+8 vertices drawn with 4k+15 segments.

    Four chains a, b, c, d are stacked towards the edges xy and xz, each
    chain on one line.  Through y the a-chain is paired with the c-chain in
    reverse order; through x, a_j is paired with d_j and c_j with b_j.  The
    drawing is mirror symmetric, and the map a_j -> a_{k-j} along the
    a-line is a projective involution, which is what lets the same lines
    serve every round.
    """
    if k < 1:
        raise BadParameter("T_k needs k >= 1")
    P = {
        "v1": Point(-1, 0),
        "v2": Point(1, 0),
        "v3": Point(0, 3),
        "x": Point(0, 1),
        "u": Point(Fraction(-1, 4), Fraction(5, 4)),
    }

    def mirror(p: Point) -> Point:
        return Point(-p.x, p.y)

    P["w"] = mirror(P["u"])
    P["y"] = _meet(P["v3"], P["u"], P["x"], P["x"] + Point(1, 0))
    P["z"] = mirror(P["y"])
    stack = [
        ("v1", ()),
        ("v2", ()),
        ("v3", ()),
        ("x", ("v1", "v2", "v3")),
        ("u", ("x", "v1", "v3")),
        ("w", ("x", "v2", "v3")),
        ("y", ("u", "x", "v1")),
        ("z", ("w", "x", "v2")),
    ]
    u, x, y = P["u"], P["x"], P["y"]
    # the a-line runs from u to a point of the edge xy
    hub = lerp(y, x, Fraction(1, 2))
    last_a = _meet(u, hub, P["v1"], y)
    last_c = _meet(x, mirror(last_a), u, y)
    c_line = (P["v1"], last_c)

    def c_of(a: Point) -> Point:
        return _meet(x, mirror(a), *c_line)

    def partner(a: Point) -> Point:
        return _meet(y, c_of(a), u, hub)

    # parameter along u -> last_a; hub sits at p > 1 and the involution's
    # other fixed point at p / (2p - 1)
    p = (hub.x - u.x) / (last_a.x - u.x)
    fixed = p / (2 * p - 1)
    chain_a = {k: last_a}
    half = Fraction(k, 2)
    for j in range(1, k):
        if j < half:
            chain_a[j] = lerp(u, last_a, fixed * j / half)
        elif j == half:
            chain_a[j] = lerp(u, last_a, fixed)
    for j in range(1, k):
        if j > half:
            chain_a[j] = partner(chain_a[k - j])
    prev = {"a": "u", "c": "v1", "b": "w", "d": "v2"}
    hub_of = {"a": ("y", "x"), "c": ("x", "y"), "b": ("x", "z"), "d": ("z", "x")}
    names = [v for v, _ in stack]
    for j in range(1, k + 1):
        a = chain_a[j]
        c = last_c if j == k else c_of(a)
        P[f"a{j}"], P[f"c{j}"] = a, c
        P[f"b{j}"], P[f"d{j}"] = mirror(a), mirror(c)
        for key in "acbd":
            stack.append((f"{key}{j}", (prev[key],) + hub_of[key]))
            names.append(f"{key}{j}")
            prev[key] = f"{key}{j}"
    index = {name: i for i, name in enumerate(names)}
    edges = [("v1", "v2"), ("v2", "v3"), ("v1", "v3")]
    for v, face in stack:
        edges.extend((v, f) for f in face)
    pts = {index[nm]: P[nm] for nm in names}
    graph = plane_graph_from_drawing([(index[a], index[b]) for a, b in edges], pts)
    return FamilyInstance(
        graph,
        drawing=pts,
        graph_class="planar3tree",
        declared_segments=4 * k + 15,
        parameter=k,
        stacking_order=[index[v] for v, _ in stack],
    )


# 16 vertices on 8 segments, maximal outerplanar
GK_BASE_POINTS = [
    (0, 0), (40, 0), (0, 40), (0, -40), (-80, 0), (120, -80), (-120, 0), (160, 0),
    (112, -96), (280, 240), (0, -80), (-35, -75), (140, -100), (160, -120), (210, -110), (0, -320),
]
GK_BASE_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (1, 7), (1, 9), (3, 4),
    (3, 5), (3, 6), (3, 8), (3, 10), (3, 11), (4, 6), (5, 7), (5, 8), (5, 12), (5, 14),
    (7, 9), (8, 10), (8, 12), (8, 13), (8, 15), (10, 11), (10, 15), (12, 13), (12, 14),
]
# each new copy puts its face (1, 7, 9) onto the previous copy's face (6, 4, 3)
GK_GLUE_IN = (1, 7, 9)
GK_GLUE_OUT = (6, 4, 3)


def gk_glue_map(p: Point) -> Point:
    """Affine map taking GK_GLUE_IN onto GK_GLUE_OUT: scale by (1/3, -1/6), shear, shift.

    It contracts towards (-200, 0), left of the whole base drawing, so copies
    two or more steps apart never meet.
    """
    return Point(p.x / 3 + p.y / 6 - Fraction(400, 3), -p.y / 6)


def gen_Gk(k: int) -> FamilyInstance:
    """Maximal outerplanar graph on 13k+3 vertices drawn with 5k+3 segments.

    Copy i is the base drawing pushed through the glue map i times.  Gluing
    identifies three vertices, and each side of the shared face keeps its
    line, so every copy after the first adds 13 vertices and 5 segments.
    """
    if k < 1:
        raise BadParameter("G_k needs k >= 1")
    base = [Point(x, y) for x, y in GK_BASE_POINTS]
    pts = dict(enumerate(base))
    edges = list(GK_BASE_EDGES)
    names = list(range(len(base)))
    cur = base
    for _ in range(1, k):
        cur = [gk_glue_map(p) for p in cur]
        glued = {v: names[w] for v, w in zip(GK_GLUE_IN, GK_GLUE_OUT)}
        fresh = iter(range(len(pts), len(pts) + len(base)))
        names = [glued[v] if v in glued else next(fresh) for v in range(len(base))]
        for v, p in enumerate(cur):
            pts[names[v]] = p
        edges += [(names[a], names[b]) for a, b in GK_BASE_EDGES if not (a in glued and b in glued)]
    graph = plane_graph_from_drawing(edges, pts)
    return FamilyInstance(
        graph,
        drawing=pts,
        graph_class="2tree_or_maxouterplanar",
        declared_segments=5 * k + 3,
        parameter=k,
    )
