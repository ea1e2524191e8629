"""Convex drawings that put every internal vertex inside some segment.

``draw_convex`` extends a compatible convex drawing of the outer face by
recursively cutting the graph along straight archfree paths: past degree-2
corners, along separation pairs, between opposite corners, or, when the
outer polygon is a triangle, along a pinwheel of three paths (a windmill).
Every internal vertex ends up in the interior of the straight cut that
created it, which is what limits the segment count of ``draw_4regular``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .archfree import (
    arch_candidates,
    archfree_version,
    find_archfree_windmill,
)
from .errors import (
    DegenerateInput,
    NotCompatible,
    OuterFaceMismatch,
    PreconditionViolated,
)
from .geometry import Point, cross, lerp, orient
from .plane_graph import (
    PlaneGraph,
    bfs_path,
    closed_interior,
    cycle_subpath,
    is_3connected,
    is_biconnected,
    is_internal_path,
    is_internally_3connected,
    is_internally_4regular,
    merge_flat_degree2,
    remove_degree2_vertex,
    separation_pairs,
)

PINWHEEL_T = Fraction(1, 2)


@dataclass(frozen=True)
class ConvexPolygonDrawing:
    """Outer face drawing: vertices in counterclockwise order with their points."""

    order: tuple
    points: Mapping

    @classmethod
    def of(cls, graph: PlaneGraph, points: Mapping) -> "ConvexPolygonDrawing":
        return cls(tuple(graph.outer_ccw()), dict(points))

    def corners(self) -> list:
        k = len(self.order)
        pts = [self.points[v] for v in self.order]
        return [self.order[i] for i in range(k) if orient(pts[i - 1], pts[i], pts[(i + 1) % k]) != 0]

    def sides(self) -> list:
        """Maximal collinear runs as vertex paths from corner to corner."""
        corners = self.corners()
        return [cycle_subpath(self.order, corners[i], corners[(i + 1) % len(corners)]) for i in range(len(corners))]

    def is_convex(self) -> bool:
        """Strictly convex at corners, straight elsewhere, counterclockwise, winding once."""
        k = len(self.order)
        pts = [self.points[v] for v in self.order]
        if len(set(pts)) != k:
            return False
        for i in range(k):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % k]
            turn = cross(a, b, c)
            if turn < 0:
                return False
            if turn == 0 and (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) <= 0:
                return False
        corner_pts = [self.points[v] for v in self.corners()]
        if len(corner_pts) < 3:
            return False
        kc = len(corner_pts)
        for i in range(kc):
            a, b = corner_pts[i], corner_pts[(i + 1) % kc]
            for j in range(kc):
                if j not in (i, (i + 1) % kc) and orient(a, b, corner_pts[j]) <= 0:
                    return False
        return True


def _polygon_of(graph: PlaneGraph, pos: Mapping) -> ConvexPolygonDrawing:
    return ConvexPolygonDrawing(tuple(graph.outer_ccw()), {v: pos[v] for v in graph.outer})


def is_compatible(polygon: ConvexPolygonDrawing, graph: PlaneGraph) -> bool:
    """Every side of the polygon is an archfree path of the graph."""
    if set(polygon.order) != set(graph.outer) or len(polygon.order) != len(graph.outer):
        raise OuterFaceMismatch("polygon does not trace the outer face")
    return all(not arch_candidates(graph, side) for side in polygon.sides())


def draw_convex(graph: PlaneGraph, polygon, check: bool = True) -> dict:
    """Extend a compatible convex outer polygon to a convex drawing of ``graph``."""
    if not isinstance(polygon, ConvexPolygonDrawing):
        polygon = ConvexPolygonDrawing.of(graph, polygon)
    if set(polygon.order) != set(graph.outer):
        raise OuterFaceMismatch("polygon does not trace the outer face")
    if not polygon.is_convex():
        raise PreconditionViolated("outer polygon is not convex")
    if not is_biconnected(graph) or not is_internally_3connected(graph):
        raise PreconditionViolated("graph is not internally 3-connected")
    if not is_internally_4regular(graph):
        raise PreconditionViolated("graph is not internally 4-regular")
    if not is_compatible(polygon, graph):
        raise NotCompatible("a side of the outer polygon is arched")
    pos = {v: polygon.points[v] for v in polygon.order}
    _Extender(check).extend(graph, pos)
    return pos


class _Extender:
    def __init__(self, check: bool):
        self.check = check

    def extend(self, H: PlaneGraph, pos: dict) -> None:
        if self.check:
            poly = _polygon_of(H, pos)
            if not poly.is_convex():
                raise AssertionError("sub-polygon lost convexity")
            if not is_compatible(poly, H):
                raise AssertionError("sub-polygon is not compatible")
        if H.m == len(H.outer):
            return
        H, _ = merge_flat_degree2(H, pos)
        if H.m == len(H.outer):
            return
        pairs = separation_pairs(H)
        if pairs:
            self._not_3connected(H, pos, pairs)
            return
        if len(H.outer) >= 4:
            u, v = _separated_outer_pair(_polygon_of(H, pos))
            start = bfs_path(H.rotation, u, v, set(H.rotation) - H.outer_vertices)
            if start is None:
                raise AssertionError("no internal path between opposite corners")
            self._split(H, pos, archfree_version(H, start))
        else:
            self._pinwheel(H, pos)

    # cases ------------------------------------------------------------------

    def _not_3connected(self, H: PlaneGraph, pos: dict, pairs: list) -> None:
        ccw = H.outer_ccw()
        for v in ccw:
            if H.degree(v) == 2:
                self.extend(remove_degree2_vertex(H, v), pos)
                return
        paired = {}
        for a, b in pairs:
            paired.setdefault(a, set()).add(b)
            paired.setdefault(b, set()).add(a)
        walk = H.outer  # clockwise
        k = len(walk)
        for idx, u in enumerate(walk):
            if u not in paired:
                continue
            v = next(walk[(idx + s) % k] for s in range(1, k) if walk[(idx + s) % k] in paired[u])
            path = _short_face_path(H, u, v)
            if path is not None:
                self._split(H, pos, path)
                return
        raise AssertionError("no internal face path for any separation pair")

    def _split(self, H: PlaneGraph, pos: dict, path: Sequence) -> None:
        path = tuple(path)
        u, v = path[0], path[-1]
        k = len(path) - 1
        for i in range(1, k):
            _place(pos, path[i], lerp(pos[u], pos[v], Fraction(i, k)))
        ccw = H.outer_ccw()
        back = cycle_subpath(ccw, v, u)
        fwd = cycle_subpath(ccw, u, v)
        c1 = path + back[1:-1]
        c2 = tuple(reversed(path)) + fwd[1:-1]
        for cyc in (c1, c2):
            self.extend(closed_interior(H, cyc), pos)

    def _pinwheel(self, H: PlaneGraph, pos: dict) -> None:
        W, _ = find_archfree_windmill(H)
        paths = W.paths
        o = [pos[p[0]] for p in paths]
        if orient(o[0], o[1], o[2]) == 0:
            raise AssertionError("windmill outer ends are collinear")
        q = pinwheel_points(o, PINWHEEL_T)
        for i, p in enumerate(paths):
            _place(pos, p[-1], q[i])
        for i, p in enumerate(paths):
            hit = p.index(paths[i - 1][-1])
            end = len(p) - 1
            for j in range(1, end):
                if j == hit:
                    continue
                t = PINWHEEL_T * j / hit if j < hit else PINWHEEL_T + (1 - PINWHEEL_T) * (j - hit) / (end - hit)
                _place(pos, p[j], lerp(o[i], q[i], t))
        ccw = H.outer_ccw()
        cells = []
        central = []
        for i in range(3):
            p = paths[i]
            a = p.index(paths[i - 1][-1])
            central.extend(p[a:-1])
        cells.append(tuple(central))
        for i in range(3):
            p, nxt, third = paths[i], paths[(i + 1) % 3], paths[(i + 2) % 3]
            back = tuple(reversed(nxt[: nxt.index(p[-1]) + 1]))
            rim = _outer_arc(ccw, nxt[0], p[0], third[0])
            cells.append(p + back[1:] + rim[1:-1])
        for cyc in cells:
            self.extend(closed_interior(H, cyc), pos)


def pinwheel_points(o: Sequence, t=PINWHEEL_T) -> list:
    """Solve ``q_i = (1-t) o_{i+1} + t q_{i+1}`` for the three inner ends."""
    t = Fraction(t)
    den = 1 - t**3
    out = []
    for i in range(3):
        a, b, c = o[(i + 1) % 3], o[(i + 2) % 3], o[i]
        x = (1 - t) * (a.x + t * b.x + t * t * c.x) / den
        y = (1 - t) * (a.y + t * b.y + t * t * c.y) / den
        out.append(Point(x, y))
    return out


def _outer_arc(ccw: Sequence, a, b, avoid) -> tuple:
    arc = cycle_subpath(ccw, a, b)
    if avoid in arc:
        arc = tuple(reversed(cycle_subpath(ccw, b, a)))
    return arc


def _place(pos: dict, v, p: Point) -> None:
    if v in pos:
        if pos[v] != p:
            raise AssertionError(f"vertex {v} placed twice at different points")
        return
    pos[v] = p


def _separated_outer_pair(poly: ConvexPolygonDrawing):
    """First two outer vertices (in ccw order) that share no side."""
    sides = [set(s) for s in poly.sides()]
    order = poly.order
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            a, b = order[i], order[j]
            if not any(a in s and b in s for s in sides):
                return a, b
    raise AssertionError("every pair of outer vertices shares a side")


def _short_face_path(H: PlaneGraph, u, v) -> Optional[tuple]:
    """An internal ``u``-``v`` path along an internal face, at most two edges short of it."""
    for fi in H.internal_faces():
        face = H.faces[fi]
        if u not in face or v not in face:
            continue
        for path in (cycle_subpath(face, u, v), tuple(reversed(cycle_subpath(face, v, u)))):
            if len(path) - 1 <= len(face) - 2 and is_internal_path(H, path):
                return path
    return None


def outer_triangle(graph: PlaneGraph) -> dict:
    """Outer vertices on the three sides of a right triangle, scaled past n^2."""
    ccw = list(graph.outer_ccw())
    k = len(ccw)
    scale = 1
    while scale < graph.n * graph.n:
        scale *= 2
    corners = [Point(0, 0), Point(scale, 0), Point(0, scale)]
    for a, b, c in _corner_choices(k):
        pos = {}
        cut = [a, b, c, a + k]
        for side in range(3):
            lo, hi = cut[side], cut[side + 1]
            for i in range(lo, hi):
                pos[ccw[i % k]] = lerp(corners[side], corners[(side + 1) % 3], Fraction(i - lo, hi - lo))
        poly = ConvexPolygonDrawing(tuple(ccw), pos)
        if is_compatible(poly, graph):
            return pos
    raise NotCompatible("no compatible triangle for the outer face")


def _corner_choices(k: int):
    first = (0, k // 3 if k >= 3 else 1, (2 * k) // 3)
    yield first
    for a in range(k):
        for b in range(a + 1, k):
            for c in range(b + 1, k):
                if (a, b, c) != first and a == 0:
                    yield (a, b, c)


def draw_4regular(graph: PlaneGraph, check: bool = True) -> dict:
    """Convex drawing with the outer face on three segments and at most n+3 segments."""
    if not is_biconnected(graph) or not is_3connected(graph):
        raise PreconditionViolated("3-connected")
    if not is_internally_4regular(graph):
        raise PreconditionViolated("internally 4-regular")
    pos = outer_triangle(graph)
    return draw_convex(graph, ConvexPolygonDrawing(tuple(graph.outer_ccw()), pos), check=check)
