"""Arches, left/right alignment of paths, and archfree windmills.

A path ``P`` is arched by an internal face ``a`` between two of its
vertices ``u, v`` that lie on ``a`` when the stretch of ``P`` from ``u`` to
``v`` meets the boundary of ``a`` only in ``u`` and ``v``.  Such a stretch
can never be drawn straight inside a convex drawing, so the drawing code
only ever splits along archfree paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .errors import (
    NoStrictlyInternalFace,
    NotInternally3Connected,
    PathNotInternal,
    PreconditionViolated,
)
from .plane_graph import (
    PlaneGraph,
    cycle_subpath,
    is_biconnected,
    is_internal_path,
    is_internally_3connected,
    is_simple_path,
    strictly_internal_face,
    vertex_disjoint_paths,
    with_apex,
)


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Arch:
    face: tuple
    u: object
    v: object
    side: Side
    i: int  # position of u on the path
    j: int  # position of v on the path

    @property
    def span(self) -> int:
        return self.j - self.i


def _neighbour_context(G: PlaneGraph, path: Sequence, host: Optional[Sequence]):
    """Predecessor of the first and successor of the last vertex of ``path``.

    Inside a host path the real neighbours are used.  At an outer endpoint
    the outer boundary stands in for the missing edge, which makes the local
    side test agree with the cycle formed together with the outer face.
    """
    seq = list(host) if host is not None else list(path)
    if host is not None:
        k = len(path)
        start = next((i for i in range(len(seq) - k + 1) if tuple(seq[i : i + k]) == tuple(path)), None)
        if start is None:
            raise PathNotInternal("path is not a stretch of its host path")
    else:
        start = 0
    end = start + len(path) - 1
    walk = G.outer
    kw = len(walk)

    def before():
        if start > 0:
            return seq[start - 1]
        s = seq[0]
        if G.is_outer_vertex(s):
            return walk[(walk.index(s) + 1) % kw]
        return None

    def after():
        if end < len(seq) - 1:
            return seq[end + 1]
        t = seq[-1]
        if G.is_outer_vertex(t):
            return walk[(walk.index(t) - 1) % kw]
        return None

    return before(), after()


def _left_of(G: PlaneGraph, x, prev, nxt, face_index: int) -> bool:
    """Is the corner of face ``face_index`` at ``x`` left of the walk prev -> x -> nxt?"""
    rot = G.rotation[x]
    deg = len(rot)
    corner = next(w for w in rot if G.dart_face[(x, w)] == face_index)
    base = G.rotation_index(x, nxt)
    return (G.rotation_index(x, corner) - base) % deg < (G.rotation_index(x, prev) - base) % deg


def arch_candidates(G: PlaneGraph, path: Sequence) -> list:
    """``(face index, i, j)`` for every internal face arching ``path[i..j]``.

    Works for any simple path, including stretches of the outer boundary.
    """
    index = {v: k for k, v in enumerate(path)}
    out = []
    for fi in G.internal_faces():
        hits = sorted(index[v] for v in G.faces[fi] if v in index)
        for a, b in zip(hits, hits[1:]):
            if b == a + 1:
                x, y = path[a], path[b]
                if G.dart_face.get((x, y)) == fi or G.dart_face.get((y, x)) == fi:
                    continue
            out.append((fi, a, b))
    return out


def find_arches(G: PlaneGraph, path: Sequence, host: Optional[Sequence] = None) -> list:
    """All arches of ``path`` by internal faces, with their sides."""
    path = tuple(path)
    if not is_simple_path(G, path):
        raise PathNotInternal("path is not a simple path of the graph")
    if not is_internal_path(G, host if host is not None else path):
        raise PathNotInternal("path is not internal")
    first_prev, last_next = _neighbour_context(G, path, host)
    last = len(path) - 1
    arches = []
    for fi, a, b in arch_candidates(G, path):
        face = G.faces[fi]
        u, v = path[a], path[b]
        if a > 0 or first_prev is not None:
            prev = path[a - 1] if a > 0 else first_prev
            left = _left_of(G, u, prev, path[a + 1], fi)
        elif b < last or last_next is not None:
            nxt = path[b + 1] if b < last else last_next
            left = _left_of(G, v, path[b - 1], nxt, fi)
        else:
            raise PathNotInternal("cannot orient an arch spanning a path with inner endpoints")
        arches.append(Arch(face, u, v, Side.LEFT if left else Side.RIGHT, a, b))
    return arches


def is_archfree(G: PlaneGraph, path: Sequence, host: Optional[Sequence] = None) -> bool:
    return not find_arches(G, path, host)


def outermost_arch(arches: Sequence, side: Side) -> Optional[Arch]:
    cands = [a for a in arches if a.side == side]
    if not cands:
        return None
    return max(cands, key=lambda a: (a.span, -a.i))


def _align(G: PlaneGraph, path: Sequence, side: Side, host: Optional[Sequence]) -> tuple:
    path = tuple(path)
    host = tuple(host) if host is not None else None
    budget = 4 * len(G.faces) + 8
    for _ in range(budget):
        arch = outermost_arch(find_arches(G, path, host), side)
        if arch is None:
            return path
        if side is Side.LEFT:
            detour = cycle_subpath(arch.face, arch.u, arch.v)
        else:
            detour = tuple(reversed(cycle_subpath(arch.face, arch.v, arch.u)))
        new = path[: arch.i] + detour + path[arch.j + 1 :]
        if len(set(new)) != len(new):
            raise RuntimeError("alignment produced a non-simple path")
        if host is not None:
            k = next(i for i in range(len(host)) if host[i : i + len(path)] == path)
            host = host[:k] + new + host[k + len(path) :]
        path = new
    raise RuntimeError("alignment did not terminate")


def left_aligned(G: PlaneGraph, path: Sequence, host: Optional[Sequence] = None) -> tuple:
    """Push the path across every face arching it from the left."""
    return _align(G, path, Side.LEFT, host)


def right_aligned(G: PlaneGraph, path: Sequence, host: Optional[Sequence] = None) -> tuple:
    return _align(G, path, Side.RIGHT, host)


def archfree_version(G: PlaneGraph, path: Sequence) -> tuple:
    return right_aligned(G, left_aligned(G, path))


# windmills -------------------------------------------------------------------


@dataclass(frozen=True)
class Windmill:
    paths: tuple

    @property
    def outer_ends(self) -> tuple:
        return tuple(p[0] for p in self.paths)

    @property
    def inner_ends(self) -> tuple:
        return tuple(p[-1] for p in self.paths)


@dataclass
class WindmillReport:
    ok: bool
    violated: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_windmill(G: PlaneGraph, W) -> WindmillReport:
    """Check (W1)-(W4) and archfreeness, reporting the first failure."""
    paths = tuple(tuple(p) for p in (W.paths if isinstance(W, Windmill) else W))
    if len(paths) != 3:
        return WindmillReport(False, "shape", "a windmill has three paths")
    for k, p in enumerate(paths):
        if len(p) < 2 or not is_simple_path(G, p):
            return WindmillReport(False, "simple", f"path {k + 1} is not a simple path")
    o = [p[0] for p in paths]
    if len(set(o)) != 3 or not all(G.is_outer_vertex(x) for x in o):
        return WindmillReport(False, "W1", "outer endpoints must be distinct outer vertices")
    for k, p in enumerate(paths):
        if any(G.is_outer_vertex(x) for x in p[1:]):
            return WindmillReport(False, "W2", f"path {k + 1} revisits the outer face")
    for k in range(3):
        nxt = set(paths[(k + 1) % 3])
        if nxt.intersection(paths[k][1:-1]):
            return WindmillReport(False, "W3", f"interior of path {k + 1} meets path {(k + 1) % 3 + 1}")
    for k in range(3):
        if paths[k][-1] not in paths[(k + 1) % 3][1:-1]:
            return WindmillReport(False, "W4", f"end of path {k + 1} is not interior to the next path")
    for k, p in enumerate(paths):
        if find_arches(G, p):
            return WindmillReport(False, "archfree", f"path {k + 1} is arched")
    return WindmillReport(True)


def _face_arc(face: Sequence, a, b, avoid) -> tuple:
    """The ``a``-``b`` path on a face boundary that does not pass ``avoid``."""
    arc = cycle_subpath(face, a, b)
    if avoid in arc and avoid not in (a, b):
        arc = tuple(reversed(cycle_subpath(face, b, a)))
    return arc


def check_initial_paths(G: PlaneGraph, face: Sequence, paths: Sequence) -> Optional[str]:
    """Name of the first violated property of the initial path triple, if any."""
    fset = set(face)
    seen = set()
    for p in paths:
        if seen.intersection(p):
            return "P1"
        seen.update(p)
    for p in paths:
        if not G.is_outer_vertex(p[0]):
            return "P2"
        if p[-1] not in fset:
            return "P3"
        if any(G.is_outer_vertex(x) or x in fset for x in p[1:-1]):
            return "P4"
    for p in paths:
        if find_arches(G, p):
            return "P5"
    return None


def _check_windmill_preconditions(G: PlaneGraph, need_face: bool = True):
    if not is_biconnected(G):
        raise PreconditionViolated("graph must be biconnected")
    if max(G.degree(v) for v in G.rotation) > 4:
        raise PreconditionViolated("maximum degree exceeds 4")
    if not is_internally_3connected(G):
        raise PreconditionViolated("graph is not internally 3-connected")
    if need_face and strictly_internal_face(G) is None:
        raise PreconditionViolated("graph has no strictly internal face")


def initial_disjoint_paths(G: PlaneGraph, face: Optional[Sequence] = None) -> tuple:
    """Three disjoint archfree paths from the outer face to ``face``.

    Paths run from their outer end to their end on ``face`` and are ordered
    so that the outer ends appear clockwise along the outer face.
    """
    if face is None:
        face = strictly_internal_face(G)
        if face is None:
            raise NoStrictlyInternalFace("no strictly internal face")
    face = tuple(face)
    if G.outer_vertices.intersection(face):
        raise NoStrictlyInternalFace("face touches the outer face")
    if not is_biconnected(G) or not is_internally_3connected(G):
        raise NotInternally3Connected("graph is not internally 3-connected")
    adj, apex = with_apex(G.rotation, face)
    raw = vertex_disjoint_paths(adj, apex, G.outer_vertices, 3)
    if len(raw) < 3:
        raise NotInternally3Connected("fewer than three disjoint paths to the outer face")
    fset = set(face)
    paths = []
    for walk in raw:
        walk = walk[1:]
        cut = max(k for k, x in enumerate(walk) if x in fset)
        p = tuple(reversed(walk[cut:]))
        paths.append(archfree_version(G, p))
    outer = G.outer
    paths.sort(key=lambda p: outer.index(p[0]))
    bad = check_initial_paths(G, face, paths)
    if bad is not None:
        raise RuntimeError(f"initial paths violate {bad}")
    return tuple(paths)


@dataclass
class ArchWitness:
    face: tuple
    s: object
    t: object
    big: bool


@dataclass
class WindmillTrace:
    face: tuple = ()
    initial: tuple = ()
    stages: dict = field(default_factory=dict)
    arches: dict = field(default_factory=dict)
    chosen: str = ""


def _witness(G, path, side, big_target) -> Optional[ArchWitness]:
    arch = outermost_arch(find_arches(G, path), side)
    if arch is None:
        return None
    return ArchWitness(arch.face, arch.u, arch.v, arch.v == big_target)


def find_archfree_windmill(G: PlaneGraph):
    """An archfree windmill, built by successive repairs of a pinwheel triple.

    Returns ``(Windmill, WindmillTrace)``.  Each candidate triple is
    validated in turn and the first archfree windmill is returned.
    """
    _check_windmill_preconditions(G)
    face = strictly_internal_face(G)
    P = initial_disjoint_paths(G, face)
    f = [p[-1] for p in P]
    trace = WindmillTrace(face=face, initial=P)
    nx = lambda i: (i + 1) % 3  # noqa: E731
    pv = lambda i: (i - 1) % 3  # noqa: E731

    Pcw = [P[i] + _face_arc(face, f[i], f[nx(i)], f[pv(i)])[1:] for i in range(3)]
    Pccw = [P[i] + _face_arc(face, f[i], f[pv(i)], f[nx(i)])[1:] for i in range(3)]
    trace.stages["P_cw"] = tuple(Pcw)
    trace.stages["P_ccw"] = tuple(Pccw)

    def attempt(name, triple):
        if validate_windmill(G, triple).ok:
            trace.chosen = name
            return Windmill(tuple(tuple(p) for p in triple))
        return None

    cw_order = lambda t: (t[0], t[1], t[2])  # noqa: E731
    ccw_order = lambda t: (t[0], t[2], t[1])  # noqa: E731

    for name, triple, order in (("P_cw", Pcw, cw_order), ("P_ccw", Pccw, ccw_order)):
        w = attempt(name, order(triple))
        if w:
            return w, trace

    a_cw = [_witness(G, Pcw[i], Side.LEFT, f[nx(i)]) for i in range(3)]
    a_ccw = [_witness(G, Pccw[i], Side.RIGHT, f[pv(i)]) for i in range(3)]
    trace.arches["cw"] = a_cw
    trace.arches["ccw"] = a_ccw
    Qcw = [left_aligned(G, Pcw[i]) for i in range(3)]
    Qccw = [right_aligned(G, Pccw[i]) for i in range(3)]
    trace.stages["Q_cw"] = tuple(Qcw)
    trace.stages["Q_ccw"] = tuple(Qccw)
    for name, triple, order in (("Q_cw", Qcw, cw_order), ("Q_ccw", Qccw, ccw_order)):
        w = attempt(name, order(triple))
        if w:
            return w, trace

    Rcw = []
    for i in range(3):
        a = a_cw[nx(i)]
        Rcw.append(Qcw[i] if a is None else Qcw[i] + _face_arc(face, f[nx(i)], a.t, f[i])[1:])
    Rccw = []
    for i in range(3):
        a = a_ccw[pv(i)]
        Rccw.append(Qccw[i] if a is None else Qccw[i] + _face_arc(face, f[pv(i)], a.t, f[i])[1:])
    trace.stages["R_cw"] = tuple(Rcw)
    trace.stages["R_ccw"] = tuple(Rccw)
    for name, triple, order in (("R_cw", Rcw, cw_order), ("R_ccw", Rccw, ccw_order)):
        w = attempt(name, order(triple))
        if w:
            return w, trace

    for i in range(3):
        acw, accw = a_cw[i], a_ccw[i]
        if not (acw and acw.big and a_cw[nx(i)] is None and accw and accw.big):
            continue
        pos_cw = P[i].index(acw.s)
        pos_ccw = P[i].index(accw.s)

        def cw_branch():
            tail = tuple(reversed(P[i][pos_cw:]))
            S = Pcw[(i + 2) % 3] + tail[1:]
            T = left_aligned(G, S)
            trace.stages["S_cw"] = S
            trace.stages["T_cw"] = T
            return attempt(f"T_cw[{i + 1}]", (Qcw[i], Pcw[nx(i)], T))

        def ccw_branch():
            tail = tuple(reversed(P[i][pos_ccw:]))
            S = Pccw[nx(i)] + tail[1:]
            T = right_aligned(G, S)
            trace.stages["S_ccw"] = S
            trace.stages["T_ccw"] = T
            return attempt(f"T_ccw[{i + 1}]", (Qccw[i], Pccw[pv(i)], T))

        branches = (cw_branch, ccw_branch) if pos_cw >= pos_ccw else (ccw_branch, cw_branch)
        for branch in branches:
            w = branch()
            if w:
                return w, trace
    raise RuntimeError("no archfree windmill found; input violates the preconditions")
