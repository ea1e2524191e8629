"""Plane graphs given by a rotation system plus a distinguished outer face.

Conventions used throughout the package:

* ``rotation[v]`` lists the neighbours of ``v`` in counterclockwise order.
* Faces are traced with the successor rule ``(u, v) -> (v, w)`` where ``w``
  precedes ``u`` in the rotation of ``v``.  Each face walk therefore keeps
  its face on the left, so internal faces come out counterclockwise and the
  outer face walk runs clockwise around the drawing.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from typing import Hashable, Optional

from .errors import (
    DegenerateInput,
    Disconnected,
    NotACycle,
    NotBiconnected,
    NotPlanarEmbedding,
    NotSimple,
)
from .geometry import Point, orient

Vertex = Hashable
Path = tuple
Dart = tuple


class PlaneGraph:
    """Immutable plane graph.  Use :func:`build` to construct one."""

    __slots__ = ("rotation", "faces", "dart_face", "outer_index", "_pos", "_outer_set")

    def __init__(self, rotation: Mapping, outer_dart: Optional[Dart] = None):
        self.rotation = {v: tuple(nbrs) for v, nbrs in rotation.items()}
        self._pos = {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in self.rotation.items()}
        self._validate_simple()
        self.faces, self.dart_face = self._trace_faces()
        n, m, f = self.n, self.m, len(self.faces)
        if n - m + f != 2:
            raise NotPlanarEmbedding(f"Euler check failed: n={n} m={m} f={f}")
        if outer_dart is None:
            self.outer_index = max(range(f), key=lambda i: (len(self.faces[i]), -i))
        else:
            if tuple(outer_dart) not in self.dart_face:
                raise NotPlanarEmbedding(f"outer dart {outer_dart} is not an edge")
            self.outer_index = self.dart_face[tuple(outer_dart)]
        self._outer_set = frozenset(self.faces[self.outer_index])

    # construction helpers -------------------------------------------------

    def _validate_simple(self) -> None:
        for v, nbrs in self.rotation.items():
            if v in nbrs:
                raise NotSimple(f"loop at {v}")
            if len(set(nbrs)) != len(nbrs):
                raise NotSimple(f"multi-edge at {v}")
            for w in nbrs:
                if w not in self._pos or v not in self._pos[w]:
                    raise NotSimple(f"edge {v}-{w} is not symmetric")
        if not self.rotation:
            raise Disconnected("empty graph")
        start = next(iter(self.rotation))
        if len(_reachable(self.rotation, start)) != len(self.rotation):
            raise Disconnected("graph is not connected")

    def _trace_faces(self):
        dart_face: dict = {}
        faces = []
        for v in self.rotation:
            for w in self.rotation[v]:
                if (v, w) in dart_face:
                    continue
                idx = len(faces)
                walk = []
                a, b = v, w
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = idx
                    walk.append(a)
                    a, b = b, self.next_in_face(a, b)
                faces.append(tuple(walk))
        return faces, dart_face

    # basic queries -------------------------------------------------------

    def next_in_face(self, u, v):
        """Head of the dart following ``(u, v)`` on the face left of it."""
        rot = self.rotation[v]
        return rot[(self._pos[v][u] - 1) % len(rot)]

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation.values()) // 2

    @property
    def vertices(self) -> list:
        return list(self.rotation)

    def edges(self) -> list:
        seen = set()
        out = []
        for v, nbrs in self.rotation.items():
            for w in nbrs:
                if (w, v) not in seen:
                    seen.add((v, w))
                    out.append((v, w))
        return out

    def degree(self, v) -> int:
        return len(self.rotation[v])

    def has_edge(self, u, v) -> bool:
        return u in self._pos and v in self._pos[u]

    def rotation_index(self, v, w) -> int:
        return self._pos[v][w]

    @property
    def outer(self) -> tuple:
        """Outer face walk (outer face on the left, i.e. clockwise)."""
        return self.faces[self.outer_index]

    def outer_ccw(self) -> tuple:
        """Outer boundary with the graph interior on the left."""
        w = self.outer
        return (w[0],) + tuple(reversed(w[1:]))

    @property
    def outer_vertices(self) -> frozenset:
        return self._outer_set

    def is_outer_vertex(self, v) -> bool:
        return v in self._outer_set

    def is_outer_edge(self, u, v) -> bool:
        o = self.outer_index
        return self.dart_face.get((u, v)) == o or self.dart_face.get((v, u)) == o

    def internal_faces(self) -> list:
        return [i for i in range(len(self.faces)) if i != self.outer_index]

    def face_of_dart(self, u, v) -> int:
        return self.dart_face[(u, v)]

    def adjacency(self) -> dict:
        return dict(self.rotation)

    def to_rotation_lists(self) -> dict:
        return {v: list(r) for v, r in self.rotation.items()}

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, faces={len(self.faces)}, outer={self.outer})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self.rotation == other.rotation and set(_darts(self.outer)) == set(_darts(other.outer))

    def __hash__(self):
        return hash((frozenset(self.rotation.items()), frozenset(_darts(self.outer))))


def _darts(walk: Sequence) -> list:
    return [(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]


def face_darts(walk: Sequence) -> list:
    """Directed edges of a closed walk."""
    return _darts(walk)


def _reachable(adj: Mapping, start, removed: frozenset = frozenset()) -> set:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen and w not in removed:
                seen.add(w)
                stack.append(w)
    return seen


def build(n: int, rotations, outer_face_hint=None) -> PlaneGraph:
    """Build a plane graph on vertices ``0..n-1`` (or the keys of a mapping).

    ``outer_face_hint`` may be a list of directed edges or a vertex cycle.
    The face traced through the first directed edge becomes the outer face;
    if the edges were given in the opposite orientation the reversed darts
    are tried as well.
    """
    if isinstance(rotations, Mapping):
        rot = {v: list(r) for v, r in rotations.items()}
    else:
        rot = {v: list(r) for v, r in enumerate(rotations)}
    if len(rot) != n:
        raise NotSimple(f"expected {n} rotation lists, got {len(rot)}")
    graph = PlaneGraph(rot)
    if outer_face_hint is None:
        return graph
    darts = _hint_darts(outer_face_hint)
    for cand in (darts, [(b, a) for a, b in darts]):
        faces = {graph.dart_face.get(d) for d in cand}
        if len(faces) == 1 and None not in faces:
            return PlaneGraph(rot, cand[0])
    raise NotPlanarEmbedding("outer face hint does not describe a face")


def _hint_darts(hint) -> list:
    hint = list(hint)
    if hint and isinstance(hint[0], (list, tuple)):
        return [tuple(e) for e in hint]
    return _darts(hint)


# connectivity ----------------------------------------------------------------


def articulation_points(adj: Mapping, removed: Iterable = ()) -> set:
    """Cut vertices of the graph ``adj`` minus ``removed`` (iterative Tarjan)."""
    removed = set(removed)
    disc: dict = {}
    low: dict = {}
    cut = set()
    timer = 0
    for root in adj:
        if root in removed or root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w in removed or w == parent:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if parent == root:
                    children += 1
                elif low[v] >= disc[parent]:
                    cut.add(parent)
        if children > 1:
            cut.add(root)
    return cut


def is_connected_adj(adj: Mapping, removed: Iterable = ()) -> bool:
    removed = frozenset(removed)
    rest = [v for v in adj if v not in removed]
    if not rest:
        return True
    return len(_reachable(adj, rest[0], removed)) == len(rest)


def is_biconnected_adj(adj: Mapping) -> bool:
    return len(adj) >= 3 and is_connected_adj(adj) and not articulation_points(adj)


def is_3connected_adj(adj: Mapping) -> bool:
    if len(adj) < 4 or not is_biconnected_adj(adj):
        return False
    for x in adj:
        if not is_connected_adj(adj, (x,)) or articulation_points(adj, (x,)):
            return False
    return True


def is_biconnected(G: PlaneGraph) -> bool:
    return is_biconnected_adj(G.rotation)


def _require_biconnected(G: PlaneGraph) -> None:
    if not is_biconnected(G):
        raise NotBiconnected("graph is not biconnected")


def is_3connected(G: PlaneGraph) -> bool:
    _require_biconnected(G)
    return is_3connected_adj(G.rotation)


def separation_pairs(G: PlaneGraph) -> list:
    """All vertex pairs whose removal disconnects ``G``, sorted by rotation order."""
    _require_biconnected(G)
    order = {v: i for i, v in enumerate(G.rotation)}
    pairs = set()
    for u in G.rotation:
        for v in articulation_points(G.rotation, (u,)):
            pairs.add(tuple(sorted((u, v), key=order.__getitem__)))
    return sorted(pairs, key=lambda p: (order[p[0]], order[p[1]]))


def find_external_separation_pair(G: PlaneGraph):
    """A separation pair, preferring pairs on the outer face; ``None`` if 3-connected."""
    pairs = separation_pairs(G)
    if not pairs:
        return None
    outer = G.outer_vertices
    for p in pairs:
        if p[0] in outer and p[1] in outer:
            return p
    return pairs[0]


class _Apex:
    def __repr__(self):
        return "<apex>"


def with_apex(adj: Mapping, attach: Iterable):
    """Adjacency dict with a fresh vertex joined to every vertex of ``attach``."""
    apex = _Apex()
    attach = list(attach)
    new = {v: list(nbrs) for v, nbrs in adj.items()}
    for v in attach:
        new[v].append(apex)
    new[apex] = attach
    return new, apex


def is_internally_3connected(G: PlaneGraph) -> bool:
    _require_biconnected(G)
    adj, _ = with_apex(G.rotation, G.outer)
    return is_3connected_adj(adj)


def is_internally_4regular(G: PlaneGraph) -> bool:
    for v, nbrs in G.rotation.items():
        d = len(nbrs)
        if G.is_outer_vertex(v):
            if d > 4:
                return False
        elif d != 4:
            return False
    return True


def strictly_internal_face(G: PlaneGraph):
    """First internal face without outer vertices, as a vertex walk, else ``None``."""
    outer = G.outer_vertices
    for i in G.internal_faces():
        face = G.faces[i]
        if not outer.intersection(face):
            return face
    return None


# disjoint paths ---------------------------------------------------------------


def vertex_disjoint_paths(adj: Mapping, source, targets: Iterable, limit: Optional[int] = None) -> list:
    """Maximum set of paths from ``source`` to ``targets``, disjoint except at ``source``.

    Unit vertex capacities via vertex splitting and BFS augmenting paths.
    Each path ends at the first target vertex it meets.  Neighbour order is
    taken from ``adj``, so results are deterministic.
    """
    targets = set(targets)
    targets.discard(source)
    sink = ("sink",)
    cap: dict = {}
    orig: dict = {}
    graph: dict = {}

    def arc(a, b):
        graph.setdefault(a, []).append(b)
        graph.setdefault(b, []).append(a)
        cap[(a, b)] = orig[(a, b)] = 1
        cap.setdefault((b, a), 0)

    for v in adj:
        if v != source:
            arc((v, 0), (v, 1))
    for v, nbrs in adj.items():
        for w in nbrs:
            if w != source:
                arc((v, 1), (w, 0))
    for t in targets:
        arc((t, 1), sink)
    start = (source, 1)
    flows = 0
    while limit is None or flows < limit:
        parent = {start: None}
        queue = deque([start])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in graph.get(a, ()):
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flows += 1
    carried: dict = {}
    for (a, b), c in orig.items():
        if cap[(a, b)] < c:
            carried.setdefault(a, []).append(b)
    paths = []
    for _ in range(flows):
        walk = [source]
        node = start
        while node != sink:
            node = carried[node].pop(0)
            if node != sink and node[1] == 0:
                walk.append(node[0])
        for i, v in enumerate(walk[1:], start=1):
            if v in targets:
                walk = walk[: i + 1]
                break
        paths.append(tuple(walk))
    return paths


def has_three_paths_to_outer(G: PlaneGraph) -> bool:
    """Check of the (I2) characterisation: three fans from every internal vertex."""
    outer = G.outer_vertices
    for v in G.rotation:
        if v in outer:
            continue
        if len(vertex_disjoint_paths(G.rotation, v, outer, 3)) < 3:
            return False
    return True


# surgery ----------------------------------------------------------------------


def _interior_faces(G: PlaneGraph, cycle: Sequence) -> set:
    cyc_edges = {frozenset(e) for e in _darts(cycle)}
    a, b = cycle[0], cycle[1]

    def flood(start):
        seen = {start}
        stack = [start]
        while stack:
            fi = stack.pop()
            for x, y in _darts(G.faces[fi]):
                if frozenset((x, y)) in cyc_edges:
                    continue
                g = G.dart_face[(y, x)]
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return seen

    left = flood(G.dart_face[(a, b)])
    if G.outer_index not in left:
        return left
    right = flood(G.dart_face[(b, a)])
    if G.outer_index in right:
        raise NotACycle("cycle does not separate the plane")
    return right


def check_cycle(G: PlaneGraph, cycle: Sequence) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle("a cycle needs at least three distinct vertices")
    for x, y in _darts(cycle):
        if x not in G.rotation or not G.has_edge(x, y):
            raise NotACycle(f"{x}-{y} is not an edge")


def interior_faces(G: PlaneGraph, cycle: Sequence) -> set:
    """Indices of the faces enclosed by a simple cycle."""
    check_cycle(G, cycle)
    return _interior_faces(G, cycle)


def closed_interior(G: PlaneGraph, cycle: Sequence) -> PlaneGraph:
    """Plane subgraph of everything on or inside ``cycle``, with ``cycle`` outer."""
    check_cycle(G, cycle)
    inside = _interior_faces(G, cycle)
    keep = set()
    for fi in inside:
        keep.update(_darts(G.faces[fi]))
    rot = {}
    for v, nbrs in G.rotation.items():
        r = [w for w in nbrs if (v, w) in keep or (w, v) in keep]
        if r:
            rot[v] = r
    outer_dart = next(d for d in _darts(cycle) + [(y, x) for x, y in _darts(cycle)] if d not in keep)
    return PlaneGraph(rot, outer_dart)


def remove_degree2_vertex(G: PlaneGraph, v) -> PlaneGraph:
    """Suppress a degree-2 vertex ``v``: its two edges become one edge ``uw``.

    If ``uw`` is already present the vertex is simply deleted.
    """
    if G.degree(v) != 2:
        raise DegenerateInput(f"{v} does not have degree 2")
    u, w = G.rotation[v]
    rot = {x: list(r) for x, r in G.rotation.items() if x != v}
    if G.has_edge(u, w):
        rot[u].remove(v)
        rot[w].remove(v)
    else:
        rot[u][rot[u].index(v)] = w
        rot[w][rot[w].index(v)] = u
    walk = list(G.outer)
    if v in walk:
        i = walk.index(v)
        outer_dart = (walk[i - 1], walk[(i + 1) % len(walk)])
    else:
        outer_dart = (walk[0], walk[1])
    return PlaneGraph(rot, outer_dart)


def merge_flat_degree2(G: PlaneGraph, polygon: Mapping):
    """Remove outer degree-2 vertices drawn with a straight angle.

    ``polygon`` maps outer vertices to points.  Returns the reduced graph and
    a map ``removed vertex -> (u, w)`` naming the neighbours it sat between
    when it was removed, so it can be reinstated at its original position.
    """
    removed = {}
    changed = True
    while changed:
        changed = False
        for v in G.outer:
            if G.degree(v) != 2 or len(G.outer) <= 3:
                continue
            u, w = G.rotation[v]
            if orient(polygon[u], polygon[v], polygon[w]) != 0:
                continue
            if G.has_edge(u, w):
                raise DegenerateInput(f"flat vertex {v} sits on a triangle {u}-{v}-{w}")
            removed[v] = (u, w)
            G = remove_degree2_vertex(G, v)
            changed = True
            break
    return G, removed


def path_edges(path: Sequence) -> list:
    return [(path[i], path[i + 1]) for i in range(len(path) - 1)]


def is_simple_path(G: PlaneGraph, path: Sequence) -> bool:
    if len(set(path)) != len(path):
        return False
    return all(G.has_edge(a, b) for a, b in path_edges(path))


def is_internal_path(G: PlaneGraph, path: Sequence) -> bool:
    """Edges and interior vertices avoid the outer face."""
    if any(G.is_outer_vertex(x) for x in path[1:-1]):
        return False
    return not any(G.is_outer_edge(a, b) for a, b in path_edges(path))


def cycle_subpath(cycle: Sequence, u, v) -> tuple:
    """Vertices from ``u`` to ``v`` following the cyclic order of ``cycle``."""
    k = len(cycle)
    i = cycle.index(u)
    out = [u]
    while cycle[i % k] != v:
        i += 1
        out.append(cycle[i % k])
    return tuple(out)


def bfs_path(adj: Mapping, s, t, allowed) -> Optional[tuple]:
    """Shortest ``s``-``t`` path whose interior vertices lie in ``allowed``."""
    parent = {s: None}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y in parent:
                continue
            if y == t:
                parent[y] = x
                out = [t]
                while parent[out[-1]] is not None:
                    out.append(parent[out[-1]])
                return tuple(reversed(out))
            if y in allowed:
                parent[y] = x
                queue.append(y)
    return None


def point_map(positions: Mapping) -> dict:
    return {v: p if isinstance(p, Point) else Point(*p) for v, p in positions.items()}
