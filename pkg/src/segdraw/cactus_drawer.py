"""Segment number of cacti and drawings that meet it.

Every block of a cactus is a bridge or a simple cycle.  The drawing pairs
the edges at each vertex into straight continuations; a vertex keeps one
unpaired edge when its degree is odd, and each cycle with fewer than three
cut vertices gets just enough degree-2 corners to become a triangle.  The
segments are then read off the pairing, which is the certificate.

Coordinates are built exactly (rational) so that every certified
collinearity holds exactly; the returned drawing is in floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .errors import NotACactus, PreconditionViolated
from .geometry import Point
from .plane_graph import PlaneGraph

KAPPA = Fraction(1, 2)  # bulge of the corner arc of a cycle polygon
SHRINK = 0.9  # safety margin on every sub-radius


class OpCounter:
    """Counts elementary steps; used to check that the census is linear."""

    def __init__(self):
        self.count = 0

    def tick(self, k: int = 1) -> None:
        self.count += k


# input handling ---------------------------------------------------------------


def _as_adjacency(graph) -> tuple[dict, Optional[dict]]:
    """Adjacency sets plus the rotation system if one was supplied."""
    if isinstance(graph, PlaneGraph):
        rot = {v: list(ns) for v, ns in graph.rotation.items()}
        return {v: set(ns) for v, ns in rot.items()}, rot
    if isinstance(graph, Mapping):
        rot = {v: list(ns) for v, ns in graph.items()}
        adj = {v: set(ns) for v, ns in rot.items()}
        for v, ns in adj.items():
            for w in ns:
                if v not in adj.get(w, ()):
                    raise NotACactus(f"rotation lists are not symmetric at {v!r}-{w!r}")
        return adj, rot
    adj: dict = {}
    for a, b in graph:
        if a == b:
            raise NotACactus("self-loop")
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj, None


# block-cut tree ---------------------------------------------------------------


@dataclass
class BlockCutTree:
    """Blocks (bridges as vertex pairs, cycles in cyclic order) and cut vertices."""

    blocks: list
    cut_vertices: set
    blocks_at: dict  # vertex -> indices of blocks containing it
    root: Optional[int] = None

    def is_cycle(self, i: int) -> bool:
        return len(self.blocks[i]) > 2

    def tree_edges(self) -> list:
        return [(i, v) for v in sorted(self.cut_vertices, key=repr) for i in self.blocks_at[v]]

    def cut_count(self, i: int) -> int:
        return sum(1 for v in self.blocks[i] if v in self.cut_vertices)


def _biconnected_components(adj: Mapping, ops: Optional[OpCounter]) -> list:
    """Edge sets of the blocks (iterative Hopcroft-Tarjan)."""
    disc: dict = {}
    low: dict = {}
    comps = []
    t = 0
    for root in adj:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, None, iter(adj[root]))]
        edges: list = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if ops:
                    ops.tick()
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = t
                    t += 1
                    edges.append((v, w))
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edges.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp = []
                    while True:
                        e = edges.pop()
                        comp.append(e)
                        if ops:
                            ops.tick()
                        if e == (parent, v):
                            break
                    comps.append(comp)
    return comps


def block_cut_tree(graph, ops: Optional[OpCounter] = None) -> BlockCutTree:
    adj, _ = _as_adjacency(graph)
    if not adj:
        raise NotACactus("empty graph")
    comps = _biconnected_components(adj, ops)
    seen = set()
    for comp in comps:
        for e in comp:
            seen.update(e)
    if len(adj) > 1 and len(seen) != len(adj) or len(adj) == 1 and comps:
        raise NotACactus("graph is disconnected")
    if len(adj) > 1 and sum(1 for _ in _reach(adj)) != len(adj):
        raise NotACactus("graph is disconnected")
    blocks = []
    for comp in comps:
        if len(comp) == 1:
            blocks.append(tuple(comp[0]))
            continue
        local: dict = {}
        for a, b in comp:
            local.setdefault(a, []).append(b)
            local.setdefault(b, []).append(a)
        if len(comp) != len(local) or any(len(ns) != 2 for ns in local.values()):
            raise NotACactus("a block is neither an edge nor a cycle")
        start = comp[0][0]
        cyc = [start]
        prev, cur = start, local[start][0]
        while cur != start:
            if ops:
                ops.tick()
            cyc.append(cur)
            a, b = local[cur]
            prev, cur = cur, (b if a == prev else a)
        blocks.append(tuple(cyc))
    blocks_at: dict = {v: [] for v in adj}
    for i, b in enumerate(blocks):
        for v in b:
            blocks_at[v].append(i)
    cuts = {v for v, bs in blocks_at.items() if len(bs) > 1}
    return BlockCutTree(blocks, cuts, blocks_at, 0 if blocks else None)


def _reach(adj: Mapping):
    start = next(iter(adj))
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        yield v
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)


# census -----------------------------------------------------------------------


@dataclass(frozen=True)
class CactusCensus:
    eta: int  # odd-degree vertices
    c0: int
    c1: int
    c2: int

    @property
    def gamma(self) -> int:
        return 3 * self.c0 + 2 * self.c1 + self.c2

    @property
    def segments(self) -> int:
        return self.eta // 2 + self.gamma


def census(graph, ops: Optional[OpCounter] = None) -> CactusCensus:
    adj, _ = _as_adjacency(graph)
    tree = block_cut_tree(adj, ops)
    eta = 0
    for v, ns in adj.items():
        if ops:
            ops.tick()
        eta += len(ns) % 2
    counts = [0, 0, 0]
    for i, b in enumerate(tree.blocks):
        if not tree.is_cycle(i):
            continue
        if ops:
            ops.tick(len(b))
        j = tree.cut_count(i)
        if j < 3:
            counts[j] += 1
    return CactusCensus(eta, *counts)


def seg_number_cactus(graph, ops: Optional[OpCounter] = None) -> int:
    return census(graph, ops).segments


# embedding --------------------------------------------------------------------


def canonical_rotation(tree: BlockCutTree, adj: Mapping) -> dict:
    """Rotation grouping each vertex's edges by block, cycles as faces."""
    rot: dict = {v: [] for v in adj}
    for i, b in enumerate(tree.blocks):
        if tree.is_cycle(i):
            k = len(b)
            for j, v in enumerate(b):
                rot[v].extend([b[(j + 1) % k], b[j - 1]])
        else:
            rot[b[0]].append(b[1])
            rot[b[1]].append(b[0])
    return rot


def _follows(rot: list, a, b) -> bool:
    """``b`` comes right after ``a`` in the cyclic list ``rot``."""
    i = rot.index(a)
    return rot[(i + 1) % len(rot)] == b


def _face_orders(tree: BlockCutTree, rot: Mapping) -> list:
    """Each cycle block re-ordered so it runs counterclockwise as a face.

    In that order, the successor ``x`` of every vertex ``v`` on the cycle is
    immediately followed by its predecessor in the rotation at ``v``.
    """
    out = []
    for i, b in enumerate(tree.blocks):
        if not tree.is_cycle(i):
            out.append(b)
            continue
        k = len(b)
        for cand in (b, (b[0],) + tuple(reversed(b[1:]))):
            if all(_follows(rot[cand[j]], cand[(j + 1) % k], cand[j - 1]) for j in range(k)):
                out.append(cand)
                break
        else:
            raise PreconditionViolated("embedding is not outerplane: a cycle is not a face")
    return out


# drawing ----------------------------------------------------------------------


@dataclass
class CactusDrawing:
    coords: dict  # vertex -> (float, float)
    exact: dict  # vertex -> Point
    certificate: list  # segments, each an ordered list of edges
    rotation: dict

    @property
    def segment_count(self) -> int:
        return len(self.certificate)


def _dyadic_floor(x: float, bits: int = 40) -> Fraction:
    return Fraction(math.floor(x * 2**bits), 2**bits)


def _norm(p: Point) -> float:
    return math.hypot(float(p.x), float(p.y))


def _unitish(p: Point) -> Point:
    """``p`` rescaled to roughly unit length (exactly the same direction)."""
    return p.scale(_dyadic_floor(1.0 / _norm(p)) or Fraction(1, 2**40))


def _rot90(p: Point) -> Point:
    return Point(-p.y, p.x)


def _blend(p: Point, q: Point, t: Fraction) -> Point:
    return p.scale(1 - t) + q.scale(t)


def _half_turn(p: Point, f: Fraction) -> Point:
    """Direction a fraction ``f`` in (0, 1) of the way from ``p`` round to ``-p``, ccw."""
    r = _rot90(p)
    if f <= Fraction(1, 2):
        return _blend(p, r, 2 * f)
    return _blend(r, p.scale(-1), 2 * f - 1)


def _angle(p: Point) -> float:
    return math.atan2(float(p.y), float(p.x))


def _ray_distance(q: Point, d: Point) -> float:
    """Distance from ``q`` (relative to the ray's origin) to the ray along ``d``."""
    qx, qy, dx, dy = float(q.x), float(q.y), float(d.x), float(d.y)
    dd = math.hypot(dx, dy)
    t = (qx * dx + qy * dy) / dd
    if t <= 0:
        return math.hypot(qx, qy)
    return abs(qx * dy - qy * dx) / dd


def _segment_distance(q: Point, a: Point, b: Point) -> float:
    qx, qy = float(q.x - a.x), float(q.y - a.y)
    dx, dy = float(b.x - a.x), float(b.y - a.y)
    L = dx * dx + dy * dy
    t = max(0.0, min(1.0, (qx * dx + qy * dy) / L))
    return math.hypot(qx - t * dx, qy - t * dy)


class _Builder:
    def __init__(self, adj: Mapping, rot: Mapping, tree: BlockCutTree, faces: list):
        self.adj = adj
        self.rot = rot
        self.tree = tree
        self.faces = faces
        self.pos: dict = {}
        self.pairs: list = []  # (edge, edge) straight continuations
        self.block_of: dict = {}
        for i, b in enumerate(faces):
            k = len(b)
            if tree.is_cycle(i):
                for j in range(k):
                    self.block_of[frozenset((b[j], b[(j + 1) % k]))] = i
            else:
                self.block_of[frozenset(b)] = i

    def block(self, v, w) -> int:
        return self.block_of[frozenset((v, w))]

    def pair(self, v, a, b) -> None:
        self.pairs.append((frozenset((v, a)), frozenset((v, b))))

    # slots at a vertex ------------------------------------------------------

    def slots(self, v, start: int, fixed: dict, corner: bool) -> dict:
        """Directions for every neighbour of ``v``, in rotation order from ``start``.

        ``fixed`` holds the already drawn directions (one or two of them, at
        the start of the order).  Pairs are recorded as a side effect.
        """
        rot = self.rot[v]
        order = rot[start:] + rot[:start]
        d = len(order)
        dirs = dict(fixed)
        if corner:
            return dirs
        if not fixed:
            return self._root_slots(v, order)
        if len(fixed) == 1:
            p = _unitish(fixed[order[0]])
            if d % 2 == 0:
                half = d // 2
                for j in range(1, half):
                    dirs[order[j]] = _half_turn(p, Fraction(j, half))
                dirs[order[half]] = p.scale(-1)
                for j in range(half):
                    if j:
                        dirs[order[half + j]] = dirs[order[j]].scale(-1)
                    self.pair(v, order[j], order[half + j])
            elif d == 3 and self.block(v, order[1]) == self.block(v, order[2]):
                # a lone child cycle: its two edges must not be paired together
                dirs[order[1]] = p.scale(-1)
                dirs[order[2]] = _half_turn(p.scale(-1), Fraction(1, 2))
                self.pair(v, order[0], order[1])
            else:
                half = (d - 1) // 2
                rest = order[1:]
                for j in range(half):
                    dirs[rest[j]] = _half_turn(p, Fraction(2 * j + 1, 2 * half))
                    dirs[rest[half + j]] = dirs[rest[j]].scale(-1)
                    self.pair(v, rest[j], rest[half + j])
            return dirs
        a, b = order[0], order[1]
        A, B = _unitish(fixed[a]), _unitish(fixed[b])
        if d == 2:
            self.pair(v, a, b)
            return dirs
        if d % 2 == 0:
            half = d // 2
            # free directions strictly between B and -A
            for j in range(2, half):
                dirs[order[j]] = _blend(B, A.scale(-1), Fraction(j - 1, half - 1))
            dirs[order[half]] = A.scale(-1)
            dirs[order[half + 1]] = B.scale(-1)
            for j in range(2, half):
                dirs[order[half + j]] = dirs[order[j]].scale(-1)
            for j in range(half):
                self.pair(v, order[j], order[half + j])
            return dirs
        # odd: the edge to b stays unpaired
        rest = [a] + order[2:]
        half = (d - 1) // 2
        for j in range(1, half):
            dirs[rest[j]] = _blend(B, A.scale(-1), Fraction(j, half))
        dirs[rest[half]] = A.scale(-1)
        for j in range(1, half):
            dirs[rest[half + j]] = dirs[rest[j]].scale(-1)
        for j in range(half):
            self.pair(v, rest[j], rest[half + j])
        return dirs

    def _root_slots(self, v, order: list) -> dict:
        d = len(order)
        # start right after a block boundary so a dropped slot never splits a cycle
        for s in range(d):
            if self.block(v, order[s - 1]) != self.block(v, order[s]):
                order = order[s:] + order[:s]
                break
        dirs = {}
        slots = d if d % 2 == 0 else d + 1
        half = slots // 2
        for j in range(d):
            if j >= half:
                dirs[order[j]] = dirs[order[j - half]].scale(-1)
                self.pair(v, order[j - half], order[j])
            else:
                ang = 2 * math.pi * j / slots
                dirs[order[j]] = Point(_dyadic_floor(math.cos(ang)), _dyadic_floor(math.sin(ang)))
        return dirs

    # recursive placement ----------------------------------------------------

    def place_children(self, v, dirs: dict, parent_block: Optional[int], radius: float) -> list:
        """Place the blocks hanging off ``v``; returns follow-up work items."""
        rot = self.rot[v]
        k = len(rot)
        angles = {w: _angle(dirs[w]) for w in rot}
        work = []
        done = set()
        for idx, w in enumerate(rot):
            blk = self.block(v, w)
            if blk == parent_block or blk in done:
                continue
            done.add(blk)
            if self.tree.is_cycle(blk):
                face = self.faces[blk]
                j = face.index(v)
                cyc = face[j:] + face[:j]
                first, last = cyc[1], cyc[-1]
                lo = self._mid(angles[rot[(rot.index(first) - 1) % k]], angles[first], ccw_back=True)
                hi = self._mid(angles[last], angles[rot[(rot.index(last) + 1) % k]])
                work.extend(self._cycle(v, cyc, dirs[first], dirs[last], radius, lo, hi))
            else:
                lo = self._mid(angles[rot[(idx - 1) % k]], angles[w], ccw_back=True)
                hi = self._mid(angles[w], angles[rot[(idx + 1) % k]])
                rho = radius / 2
                lam = _dyadic_floor(rho / _norm(dirs[w]))
                p = self.pos[v] + dirs[w].scale(lam)
                self.pos[w] = p
                rel = p - self.pos[v]
                r_w = SHRINK * min(radius - _norm(rel), _ray_distance(rel, lo), _ray_distance(rel, hi))
                work.append((w, blk, r_w))
        return work

    @staticmethod
    def _mid(a1: float, a2: float, ccw_back: bool = False) -> Point:
        """Unit vector halfway ccw from angle ``a1`` to ``a2``."""
        gap = (a2 - a1) % (2 * math.pi)
        if gap == 0:
            gap = 2 * math.pi
        m = a1 + gap / 2
        return Point(Fraction(math.cos(m)), Fraction(math.sin(m)))

    def _cycle(self, v, cyc: tuple, d_first: Point, d_last: Point, radius: float, lo: Point, hi: Point) -> list:
        L = len(cyc)
        cuts = [i for i in range(1, L) if len(self.adj[cyc[i]]) > 2]
        if not cuts:
            corners = [1, L - 1]
        elif len(cuts) == 1:
            corners = [1, cuts[0]] if cuts[0] != 1 else [1, 2]
        else:
            corners = cuts
        rho = radius / 2
        origin = self.pos[v]
        U1 = d_first.scale(_dyadic_floor(rho / _norm(d_first)))
        U2 = d_last.scale(_dyadic_floor(rho / _norm(d_last)))
        m = len(corners)
        at = {0: origin}
        for i, c in enumerate(corners):
            s = Fraction(i, m - 1)
            rel = U1.scale(1 - s) + U2.scale(s) + (U1 + U2).scale(KAPPA * s * (1 - s))
            at[c] = origin + rel
        ring = [0] + corners + [L]
        at[L] = origin
        for a, b in zip(ring, ring[1:]):
            for i in range(a + 1, b):
                t = Fraction(i - a, b - a)
                at[i] = at[a].scale(1 - t) + at[b].scale(t)
        for i in range(1, L):
            self.pos[cyc[i]] = at[i]
        poly = [at[i] for i in range(L)]
        corner_set = set(corners)
        work = []
        for i in range(1, L):
            w = cyc[i]
            if len(self.adj[w]) == 2:
                if i not in corner_set:
                    self.pair(w, cyc[i - 1], cyc[(i + 1) % L])
                continue
            q = poly[i]
            rel = q - origin
            near = [radius - _norm(rel), _ray_distance(rel, lo), _ray_distance(rel, hi)]
            for j in range(L):
                if j != i:
                    near.append(_norm(poly[j] - q) / 2)
                a, b = j, (j + 1) % L
                if i not in (a, b):
                    near.append(_segment_distance(q, poly[a], poly[b]) / 2)
            work.append((w, self.tree.blocks_at and self._block_index(cyc), SHRINK * min(near)))
        return work

    def _block_index(self, cyc: tuple) -> int:
        return self.block(cyc[0], cyc[1])

    def run(self, root) -> None:
        self.pos[root] = Point(0, 0)
        dirs = self.slots(root, 0, {}, False)
        todo = self.place_children(root, dirs, None, 1.0)
        while todo:
            w, blk, r = todo.pop()
            if r <= 0:
                raise AssertionError("sub-radius collapsed")
            rot = self.rot[w]
            if len(rot) == 1:
                continue
            if self.tree.is_cycle(blk):
                face = self.faces[blk]
                j = face.index(w)
                nxt, prv = face[(j + 1) % len(face)], face[j - 1]
                start = rot.index(nxt)
                fixed = {nxt: self.pos[nxt] - self.pos[w], prv: self.pos[prv] - self.pos[w]}
            else:
                par = next(u for u in rot if self.block(w, u) == blk)
                start = rot.index(par)
                fixed = {par: self.pos[par] - self.pos[w]}
            dirs = self.slots(w, start, fixed, False)
            todo.extend(self.place_children(w, dirs, blk, r))


def _certificate(edges: list, pairs: list) -> list:
    parent = {e: e for e in edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for e, f in pairs:
        parent[find(e)] = find(f)
    groups: dict = {}
    for e in edges:
        groups.setdefault(find(e), []).append(e)
    segments = []
    for group in groups.values():
        segments.append(_chain(group))
    segments.sort(key=lambda s: repr(s[0]))
    return segments


def _chain(group: list) -> list:
    """Order the edges of one segment from one end to the other."""
    inc: dict = {}
    for e in group:
        for v in e:
            inc.setdefault(v, []).append(e)
    ends = [v for v, es in inc.items() if len(es) == 1]
    if not ends:
        raise AssertionError("segment closes up")
    v = min(ends, key=repr)
    out = []
    prev = None
    while True:
        nxt = [e for e in inc[v] if e != prev]
        if not nxt:
            break
        e = nxt[0]
        w = next(x for x in e if x != v)
        out.append((v, w))
        prev, v = e, w
    return out


def draw_cactus(graph) -> CactusDrawing:
    """Draw a cactus with exactly ``seg_number_cactus(graph)`` segments.

    ``graph`` is an edge list, a rotation system (dict of ccw neighbour
    lists) or a PlaneGraph.  A supplied rotation system must be outerplane,
    i.e. every cycle bounds a face; it is respected by the drawing.
    """
    adj, rot = _as_adjacency(graph)
    tree = block_cut_tree(adj)
    if rot is None:
        rot = canonical_rotation(tree, adj)
    faces = _face_orders(tree, rot)
    edges = sorted({frozenset((v, w)) for v in adj for w in adj[v]}, key=lambda e: sorted(map(repr, e)))
    pos: dict = {}
    pairs: list = []
    if len(adj) == 1:
        pos = {next(iter(adj)): Point(0, 0)}
    elif max(len(ns) for ns in adj.values()) <= 2:
        pos, pairs = _path_or_cycle(adj, tree, faces)
    else:
        root = max(adj, key=lambda v: (len(adj[v]), -list(adj).index(v)))
        b = _Builder(adj, rot, tree, faces)
        b.run(root)
        pos, pairs = b.pos, b.pairs
    cert = _certificate(edges, pairs)
    coords = {v: (float(p.x), float(p.y)) for v, p in pos.items()}
    return CactusDrawing(coords, pos, cert, rot)


def _path_or_cycle(adj: Mapping, tree: BlockCutTree, faces: list):
    if len(tree.blocks) == 1 and tree.is_cycle(0):
        cyc = faces[0]
        L = len(cyc)
        corners = [0, L // 3, (2 * L) // 3]
        tri = [Point(0, 0), Point(1, 0), Point(0, 1)]
        pos = {}
        pairs = []
        for s in range(3):
            a, b = corners[s], corners[(s + 1) % 3] if s < 2 else L
            for i in range(a, b):
                t = Fraction(i - a, b - a)
                pos[cyc[i]] = tri[s].scale(1 - t) + tri[(s + 1) % 3].scale(t)
                if i != a:
                    pairs.append((frozenset((cyc[i - 1], cyc[i])), frozenset((cyc[i], cyc[(i + 1) % L]))))
        return pos, pairs
    end = next(v for v, ns in adj.items() if len(ns) == 1)
    path = [end]
    prev = None
    while True:
        nxt = [w for w in adj[path[-1]] if w != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    pos = {v: Point(i, 0) for i, v in enumerate(path)}
    pairs = [(frozenset((path[i - 1], path[i])), frozenset((path[i], path[i + 1]))) for i in range(1, len(path) - 1)]
    return pos, pairs


# checks -----------------------------------------------------------------------


def _sine(o, p, q) -> float:
    ux, uy = p[0] - o[0], p[1] - o[1]
    vx, vy = q[0] - o[0], q[1] - o[1]
    nu, nv = math.hypot(ux, uy), math.hypot(vx, vy)
    if nu == 0 or nv == 0:
        return 0.0
    return (ux * vy - uy * vx) / (nu * nv)


def float_planar(edges, coords: Mapping, tol: float = 1e-9) -> bool:
    """No two edges cross, up to a scale-free tolerance on the sines involved."""
    edges = [tuple(e) for e in edges]
    for i in range(len(edges)):
        a, b = edges[i]
        pa, pb = coords[a], coords[b]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            pc, pd = coords[c], coords[d]
            shared = {a, b} & {c, d}
            if shared:
                s = shared.pop()
                o = coords[s]
                p = pb if s == a else pa
                q = pd if s == c else pc
                # overlapping edges leave a common vertex in the same direction
                if abs(_sine(o, p, q)) < tol and (p[0] - o[0]) * (q[0] - o[0]) + (p[1] - o[1]) * (q[1] - o[1]) > 0:
                    return False
                continue
            s1, s2 = _sine(pa, pb, pc), _sine(pa, pb, pd)
            s3, s4 = _sine(pc, pd, pa), _sine(pc, pd, pb)
            if (s1 > tol and s2 < -tol or s1 < -tol and s2 > tol) and (s3 > tol and s4 < -tol or s3 < -tol and s4 > tol):
                return False
    return True


def certificate_straight(cert: list, coords: Mapping, tol: float = 1e-9) -> bool:
    """Consecutive edges of every certified segment continue straight on."""
    for seg in cert:
        for (a, b), (_, c) in zip(seg, seg[1:]):
            pa, pb, pc = coords[a], coords[b], coords[c]
            if abs(_sine(pb, pa, pc)) > tol:
                return False
            if (pa[0] - pb[0]) * (pc[0] - pb[0]) + (pa[1] - pb[1]) * (pc[1] - pb[1]) >= 0:
                return False
    return True


def respects_rotation(rotation: Mapping, coords: Mapping) -> bool:
    """The ccw order of neighbours around every vertex matches ``rotation``."""
    for v, ns in rotation.items():
        if len(ns) < 3:
            continue
        o = coords[v]
        angs = [math.atan2(coords[w][1] - o[1], coords[w][0] - o[0]) for w in ns]
        k = min(range(len(ns)), key=lambda i: angs[i])
        seq = angs[k:] + angs[:k]
        if any(seq[i] >= seq[i + 1] for i in range(len(seq) - 1)):
            return False
    return True
