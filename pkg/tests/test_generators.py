import networkx as nx
import pytest

from segdraw.errors import BadParameter
from segdraw.generators import (
    GK_BASE_POINTS,
    gen_Bn,
    gen_Cn2,
    gen_Gk,
    gen_outerpath_Rn,
    gen_Pr,
    gen_Tk,
    gk_glue_map,
)
from segdraw.geometry import Point
from segdraw.metrics_bounds import decompose_segments, lower_bounds, verify_drawing
from segdraw.plane_graph import is_internally_3connected, is_internally_4regular


def nx_graph(G):
    H = nx.Graph()
    H.add_nodes_from(G.rotation)
    H.add_edges_from(G.edges())
    return H


def is_maximal_outerplanar(H):
    if H.number_of_edges() != 2 * H.number_of_nodes() - 3:
        return False
    apex = H.copy()
    apex.add_edges_from(("apex", v) for v in H.nodes)
    return nx.check_planarity(apex)[0]


def is_outerpath(H):
    # maximal outerplanar with a path as weak dual: no triangle shares all
    # three of its sides with other triangles
    if not is_maximal_outerplanar(H):
        return False
    tris = [t for t in nx.enumerate_all_cliques(H) if len(t) == 3]
    shared = {}
    for t in tris:
        for i in range(3):
            e = frozenset((t[i], t[(i + 1) % 3]))
            shared[e] = shared.get(e, 0) + 1
    inner = [sum(shared[frozenset((t[i], t[(i + 1) % 3]))] == 2 for i in range(3)) for t in tris]
    return max(inner) <= 2


def _check_instance(inst):
    report = verify_drawing(inst.graph, inst.drawing)
    assert report.injective and report.planar and report.embedding_preserved, report.problems
    assert decompose_segments(inst.graph, inst.drawing).seg == inst.declared_segments


def test_cn2_examples():
    G = gen_Cn2(6).graph
    assert G.m == 12 and all(G.degree(v) == 4 for v in G.rotation)
    G = gen_Cn2(8).graph
    assert G.m == 16 and is_internally_4regular(G) and is_internally_3connected(G)
    with pytest.raises(BadParameter):
        gen_Cn2(7)
    with pytest.raises(BadParameter):
        gen_Cn2(4)


@pytest.mark.parametrize("n", range(6, 41, 2))
def test_cn2_is_internally_3connected_and_4regular(n):
    G = gen_Cn2(n).graph
    assert is_internally_3connected(G) and is_internally_4regular(G)
    assert len(G.outer) == 3


@pytest.mark.parametrize("r,count", [(0, 5), (1, 6), (2, 7), (5, 10)])
def test_pr_counts(r, count):
    inst = gen_Pr(r)
    assert inst.graph.n == 2 * r + 6
    assert inst.declared_segments == count
    _check_instance(inst)
    H = nx_graph(inst.graph)
    assert is_outerpath(H)
    # drawn outerplanar: every vertex on the outer face
    assert set(inst.graph.outer) == set(inst.graph.rotation)


def test_pr_rejects_negative():
    with pytest.raises(BadParameter):
        gen_Pr(-1)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_gk_counts(k):
    inst = gen_Gk(k)
    assert inst.graph.n == 13 * k + 3
    assert inst.declared_segments == 5 * k + 3
    _check_instance(inst)
    assert is_maximal_outerplanar(nx_graph(inst.graph))


def test_gk_every_vertex_on_outer_face():
    inst = gen_Gk(5)
    assert set(inst.graph.outer) == set(inst.graph.rotation)
    assert decompose_segments(inst.graph, inst.drawing).seg == 28


def test_gk_far_copies_never_meet():
    # copies m >= 2 steps apart are the base pushed through the glue map m
    # times; show they land in a box around its fixed point that misses the
    # base, so planarity for k <= 2 settles every k
    o = gk_glue_map(Point(0, 0))
    ex, ey = gk_glue_map(Point(1, 0)) - o, gk_glue_map(Point(0, 1)) - o
    a, b, c, d = ex.x, ey.x, ex.y, ey.y
    det = (a - 1) * (d - 1) - b * c
    fx = (-o.x * (d - 1) + b * o.y) / det
    fy = (-o.y * (a - 1) + c * o.x) / det
    fixed = Point(fx, fy)
    assert gk_glue_map(fixed) == fixed
    assert max(abs(a) + abs(b), abs(c) + abs(d)) <= 1  # sup-norm never grows
    pts = [Point(x, y) for x, y in GK_BASE_POINTS]
    twice = [gk_glue_map(gk_glue_map(p)) - fixed for p in pts]
    radius = max(max(abs(q.x), abs(q.y)) for q in twice)
    # any point of the base lies in the hull of its vertices, so the images
    # after m >= 2 steps stay within `radius` of the fixed point
    xs, ys = [p.x for p in pts], [p.y for p in pts]
    gap_x = max(min(xs) - fixed.x, fixed.x - max(xs))
    gap_y = max(min(ys) - fixed.y, fixed.y - max(ys))
    assert max(gap_x, gap_y) > radius


def test_gk_rejects_zero():
    with pytest.raises(BadParameter):
        gen_Gk(0)


@pytest.mark.parametrize("k,n,count", [(1, 12, 19), (2, 16, 23), (3, 20, 27)])
def test_tk_counts(k, n, count):
    inst = gen_Tk(k)
    assert inst.graph.n == n and inst.declared_segments == count
    _check_instance(inst)
    assert count >= lower_bounds(n, "planar3tree")
    # planar 3-tree: a triangulation with 3n - 6 edges
    assert inst.graph.m == 3 * n - 6


def test_tk_stacking_order_is_a_3tree_construction():
    inst = gen_Tk(2)
    H = nx_graph(inst.graph)
    placed = set(inst.stacking_order[:3])
    for v in inst.stacking_order[3:]:
        earlier = [w for w in H[v] if w in placed]
        assert len(earlier) == 3
        a, b, c = earlier
        assert H.has_edge(a, b) and H.has_edge(b, c) and H.has_edge(a, c)
        placed.add(v)


@pytest.mark.parametrize("n", [6, 7, 8, 11])
def test_bn_drawings(n):
    inst = gen_Bn(n)
    A, B = inst.extra_drawings["A"], inst.extra_drawings["B"]
    assert A.declared_segments == 2 * n - 2
    assert B.declared_segments == -(-3 * n // 2) + 1
    for d in (A, B):
        report = verify_drawing(d.graph, d.drawing)
        assert report.planar and report.embedding_preserved, report.problems
        assert decompose_segments(d.graph, d.drawing).seg == d.declared_segments
    assert set(map(frozenset, A.graph.edges())) == set(map(frozenset, B.graph.edges()))


def test_bn8_values():
    inst = gen_Bn(8)
    assert decompose_segments(inst.graph, inst.extra_drawings["B"].drawing).seg == 13
    assert decompose_segments(inst.graph, inst.extra_drawings["A"].drawing).seg == 14
    with pytest.raises(BadParameter):
        gen_Bn(5)


def test_rn_is_cn2_minus_three_edges():
    for n in (6, 8, 10):
        R = gen_outerpath_Rn(n).graph
        assert R.m == 2 * n - 3
        assert max(R.degree(v) for v in R.rotation) <= 4
        H = nx_graph(R)
        assert is_outerpath(H)
        full = nx_graph(gen_Cn2(n).graph)
        assert set(map(frozenset, H.edges)) <= set(map(frozenset, full.edges))
        assert full.number_of_edges() - H.number_of_edges() == 3
