import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from corpus import medial_corpus, random_convex_outerpath, random_small_drawing
from segdraw.convex_drawer import draw_4regular
from segdraw.errors import BadStackingOrder, CoincidentVertices, DomainTooSmall, NotOuterpath
from segdraw.generators import gen_Cn2, gen_Pr, plane_graph_from_drawing
from segdraw.geometry import Point
from segdraw.metrics_bounds import (
    PseudoArcCensus,
    arc_bound,
    check_against_bounds,
    check_outerpath_ports,
    curve_bound,
    decompose_segments,
    face_is_convex,
    lower_bounds,
    odd_degree_count,
    pseudo_arc_bound,
    verify_drawing,
)
from segdraw.plane_graph import build


def P(x, y):
    return Point(Fraction(x), Fraction(y))


# brute-force segment oracle ----------------------------------------------------


def _collinear(e, f, pts):
    p, q = pts[e[0]], pts[e[1]]
    dx, dy = q.x - p.x, q.y - p.y
    return all(dx * (pts[w].y - p.y) - dy * (pts[w].x - p.x) == 0 for w in f)


def _partitions(items, pts):
    """Every set partition whose blocks are collinear (the only ones that can qualify)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest, pts):
        yield [[first]] + part
        for i in range(len(part)):
            if _collinear(first, part[i][0], pts):
                yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def _is_straight_chain(block, pts):
    """Edges on one line that together cover a single gap-free interval."""
    a, b = block[0]
    p, q = pts[a], pts[b]
    dx, dy = q.x - p.x, q.y - p.y
    for u, v in block:
        for w in (u, v):
            r = pts[w]
            if dx * (r.y - p.y) - dy * (r.x - p.x) != 0:
                return False

    def t(w):
        return (pts[w].x - p.x) * dx + (pts[w].y - p.y) * dy

    spans = sorted(tuple(sorted((t(u), t(v)))) for u, v in block)
    for (lo1, hi1), (lo2, hi2) in zip(spans, spans[1:]):
        if lo2 != hi1:
            return False
    return True


def _coarsest_partition(edges, pts):
    best = None
    for part in _partitions(list(edges), pts):
        if best is not None and len(part) >= len(best):
            continue
        if all(_is_straight_chain(b, pts) for b in part):
            best = part
    return {frozenset(frozenset(e) for e in b) for b in best}


def _as_blocks(dec):
    return {frozenset(frozenset(e) for e in s) for s in dec.segment_edges()}


def test_decomposition_matches_brute_force():
    rnd = random.Random(2024)
    chains = 0
    for _ in range(250):
        edges, pts = random_small_drawing(rnd, max_edges=8)
        dec = decompose_segments(edges, pts)
        assert _as_blocks(dec) == _coarsest_partition(edges, pts)
        assert dec.openseg == 2 * dec.seg
        chains += any(len(s) > 2 for s in dec.segments)
    assert chains > 20


def test_decomposition_examples():
    # a bent path, a straight path and a plus sign
    bent = decompose_segments([(0, 1), (1, 2)], {0: P(0, 0), 1: P(1, 0), 2: P(1, 1)})
    assert bent.seg == 2 and bent.ports == {0: 1, 1: 2, 2: 1}
    straight = decompose_segments([(1, 2), (0, 1)], {0: P(0, 0), 1: P(1, 1), 2: P(2, 2)})
    assert straight.segments in ([(0, 1, 2)], [(2, 1, 0)])
    assert straight.ports[1] == 0
    plus = {0: P(0, 0), 1: P(1, 0), 2: P(-1, 0), 3: P(0, 1), 4: P(0, -1)}
    dec = decompose_segments([(0, 1), (0, 2), (0, 3), (0, 4)], plus)
    assert dec.seg == 2 and dec.ports[0] == 0


def test_collinear_gap_splits_segments():
    pts = {0: P(0, 0), 1: P(1, 0), 2: P(2, 0), 3: P(3, 0)}
    assert decompose_segments([(0, 1), (2, 3)], pts).seg == 2


def test_coincident_vertices_rejected():
    with pytest.raises(CoincidentVertices):
        decompose_segments([(0, 1), (1, 2)], {0: P(0, 0), 1: P(1, 0), 2: P(0, 0)})


def test_octahedron_drawing_has_nine_segments():
    G = gen_Cn2(6).graph
    pos = draw_4regular(G)
    assert decompose_segments(G, pos).seg == 9


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_decomposition_ignores_edge_order(rnd):
    edges, pts = random_small_drawing(rnd, max_edges=8)
    shuffled = [(b, a) if rnd.random() < 0.5 else (a, b) for a, b in edges]
    rnd.shuffle(shuffled)
    one, two = decompose_segments(edges, pts), decompose_segments(shuffled, pts)
    assert _as_blocks(one) == _as_blocks(two)
    assert one.ports == two.ports


def test_segments_at_least_half_the_odd_degree_vertices():
    for G in medial_corpus(8, seed=21):
        pos = draw_4regular(G)
        assert decompose_segments(G, pos).seg >= -(-odd_degree_count(G) // 2)


# verification -------------------------------------------------------------------


def _square_with_diagonal():
    pts = {0: P(0, 0), 1: P(2, 0), 2: P(2, 2), 3: P(0, 2)}
    return plane_graph_from_drawing([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], pts), pts


def test_verify_accepts_a_good_drawing():
    G, pts = _square_with_diagonal()
    report = verify_drawing(G, pts)
    assert report.ok and report.problems == []


def test_verify_flags_crossing_and_rotation():
    G, pts = _square_with_diagonal()
    moved = dict(pts)
    moved[3] = P(3, -1)  # folds the square over: edges cross
    report = verify_drawing(G, moved)
    assert not report.planar or not report.embedding_preserved
    assert not report.ok


def test_verify_flags_reflex_face():
    # a dart shaped quadrilateral with a triangle attached
    pts = {0: P(0, 0), 1: P(4, 0), 2: P(1, 1), 3: P(0, 4), 4: P(-3, -3)}
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 1), (4, 3), (4, 0)]
    G = plane_graph_from_drawing(edges, pts)
    report = verify_drawing(G, pts)
    assert report.planar and report.embedding_preserved
    assert not report.faces_convex


def test_verify_flags_coincident_vertices():
    G, pts = _square_with_diagonal()
    pts = dict(pts)
    pts[3] = pts[1]
    report = verify_drawing(G, pts)
    assert not report.injective and not report.ok


def test_face_is_convex_examples():
    assert face_is_convex([P(0, 0), P(1, 0), P(2, 0), P(1, 1)])
    assert not face_is_convex([P(0, 0), P(1, 1), P(1, 0)])  # clockwise
    assert not face_is_convex([P(0, 0), P(4, 0), P(1, 1), P(0, 4)])


# bounds ---------------------------------------------------------------------------


def test_lower_bound_values():
    assert lower_bounds(20, "outerpath") == 12
    assert lower_bounds(20, "planar3tree") == 24
    assert lower_bounds(13, "2tree_or_maxouterplanar") == 4
    assert lower_bounds(3, "2tree_or_maxouterplanar") == 2
    assert lower_bounds(6, "odd_degree") == 3


def test_lower_bound_domains():
    with pytest.raises(DomainTooSmall):
        lower_bounds(2, "outerpath")
    with pytest.raises(DomainTooSmall):
        lower_bounds(5, "planar3tree")
    with pytest.raises(DomainTooSmall):
        lower_bounds(3, "odd_degree")
    with pytest.raises(ValueError):
        lower_bounds(10, "cubic")


def test_curve_and_arc_bounds():
    assert curve_bound(16, 2) == 5
    assert curve_bound(3, 1) == 1
    assert arc_bound(14) == 4
    assert arc_bound(15) == 5
    with pytest.raises(DomainTooSmall):
        curve_bound(2, 1)


def test_pseudo_arc_bound():
    # no arcs counted: the plain curve bound
    assert pseudo_arc_bound(PseudoArcCensus(2, 16)) == curve_bound(16, 2)
    # three arcs without internal edges for k = 1: ceil((20 + 3 - 6 + 9) / 4)
    assert pseudo_arc_bound(PseudoArcCensus(1, 10, (3,))) == 7
    with pytest.raises(ValueError):
        PseudoArcCensus(1, 10, (-1,))


@given(st.integers(3, 400), st.integers(1, 6))
def test_curve_bound_is_the_least_integer_above(n, k):
    b = curve_bound(n, k)
    assert (3 * k + 1) * b >= 2 * n + 3 * k - 6
    assert (3 * k + 1) * (b - 1) < 2 * n + 3 * k - 6


def test_check_against_bounds():
    inst = gen_Pr(2)
    report = check_against_bounds(inst.graph, inst.drawing, "outerpath")
    names = [e.name for e in report.entries]
    assert names == ["odd_degree", "outerpath"] and report.ok
    G = gen_Cn2(8).graph
    report = check_against_bounds(G, draw_4regular(G), "cn2")
    assert report.ok and {e.kind for e in report.entries} == {"lower", "upper"}


# outerpath ports --------------------------------------------------------------------


@pytest.mark.parametrize("r", range(6))
def test_ports_hold_on_pr(r):
    inst = gen_Pr(r)
    report = check_outerpath_ports(inst.graph, inst.stacking_order, inst.drawing)
    assert report.ok, report.violations
    assert report.openseg >= report.n + 1


def test_ports_hold_on_random_convex_outerpaths():
    rnd = random.Random(77)
    for _ in range(50):
        G, order, pts = random_convex_outerpath(rnd.randint(4, 14), rnd)
        assert verify_drawing(G, pts).planar
        report = check_outerpath_ports(G, order, pts)
        assert report.ok, report.violations


def test_port_check_rejects_bad_inputs():
    # K4 is not an outerpath
    K4 = build(4, [[1, 3, 2], [0, 2, 3], [0, 3, 1], [0, 1, 2]], [0, 1, 2])
    pts = {0: P(0, 0), 1: P(6, 0), 2: P(0, 6), 3: P(1, 1)}
    with pytest.raises(NotOuterpath):
        check_outerpath_ports(K4, [0, 1, 2, 3], pts)
    inst = gen_Pr(1)
    order = list(inst.stacking_order)
    order[0], order[-1] = order[-1], order[0]
    with pytest.raises(BadStackingOrder):
        check_outerpath_ports(inst.graph, order, inst.drawing)


def test_port_report_lists_every_clause():
    inst = gen_Pr(0)
    report = check_outerpath_ports(inst.graph, inst.stacking_order, inst.drawing)
    assert set(report.violations) == set(report.CLAUSES)
    assert all(report.passed(c) for c in report.CLAUSES)
