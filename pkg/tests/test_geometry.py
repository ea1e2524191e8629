from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from segdraw.errors import DegenerateInput
from segdraw.geometry import (
    Orientation,
    Point,
    format_rational,
    line_key,
    orient,
    parse_rational,
    segments_properly_intersect,
)

small = st.fractions(min_value=-6, max_value=6, max_denominator=4)
points = st.builds(Point, small, small)


def P(x, y):
    return Point(Fraction(x), Fraction(y))


def test_orient_examples():
    assert orient(P(0, 0), P(1, 0), P(2, 0)) == Orientation.COLLINEAR
    assert orient(P(0, 0), P(1, 0), P(0, 1)) == Orientation.LEFT
    assert orient(P(0, 0), P(1, 1), P(2, 1)) == Orientation.RIGHT


def test_proper_intersection_examples():
    assert segments_properly_intersect((P(0, 0), P(2, 2)), (P(0, 2), P(2, 0)))
    assert not segments_properly_intersect((P(0, 0), P(1, 0)), (P(1, 0), P(2, 1)))
    assert segments_properly_intersect((P(0, 0), P(2, 0)), (P(1, 0), P(3, 0)))


def test_touching_in_the_middle_counts():
    # an endpoint lying inside another edge is a real conflict
    assert segments_properly_intersect((P(0, 0), P(2, 0)), (P(1, 0), P(1, 5)))


def test_line_key_examples():
    assert line_key(P(0, 0), P(2, 0)).as_tuple() == (0, 1, 0)
    assert line_key(P(1, 1), P(3, 3)).as_tuple() == (1, -1, 0)
    assert line_key(P(0, 1), P(0, 5)).as_tuple() == (1, 0, 0)


def test_line_key_rejects_equal_points():
    with pytest.raises(DegenerateInput):
        line_key(P(1, 2), P(1, 2))


def test_rational_text_round_trip():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(4)) == "4/1"
    assert parse_rational("7/21") == Fraction(1, 3)


def _det_oracle(p, q, r):
    # scale everything to integers first, then take the determinant
    den = 1
    for v in (p.x, p.y, q.x, q.y, r.x, r.y):
        den = den * v.denominator
    ix = [int(v * den) for v in (p.x, p.y, q.x, q.y, r.x, r.y)]
    px, py, qx, qy, rx, ry = ix
    d = (qx - px) * (ry - py) - (qy - py) * (rx - px)
    return (d > 0) - (d < 0)


@given(points, points, points)
def test_orient_matches_integer_determinant(p, q, r):
    assert int(orient(p, q, r)) == _det_oracle(p, q, r)


@given(points, points, points)
def test_orient_antisymmetric(p, q, r):
    assert orient(p, q, r) == -orient(p, r, q)


@given(points, points, points)
def test_line_key_symmetric_and_collinear(p, q, r):
    if p == q:
        return
    assert line_key(p, q) == line_key(q, p)
    if r != p and orient(p, q, r) == 0:
        assert line_key(p, q) == line_key(p, r)
    k = line_key(p, q)
    assert k.a * p.x + k.b * p.y == k.c and k.a * q.x + k.b * q.y == k.c


def _meet_oracle(a, b, c, d):
    """Closed segments share a point other than a common endpoint (parametric solve)."""
    shared = {a, b} & {c, d}
    ux, uy = b.x - a.x, b.y - a.y
    vx, vy = d.x - c.x, d.y - c.y
    den = ux * vy - uy * vx
    wx, wy = c.x - a.x, c.y - a.y
    if den != 0:
        t = (wx * vy - wy * vx) / den
        s = (wx * uy - wy * ux) / den
        if not (0 <= t <= 1 and 0 <= s <= 1):
            return False
        hit = Point(a.x + t * ux, a.y + t * uy)
        return hit not in shared
    if wx * uy - wy * ux != 0:
        return False  # parallel, distinct lines
    # collinear: project on the direction and intersect intervals
    norm = ux * ux + uy * uy

    def proj(p):
        return ((p.x - a.x) * ux + (p.y - a.y) * uy) / norm

    lo = max(0, min(proj(c), proj(d)))
    hi = min(1, max(proj(c), proj(d)))
    if lo > hi:
        return False
    if lo < hi:
        return True
    return Point(a.x + lo * ux, a.y + lo * uy) not in shared


@given(points, points, points, points)
def test_proper_intersection_matches_parametric_oracle(a, b, c, d):
    if a == b or c == d:
        return
    assert segments_properly_intersect((a, b), (c, d)) == _meet_oracle(a, b, c, d)
