"""Exact rational geometry: points, orientation, intersection and line keys.

Every coordinate is a :class:`fractions.Fraction`, so all predicates are
exact and no tolerance is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import DegenerateInput

Number = Union[int, Fraction, str]


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def point(x: Number, y: Number) -> Point:
    return Point(Fraction(x), Fraction(y))


def lerp(p: Point, q: Point, t) -> Point:
    """The point ``(1-t)*p + t*q``."""
    t = Fraction(t)
    return Point(p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t)


class Orientation(IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


def cross(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area of triangle pqr."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orient(p: Point, q: Point, r: Point) -> Orientation:
    d = cross(p, q, r)
    if d > 0:
        return Orientation.LEFT
    if d < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def _on_closed_segment(p: Point, q: Point, r: Point) -> bool:
    # r is assumed collinear with pq
    return min(p.x, q.x) <= r.x <= max(p.x, q.x) and min(p.y, q.y) <= r.y <= max(p.y, q.y)


def segments_intersect(s1: tuple[Point, Point], s2: tuple[Point, Point]) -> bool:
    """True iff the closed segments share at least one point."""
    a, b = s1
    c, d = s2
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and _on_closed_segment(a, b, c))
        or (o2 == 0 and _on_closed_segment(a, b, d))
        or (o3 == 0 and _on_closed_segment(c, d, a))
        or (o4 == 0 and _on_closed_segment(c, d, b))
    )


def segments_properly_intersect(s1: tuple[Point, Point], s2: tuple[Point, Point]) -> bool:
    """True iff the closed segments meet anywhere except at a common endpoint."""
    a, b = s1
    c, d = s2
    if a == b or c == d:
        raise DegenerateInput("segment endpoints must be distinct")
    shared = {a, b} & {c, d}
    if orient(a, b, c) == 0 and orient(a, b, d) == 0:
        # collinear: compare the parameter intervals along the common line
        key = (lambda p: p.x) if a.x != b.x else (lambda p: p.y)
        lo = max(min(key(a), key(b)), min(key(c), key(d)))
        hi = min(max(key(a), key(b)), max(key(c), key(d)))
        if lo < hi:
            return True
        if lo > hi:
            return False
        return not shared
    if not segments_intersect(s1, s2):
        return False
    # non-collinear segments meet in exactly one point
    return not shared


@dataclass(frozen=True, order=True)
class LineKey:
    """Integer coefficients of ``a*x + b*y = c`` in canonical form."""

    a: int
    b: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def line_key(p: Point, q: Point) -> LineKey:
    if p == q:
        raise DegenerateInput("line_key needs two distinct points")
    a = q.y - p.y
    b = p.x - q.x
    c = a * p.x + b * p.y
    den = 1
    for v in (a, b, c):
        den = den * v.denominator // gcd(den, v.denominator)
    ia, ib, ic = int(a * den), int(b * den), int(c * den)
    g = gcd(gcd(ia, ib), ic)
    ia, ib, ic = ia // g, ib // g, ic // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib, ic = -ia, -ib, -ic
    return LineKey(ia, ib, ic)


def format_rational(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(s: Number) -> Fraction:
    return Fraction(s)
