"""Exact integer geometry predicates.

Everything here works on integer 2-vectors (tuples) and never touches
floating point.  Python integers are unbounded, so products of large
coordinates cannot overflow.
"""

from __future__ import annotations

from functools import cmp_to_key
from math import gcd
from typing import Iterable, Sequence, Tuple

Vec = Tuple[int, int]


def sub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1])


def scale(a: Vec, k: int) -> Vec:
    return (a[0] * k, a[1] * k)


def cross(a: Vec, b: Vec) -> int:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Vec, b: Vec) -> int:
    return a[0] * b[0] + a[1] * b[1]


def orient(p: Vec, q: Vec, r: Vec) -> int:
    """Twice the signed area of triangle pqr (positive = counter-clockwise)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def primitive(v: Vec) -> Vec:
    """Divide a nonzero integer vector by the gcd of its components."""
    g = gcd(v[0], v[1])
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g)


def same_direction(a: Vec, b: Vec) -> bool:
    return cross(a, b) == 0 and dot(a, b) > 0


def _half(v: Vec) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2*pi)
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def compare_angle(a: Vec, b: Vec) -> int:
    """Compare the polar angles of a and b, both measured in [0, 2*pi)."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = cross(a, b)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


angle_key = cmp_to_key(compare_angle)


def in_closed_upper_half(v: Vec) -> bool:
    """True when the polar angle of v lies in [0, pi]."""
    return v[1] > 0 or (v[1] == 0 and v != (0, 0))


def cw_sweep_at_most_pi(a: Vec, b: Vec) -> bool:
    """Whether turning clockwise from a to b sweeps an angle in (0, pi]."""
    c = cross(a, b)
    if c < 0:
        return True
    return c == 0 and dot(a, b) < 0


def on_segment(p: Vec, a: Vec, b: Vec) -> bool:
    """p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def in_relative_interior(p: Vec, a: Vec, b: Vec) -> bool:
    return p != a and p != b and on_segment(p, a, b)


def segments_intersect(p1: Vec, p2: Vec, q1: Vec, q2: Vec) -> bool:
    """Closed segments p1p2 and q1q2 share at least one point."""
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
        return True
    if d1 == 0 and on_segment(p1, q1, q2):
        return True
    if d2 == 0 and on_segment(p2, q1, q2):
        return True
    if d3 == 0 and on_segment(q1, p1, p2):
        return True
    if d4 == 0 and on_segment(q2, p1, p2):
        return True
    return False


def segments_conflict(p1: Vec, p2: Vec, q1: Vec, q2: Vec) -> bool:
    """Two drawn edges meet somewhere other than at a shared endpoint.

    Endpoints are identified by position, so segments sharing a point are
    allowed to touch there and nowhere else.
    """
    shared = {p1, p2} & {q1, q2}
    if not shared:
        return segments_intersect(p1, p2, q1, q2)
    if len(shared) == 2:
        return True
    (c,) = shared
    a = p2 if p1 == c else p1
    b = q2 if q1 == c else q1
    # one shared endpoint: only a collinear overlap can add more contact
    return orient(c, a, b) == 0 and dot(sub(a, c), sub(b, c)) > 0


def convex_hull(points: Iterable[Vec]) -> list[Vec]:
    """Strict convex hull (no collinear points) in counter-clockwise order."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Vec] = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vec] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull


def on_hull_boundary(p: Vec, hull: Sequence[Vec]) -> bool:
    """p lies on the boundary of the polygon given by a strict hull."""
    m = len(hull)
    if m == 0:
        return False
    if m == 1:
        return p == hull[0]
    if m == 2:
        return on_segment(p, hull[0], hull[1])
    return any(on_segment(p, hull[i], hull[(i + 1) % m]) for i in range(m))
