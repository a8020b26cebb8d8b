from hypothesis import given, settings
from hypothesis import strategies as st

from kinner.geometry import (
    compare_angle,
    convex_hull,
    on_hull_boundary,
    orient,
    primitive,
    segments_conflict,
    segments_intersect,
)
from kinner.verify import rational_segment_conflict

coord = st.integers(-6, 6)
point = st.tuples(coord, coord)


def test_orient_signs():
    assert orient((0, 0), (1, 0), (0, 1)) > 0
    assert orient((0, 0), (0, 1), (1, 0)) < 0
    assert orient((0, 0), (1, 1), (3, 3)) == 0


def test_primitive():
    assert primitive((0, 3)) == (0, 1)
    assert primitive((4, 6)) == (2, 3)
    assert primitive((-4, 6)) == (-2, 3)


def test_angle_order_is_counter_clockwise_from_positive_x():
    vs = [(0, -1), (1, 0), (-1, 0), (1, 1), (0, 1), (-1, -1)]
    from functools import cmp_to_key

    assert sorted(vs, key=cmp_to_key(compare_angle)) == [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]


def test_crossing_diagonals_conflict():
    assert segments_conflict((0, 0), (1, 1), (0, 1), (1, 0))


def test_shared_endpoint_is_allowed_unless_overlapping():
    assert not segments_conflict((0, 0), (2, 0), (0, 0), (0, 2))
    assert segments_conflict((0, 0), (2, 0), (0, 0), (1, 0))
    assert not segments_conflict((0, 0), (2, 0), (2, 0), (4, 0))


def test_t_junction_conflicts():
    assert segments_conflict((0, 0), (4, 0), (2, 0), (2, 3))


def test_hull_boundary():
    hull = convex_hull([(0, 0), (4, 0), (4, 4), (0, 4), (2, 2), (2, 0)])
    assert hull == [(0, 0), (4, 0), (4, 4), (0, 4)]
    assert on_hull_boundary((2, 0), hull)
    assert not on_hull_boundary((2, 2), hull)


@settings(max_examples=600, deadline=None)
@given(point, point, point, point)
def test_conflict_matches_rational_oracle(p1, p2, q1, q2):
    if p1 == p2 or q1 == q2:
        return
    assert segments_conflict(p1, p2, q1, q2) == rational_segment_conflict((p1, p2), (q1, q2))


@settings(max_examples=300, deadline=None)
@given(point, point, point, point)
def test_intersection_is_symmetric(p1, p2, q1, q2):
    assert segments_intersect(p1, p2, q1, q2) == segments_intersect(q1, q2, p1, p2)
