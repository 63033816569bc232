import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pse.geometry import (
    AngleSpec,
    Kind,
    Segment,
    angle_ok,
    crossing_angle_satisfies,
    intersect,
    point_on_interior,
    point_on_segment,
    segments_overlap,
    sin2_between,
)

coord = st.integers(-8, 8)
point = st.tuples(coord, coord)


@st.composite
def segments(draw):
    a = draw(point)
    b = draw(point.filter(lambda p: p != a))
    return Segment(a, b)


def test_axis_parallel_cross():
    hit = intersect(Segment((0, 0), (4, 0)), Segment((2, -1), (2, 3)))
    assert hit.kind == Kind.PROPER_CROSS
    assert hit.point == (2, 0)


def test_contained_overlap():
    hit = intersect(Segment((0, 0), (4, 0)), Segment((1, 0), (3, 0)))
    assert hit.kind == Kind.COLLINEAR_OVERLAP
    assert set(hit.overlap) == {(1, 0), (3, 0)}


def test_shared_endpoint():
    assert intersect(Segment((0, 0), (2, 2)), Segment((2, 2), (4, 0))).kind == Kind.SHARED_ENDPOINT


def test_touch_at_interior():
    hit = intersect(Segment((0, 0), (4, 0)), Segment((2, 0), (2, 3)))
    assert hit.kind == Kind.TOUCH_AT_INTERIOR
    assert hit.point == (2, 0)


def test_disjoint_parallel_and_collinear_gap():
    assert intersect(Segment((0, 0), (4, 0)), Segment((0, 1), (4, 1))).kind == Kind.DISJOINT
    assert intersect(Segment((0, 0), (1, 0)), Segment((2, 0), (3, 0))).kind == Kind.DISJOINT


def test_collinear_touching_end_to_end_is_a_shared_endpoint():
    assert intersect(Segment((0, 0), (2, 0)), Segment((2, 0), (5, 0))).kind == Kind.SHARED_ENDPOINT


def test_identical_segments_overlap_entirely():
    s = Segment((1, 1), (3, 5))
    hit = intersect(s, Segment((3, 5), (1, 1)))
    assert hit.kind == Kind.COLLINEAR_OVERLAP
    assert set(hit.overlap) == {(1, 1), (3, 5)}


def test_degenerate_segment_rejected():
    with pytest.raises(ValueError):
        Segment((1, 1), (1, 1))


def test_rational_crossing_point():
    hit = intersect(Segment((0, 0), (3, 1)), Segment((0, 1), (3, 0)))
    assert hit.kind == Kind.PROPER_CROSS
    assert hit.point == (Fraction(3, 2), Fraction(1, 2))


@given(segments(), segments())
def test_intersection_is_symmetric(s1, s2):
    a, b = intersect(s1, s2), intersect(s2, s1)
    assert a.kind == b.kind
    assert a.point == b.point
    if a.overlap is not None:
        assert set(a.overlap) == set(b.overlap)


@given(segments(), segments())
def test_overlap_helper_agrees_with_classifier(s1, s2):
    assert segments_overlap(s1, s2) == (intersect(s1, s2).kind == Kind.COLLINEAR_OVERLAP)


@given(segments(), segments())
def test_crossing_point_lies_on_both_segments(s1, s2):
    hit = intersect(s1, s2)
    if hit.point is not None:
        assert point_on_segment(hit.point, s1) and point_on_segment(hit.point, s2)


@given(segments(), segments(), coord, coord)
def test_translation_invariance(s1, s2, dx, dy):
    def move(s):
        return Segment((s.a[0] + dx, s.a[1] + dy), (s.b[0] + dx, s.b[1] + dy))

    assert intersect(s1, s2).kind == intersect(move(s1), move(s2)).kind


def test_point_on_interior():
    s = Segment((0, 0), (4, 0))
    assert point_on_interior((2, 0), s)
    assert not point_on_interior((0, 0), s)
    assert not point_on_interior((2, 1), s)


def test_right_angles():
    right = AngleSpec.right()
    assert crossing_angle_satisfies(Segment((0, 0), (4, 0)), Segment((2, -1), (2, 3)), right)
    assert crossing_angle_satisfies(Segment((0, 0), (4, 4)), Segment((0, 4), (4, 0)), right)


def test_perpendicular_but_skewed_pair():
    # directions (4,1) and (1,-4): dot product 0, so the crossing is exactly right
    s1, s2 = Segment((0, 0), (4, 1)), Segment((0, 4), (1, 0))
    assert crossing_angle_satisfies(s1, s2, AngleSpec.right())
    assert crossing_angle_satisfies(s1, s2, AngleSpec.from_degrees(60))


def test_angle_check_requires_a_single_point():
    with pytest.raises(ValueError):
        crossing_angle_satisfies(Segment((0, 0), (4, 0)), Segment((1, 0), (3, 0)), AngleSpec.right())


def test_exact_angle_test_matches_floats_away_from_the_threshold():
    rng = random.Random(7)
    checked = 0
    while checked < 10_000:
        u = (rng.randint(-50, 50), rng.randint(-50, 50))
        v = (rng.randint(-50, 50), rng.randint(-50, 50))
        if u == (0, 0) or v == (0, 0):
            continue
        deg = rng.uniform(1, 89)
        a = abs(math.degrees(math.atan2(u[1], u[0]) - math.atan2(v[1], v[0]))) % 180
        angle = min(a, 180 - a)
        if abs(angle - deg) < 1e-6:
            continue
        assert angle_ok(u, v, AngleSpec.from_degrees(deg)) == (angle > deg)
        checked += 1


def test_sin2_exact():
    assert sin2_between((1, 0), (1, 1)) == Fraction(1, 2)
    assert sin2_between((1, 0), (0, 3)) == 1


def test_angle_spec_constructors():
    assert AngleSpec.from_degrees(90).is_right
    assert AngleSpec.from_cot(7).ceil_cot() == 7
    assert AngleSpec.from_degrees(45).ceil_cot() == 1
    assert AngleSpec.from_degrees(20).ceil_cot() == 3
    assert AngleSpec.from_degrees(10).ceil_cot() == 6
    for bad in (0, -5, 91):
        with pytest.raises(ValueError):
            AngleSpec.from_degrees(bad)


def test_decimal_text_snaps_to_integer_cotangent():
    a = AngleSpec.from_decimal_text("8.13")
    assert a.cot == 7 and a.ceil_cot() == 7
    assert AngleSpec.from_decimal_text("45").cot == 1
    b = AngleSpec.from_decimal_text("8.2")
    assert b.cot is None and b.ceil_cot() == 7
    with pytest.raises(ValueError):
        AngleSpec.from_decimal_text("eight")


def test_complement():
    c = AngleSpec.from_cot(7).complement()
    assert c.sin2 == Fraction(49, 50)
    assert math.isclose(c.degrees, 90 - math.degrees(math.atan(1 / 7)))
    assert AngleSpec.from_degrees(30).complement().sin2 <= Fraction(3, 4)
    with pytest.raises(ValueError):
        AngleSpec.right().complement()
