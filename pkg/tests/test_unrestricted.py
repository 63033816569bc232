import random
from fractions import Fraction

import pytest

from pse import generators as gen
from pse.errors import InvalidEpsilon
from pse.geometry import AngleSpec
from pse.model import PointSet, SimpleGraph, StyleSpec
from pse.unrestricted import alpha_ac1_embed, alpha_ac2_embed, rac3_anchors, rac3_embed, refinement_factor
from pse.verifier import verify

EDGE = SimpleGraph(2, ((0, 1),))


def test_rac3_single_edge():
    d = rac3_embed(EDGE, PointSet(((1, 2), (2, 1))), (0, 1))
    assert d.edges[0].bends == ((2, -3), (4, -1), (3, 0))


def test_rac3_anchor_rows_for_k4():
    assert rac3_anchors(4, [3, 3, 3, 3]) == [-21, -14, -7, 0]


def test_rac3_random_graphs():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(2, 30)
        g = gen.random_graph(n, n - 1, rng, m=rng.randint(1, min(120, n * (n - 1) // 2)))
        mu = gen.random_mapping(n, rng)
        rep = verify(rac3_embed(g, gen.random_points(n, rng), mu), StyleSpec.rac(3), mapping=mu, graph=g)
        assert rep.ok
        assert rep.stats.crossing_count == 0 or rep.stats.min_angle_is_right
        for c in rep.crossings:
            for a, b in c.directions:
                assert {Fraction(a[1], a[0]), Fraction(b[1], b[0])} == {1, -1}


def test_aac2_row_for_45_degrees():
    d = alpha_ac2_embed(EDGE, PointSet(((1, 2), (2, 1))), AngleSpec.from_degrees(45), (0, 1))
    assert [y for _, y in d.edges[0].bends] == [-2, -2]


def test_aac2_single_edge_any_epsilon():
    for deg in (5, 30, 60, 89):
        d = alpha_ac2_embed(EDGE, PointSet(((1, 1), (2, 2))), AngleSpec.from_degrees(deg))
        assert len(d.edges[0].bends) == 2
        assert verify(d, StyleSpec.rac(2)).stats.crossing_count == 0


@pytest.mark.parametrize("deg", [10, 20, 45])
def test_aac2_random_graphs(deg):
    eps = AngleSpec.from_degrees(deg)
    rng = random.Random(deg)
    for _ in range(10):
        n = rng.randint(2, 30)
        g = gen.random_graph(n, n - 1, rng, m=rng.randint(1, min(80, n * (n - 1) // 2)))
        rep = verify(alpha_ac2_embed(g, gen.random_points(n, rng), eps), StyleSpec.aac(2, eps.complement()), graph=g)
        assert rep.ok
        assert rep.stats.height <= n + g.m + eps.ceil_cot()


def test_aac1_lambda_and_bend():
    eps = AngleSpec.from_cot(7)
    assert refinement_factor(eps) == 8
    d = alpha_ac1_embed(EDGE, PointSet(((1, 1), (2, 2))), eps, (0, 1))
    assert d.lam == 8
    assert d.edges[0].bends == ((15, 7),)
    (x0, y0), (bx, by), (x1, y1) = d.polyline(0)
    assert Fraction(by - y0, bx - x0) == Fraction(-1, 7)
    assert Fraction(y1 - by, x1 - bx) == 9


@pytest.mark.parametrize("deg", [10, 30])
def test_aac1_random_graphs(deg):
    eps = AngleSpec.from_degrees(deg)
    rng = random.Random(deg)
    for _ in range(10):
        n = rng.randint(2, 30)
        g = gen.random_graph(n, n - 1, rng, m=rng.randint(1, min(80, n * (n - 1) // 2)))
        d = alpha_ac1_embed(g, gen.random_points(n, rng), eps)
        assert verify(d, StyleSpec.aac(1, eps.complement()), graph=g).ok
        assert all(len(e.bends) == 1 for e in d.edges)


@pytest.mark.parametrize("fn", [alpha_ac1_embed, alpha_ac2_embed])
def test_epsilon_must_be_strictly_inside(fn):
    with pytest.raises(InvalidEpsilon):
        fn(EDGE, PointSet(((1, 1), (2, 2))), AngleSpec.right())
