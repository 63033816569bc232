import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pse import generators as gen
from pse.errors import NotBinaryTree, NotPathOrCycle
from pse.model import PointSet, SimpleGraph, StyleSpec
from pse.rac1 import embed_binary_tree, embed_path_or_cycle_mapped
from pse.verifier import verify

RESTRICTED_ONE = StyleSpec.restricted_rac(1)


def _inside_box(d):
    n = d.n
    for i in range(len(d.edges)):
        for x, y in d.polyline(i):
            assert 1 <= x <= n and 1 <= y <= n


def test_single_vertex():
    d = embed_binary_tree(SimpleGraph(1), PointSet(((1, 1),)))
    assert d.mapping == (0,) and d.edges == ()


def test_root_with_two_children():
    t = SimpleGraph(3, ((0, 1), (0, 2)))
    d = embed_binary_tree(t, PointSet(((1, 1), (2, 2), (3, 3))), root=0)
    assert d.points[d.mapping[0]] == (2, 2)
    placed = {d.points[d.mapping[c]]: e.bends for c, e in zip((1, 2), d.edges)}
    assert placed == {(1, 1): ((1, 2),), (3, 3): ((3, 2),)}


def test_degree_four_rejected():
    star = SimpleGraph(5, tuple((0, i) for i in range(1, 5)))
    with pytest.raises(NotBinaryTree):
        embed_binary_tree(star, gen.random_points(5, random.Random(0)))


@settings(max_examples=60)
@given(st.integers(1, 80), st.integers(0, 10**6))
def test_random_trees_are_clean_and_inside_the_box(n, seed):
    rng = random.Random(seed)
    t = gen.random_binary_tree(n, rng)
    d = embed_binary_tree(t, gen.random_points(n, rng))
    assert verify(d, RESTRICTED_ONE, graph=t).ok
    _inside_box(d)


def test_two_vertex_path_bend():
    d = embed_path_or_cycle_mapped(SimpleGraph(2, ((0, 1),)), PointSet(((1, 2), (2, 1))), (0, 1))
    assert d.edges[0].bends == ((2, 2),)


def test_four_cycle_on_crossed_points():
    c4 = SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
    s = PointSet(((2, 2), (4, 4), (1, 1), (3, 3)))
    d = embed_path_or_cycle_mapped(c4, s, (0, 1, 2, 3))
    assert verify(d, RESTRICTED_ONE, mapping=(0, 1, 2, 3), graph=c4).ok


def test_path_or_cycle_shape_checked():
    star = SimpleGraph(4, ((0, 1), (0, 2), (0, 3)))
    with pytest.raises(NotPathOrCycle):
        embed_path_or_cycle_mapped(star, gen.random_points(4, random.Random(1)), (0, 1, 2, 3))


@settings(max_examples=60)
@given(st.integers(2, 80), st.booleans(), st.integers(0, 10**6))
def test_random_paths_and_cycles_respect_the_mapping(n, cyclic, seed):
    rng = random.Random(seed)
    if cyclic and n < 3:
        n = 3
    g = gen.random_cycle(n, rng) if cyclic else gen.random_path(n, rng)
    mu = gen.random_mapping(n, rng)
    d = embed_path_or_cycle_mapped(g, gen.random_points(n, rng), mu)
    assert verify(d, RESTRICTED_ONE, mapping=mu, graph=g).ok
