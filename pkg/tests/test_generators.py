import random

from hypothesis import given
from hypothesis import strategies as st

from pse import generators as gen
from pse.model import bfs_order

sizes = st.integers(1, 150)
seeds = st.integers(0, 10**6)


@given(sizes, seeds)
def test_points_form_a_permutation_grid(n, seed):
    s = gen.random_points(n, random.Random(seed))
    assert sorted(x for x, _ in s.points) == list(range(1, n + 1))


@given(sizes, seeds)
def test_binary_trees(n, seed):
    t = gen.random_binary_tree(n, random.Random(seed))
    assert t.max_degree() <= 3
    assert len(bfs_order(t, 0)[0]) == n


@given(st.integers(3, 150), seeds)
def test_cacti_and_cycles(n, seed):
    rng = random.Random(seed)
    c = gen.random_cactus(n, rng)
    assert c.n == n and all(node.k >= 3 for node in c.nodes())
    assert gen.random_cycle(n, rng).degrees() == [2] * n


@given(sizes, st.integers(2, 4), seeds)
def test_bounded_degree_graphs(n, d, seed):
    g = gen.random_graph(n, d, random.Random(seed))
    assert g.max_degree() <= d


@given(st.integers(1, 60), seeds)
def test_matchings_and_maxdeg2(half, seed):
    rng = random.Random(seed)
    assert gen.random_matching(2 * half, rng).degrees() == [1] * (2 * half)
    assert gen.random_maxdeg2(2 * half, rng).max_degree() <= 2
    s = gen.random_collinear_points(2 * half, rng)
    assert s.collinear and len({y for _, y in s.points}) == 2 * half
