import random
from itertools import product

import pytest

from pse import generators as gen
from pse.errors import DegreeTooHigh
from pse.io import instance_from_doc, load_fixture
from pse.model import PointSet, SimpleGraph, StyleSpec
from pse.oracle import brute_rac1_mapped
from pse.rac1_decide import Infeasible, build_formula, decide_and_embed_rac1_mapped, format_certificate
from pse.verifier import verify

STYLE = StyleSpec.restricted_rac(1)


def test_single_edge_has_no_clauses():
    f = build_formula(SimpleGraph(2, ((0, 1),)), PointSet(((1, 2), (2, 1))), (0, 1))
    assert f.clauses == ()


def test_star_of_two_edges():
    g = SimpleGraph(3, ((0, 1), (0, 2)))
    s = PointSet(((1, 1), (2, 2), (3, 3)))
    f = build_formula(g, s, (0, 1, 2))
    assert len(f.clauses) == 2
    satisfying = [a for a in product((False, True), repeat=2) if f.satisfied_by(a)]
    assert satisfying == [(False, True), (True, False)]
    assert verify(decide_and_embed_rac1_mapped(g, s, (0, 1, 2)), STYLE).ok


def test_degree_above_four_rejected():
    g = SimpleGraph(6, tuple((0, i) for i in range(1, 6)))
    with pytest.raises(DegreeTooHigh):
        build_formula(g, gen.random_points(6, random.Random(0)), tuple(range(6)))


def test_unsat_fixture_is_infeasible_with_certificate():
    inst = instance_from_doc(load_fixture("unsat_tree6"))
    with pytest.raises(Infeasible) as info:
        decide_and_embed_rac1_mapped(inst.graph, inst.points, inst.mapping)
    assert info.value.conflicts
    text = format_certificate(inst.graph, info.value)
    assert "overlaps" in text
    assert not brute_rac1_mapped(inst.graph, inst.points, inst.mapping).feasible


def test_paths_and_cycles_are_always_feasible():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(3, 40)
        g = gen.random_cycle(n, rng) if rng.random() < 0.5 else gen.random_path(n, rng)
        mu = gen.random_mapping(n, rng)
        d = decide_and_embed_rac1_mapped(g, gen.random_points(n, rng), mu)
        assert verify(d, STYLE, mapping=mu, graph=g).ok


def test_agrees_with_exhaustive_search_on_small_instances():
    rng = random.Random(99)
    for _ in range(800):
        n = rng.randint(2, 8)
        g = gen.random_graph(n, 4, rng, m=rng.randint(1, min(10, n * (n - 1) // 2)))
        s = gen.random_points(n, rng)
        mu = gen.random_mapping(n, rng)
        truth = brute_rac1_mapped(g, s, mu).feasible
        try:
            d = decide_and_embed_rac1_mapped(g, s, mu)
        except Infeasible:
            assert not truth
        else:
            assert truth
            assert verify(d, STYLE, mapping=mu, graph=g).ok


def test_clause_count_is_linear():
    rng = random.Random(4)
    for n in (50, 500, 3000):
        g = gen.random_graph(n, 4, rng)
        f = build_formula(g, gen.random_points(n, rng), gen.random_mapping(n, rng))
        assert len(f.clauses) <= 24 * n
