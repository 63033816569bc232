import random

import pytest

from pse import generators as gen
from pse.cactus import BOUNDARY_CASES, PLACEMENT_CASES, embed_cactus, orient_cycle
from pse.errors import SizeMismatch
from pse.model import CactusNode, CactusTree, PointSet, StyleSpec
from pse.verifier import verify

STYLE = StyleSpec.restricted_rac(1)


def _check(c, s, log=None):
    d = embed_cactus(c, s, log)
    assert verify(d, STYLE, graph=c.graph()).ok
    return d


def test_single_triangle():
    d = _check(gen.single_cycle_cactus(3), PointSet(((1, 1), (2, 3), (3, 2))))
    # each point has one horizontal and one vertical piece
    for w in range(3):
        p = d.vertex_point(w)
        dirs = set()
        for i, e in enumerate(d.edges):
            pl = d.polyline(i)
            if pl[0] == p:
                dirs.add("h" if pl[1][1] == p[1] else "v")
            if pl[-1] == p:
                dirs.add("h" if pl[-2][1] == p[1] else "v")
        assert dirs == {"h", "v"}


def test_triangle_with_triangle_child_on_every_small_grid():
    child = CactusNode([3, 4, 5], z=0)
    c = CactusTree(CactusNode([0, 1, 2], u=1, left=child))
    rng = random.Random(3)
    for _ in range(200):
        _check(c, gen.random_points(6, rng))


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        embed_cactus(gen.single_cycle_cactus(3), PointSet(((1, 1), (2, 2))))


def test_random_cacti_cover_the_case_analysis():
    rng = random.Random(11)
    log = {}
    for _ in range(150):
        n = rng.randint(3, 60)
        _check(gen.random_cactus(n, rng), gen.random_points(n, rng), log)
    assert log.get("fallback", 0) == 0
    assert set(log) <= set(PLACEMENT_CASES) | set(BOUNDARY_CASES)


def _ports(coords, choice):
    """Ports used at each point when edge i leaves point i horizontally iff choice[i]."""
    k = len(coords)
    used = [[] for _ in range(k)]
    for i, h in enumerate(choice):
        a, b = coords[i], coords[(i + 1) % k]
        right, up = b[0] > a[0], b[1] > a[1]
        used[i].append(("R" if right else "L") if h else ("U" if up else "D"))
        used[(i + 1) % k].append(("U" if not up else "D") if h else ("L" if right else "R"))
    return used


def _feasible(coords, blocked, choice):
    return all(len(set(u)) == len(u) and blocked[i] not in u for i, u in enumerate(_ports(coords, choice)))


def test_orient_cycle_matches_exhaustive_search():
    rng = random.Random(17)
    for _ in range(3000):
        k = rng.randint(3, 7)
        coords = list(gen.random_points(k, rng).points)
        blocked = [rng.choice((None, None, "L", "R", "U", "D")) for _ in range(k)]
        got = orient_cycle(coords, blocked)
        exists = any(_feasible(coords, blocked, [bool(m >> i & 1) for i in range(k)]) for m in range(1 << k))
        assert (got is not None) == exists
        if got is not None:
            assert _feasible(coords, blocked, got)


def test_orient_cycle_blocked_corner():
    # both neighbours of (1,1) lie up and to the right, so its two edges need R and U
    tri = [(1, 1), (2, 3), (3, 2)]
    assert orient_cycle(tri, [None] * 3) is not None
    assert orient_cycle(tri, ["R", None, None]) is None
