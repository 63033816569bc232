"""Seeded random instance generators.

Every generator takes a ``random.Random`` so that a seed fully determines
the instance.
"""
from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .model import CactusNode, CactusTree, PointSet, SimpleGraph


def random_points(n: int, rng: random.Random) -> PointSet:
    """Permutation grid ``(i, pi(i))`` for a random permutation ``pi``."""
    ys = list(range(1, n + 1))
    rng.shuffle(ys)
    return PointSet(tuple((i + 1, y) for i, y in enumerate(ys)))


def random_collinear_points(n: int, rng: random.Random, spread: int = 3) -> PointSet:
    ys = sorted(rng.sample(range(1, spread * n + 1), n)) if n else []
    return PointSet(tuple((0, y) for y in ys), collinear=True)


def random_mapping(n: int, rng: random.Random) -> Tuple[int, ...]:
    mu = list(range(n))
    rng.shuffle(mu)
    return tuple(mu)


def _relabel(n: int, edges, rng: random.Random) -> SimpleGraph:
    perm = random_mapping(n, rng)
    out = [(perm[a], perm[b]) for a, b in edges]
    rng.shuffle(out)
    return SimpleGraph(n, tuple(out))


def random_binary_tree(n: int, rng: random.Random) -> SimpleGraph:
    """Random tree grown by attaching each new vertex under a parent that
    still has fewer than two children; max degree 3."""
    if n <= 1:
        return SimpleGraph(n, ())
    kids = [0] * n
    open_slots = [0]
    edges = []
    for v in range(1, n):
        parent = rng.choice(open_slots)
        edges.append((parent, v))
        kids[parent] += 1
        if kids[parent] == 2:
            open_slots.remove(parent)
        open_slots.append(v)
    return _relabel(n, edges, rng)


def random_path(n: int, rng: random.Random) -> SimpleGraph:
    return _relabel(n, [(i, i + 1) for i in range(n - 1)], rng)


def random_cycle(n: int, rng: random.Random) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return _relabel(n, [(i, (i + 1) % n) for i in range(n)], rng)


def random_graph(n: int, max_degree: int, rng: random.Random, m: Optional[int] = None) -> SimpleGraph:
    """Random simple graph with a degree cap.

    Up to ``m`` edges (default ``n * max_degree // 2``) are drawn by
    rejection sampling; fewer may result when the cap makes them scarce.
    """
    deg = [0] * n
    seen = set()
    edges: List[Tuple[int, int]] = []
    target = m if m is not None else n * max_degree // 2
    tries = 0
    while len(edges) < target and tries < 20 * (target + n) and n >= 2:
        tries += 1
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b or deg[a] >= max_degree or deg[b] >= max_degree:
            continue
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        deg[a] += 1
        deg[b] += 1
        edges.append((a, b))
    return SimpleGraph(n, tuple(edges))


def random_matching(n: int, rng: random.Random) -> SimpleGraph:
    if n % 2:
        raise ValueError("a perfect matching needs an even number of vertices")
    order = random_mapping(n, rng)
    return SimpleGraph(n, tuple((order[i], order[i + 1]) for i in range(0, n, 2)))


def random_maxdeg2(n: int, rng: random.Random) -> SimpleGraph:
    """Disjoint union of random paths and cycles."""
    edges = []
    start = 0
    while start < n:
        size = rng.randint(1, max(1, min(n - start, 8)))
        if size >= 3 and rng.random() < 0.5:
            edges += [(start + i, start + (i + 1) % size) for i in range(size)]
        else:
            edges += [(start + i, start + i + 1) for i in range(size - 1)]
        start += size
    return _relabel(n, edges, rng)


def _cycle_lengths(n: int, rng: random.Random, max_k: int) -> List[int]:
    if n < 3:
        raise ValueError("a cactus needs at least 3 vertices")
    lengths = []
    left = n
    while left:
        # fewer than 6 vertices cannot be split into two cycles
        if left < 6 or (left <= max_k and rng.random() < 0.3):
            lengths.append(left)
            break
        k = rng.randint(3, min(max_k, left - 3))
        lengths.append(k)
        left -= k
    rng.shuffle(lengths)
    return lengths


def random_cactus(n: int, rng: random.Random, max_k: int = 7) -> CactusTree:
    """Random binary tree of cycles with ``n`` vertices in total."""
    lengths = _cycle_lengths(n, rng, max_k)
    perm = random_mapping(n, rng)
    nodes = []
    nxt = 0
    for k in lengths:
        nodes.append(CactusNode([perm[nxt + i] for i in range(k)]))
        nxt += k
    open_nodes = [nodes[0]]
    for node in nodes[1:]:
        parent = rng.choice(open_nodes)
        slots = [s for s in ("left", "right") if getattr(parent, s) is None]
        side = rng.choice(slots)
        setattr(parent, side, node)
        if len(slots) == 1:
            open_nodes.remove(parent)
        open_nodes.append(node)
    for i, node in enumerate(nodes):
        roles = []
        if i:
            roles.append("z")
        if node.left is not None:
            roles.append("u")
        if node.right is not None:
            roles.append("v")
        for role, pos in zip(roles, rng.sample(range(node.k), len(roles))):
            setattr(node, role, pos)
    return CactusTree(nodes[0])


def single_cycle_cactus(k: int) -> CactusTree:
    return CactusTree(CactusNode(list(range(k))))
