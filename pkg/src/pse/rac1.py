"""Restricted one-bend constructions: binary trees and mapped paths/cycles.

Every edge is an L-shape: it leaves one endpoint horizontally and enters the
other vertically, with its bend on the original grid.
"""
from __future__ import annotations

from typing import List, Optional, Sequence

from .errors import NotATree, NotBinaryTree, NotPathOrCycle, SizeMismatch
from .model import Drawing, PointSet, SimpleGraph, make_drawing, rooted_children, validate_instance


def l_bend(p_from, p_to):
    """Bend of the L-shape that leaves ``p_from`` horizontally."""
    return (p_to[0], p_from[1])


def _default_root(t: SimpleGraph) -> int:
    deg = t.degrees()
    for v in range(t.n):
        if deg[v] <= 2:
            return v
    raise NotBinaryTree("every vertex has degree 3 or more")


def embed_binary_tree(t: SimpleGraph, s: PointSet, root: Optional[int] = None) -> Drawing:
    """Restricted RAC_1 embedding of a binary tree on a permutation grid.

    Each vertex gets the point whose x-rank in its subtree's column range
    leaves exactly the first child's subtree to its left; the second child's
    subtree ends up on the right. Children are entered vertically and
    parents leave horizontally, so the two outgoing horizontals of a vertex
    point in opposite directions.
    """
    if t.n != len(s):
        raise SizeMismatch(f"{t.n} vertices but {len(s)} points")
    if t.n == 0:
        return make_drawing(s.points, (), (), ())
    if root is None:
        root = _default_root(t)
    try:
        order, children, size = rooted_children(t, root)
    except NotATree as exc:
        raise NotBinaryTree(str(exc)) from None
    for v in range(t.n):
        if len(children[v]) > 2:
            raise NotBinaryTree(f"vertex {v} has {len(children[v])} children")

    by_x = s.by_x()
    mapping = [-1] * t.n
    lo = [0] * t.n
    lo[root] = 0
    for v in order:
        kids = children[v]
        left = size[kids[0]] if kids else 0
        here = lo[v] + left
        mapping[v] = by_x[here]
        if kids:
            lo[kids[0]] = lo[v]
        if len(kids) == 2:
            lo[kids[1]] = here + 1

    pts = s.points
    bends = []
    for a, b in t.edges:
        if mapping[a] == -1 or mapping[b] == -1:
            raise NotBinaryTree("graph is not connected")
        parent, child = (a, b) if b in children[a] else (b, a)
        bend = l_bend(pts[mapping[parent]], pts[mapping[child]])
        bends.append([bend])
    return make_drawing(pts, mapping, t.edges, bends)


def path_or_cycle_order(g: SimpleGraph) -> List[int]:
    """Vertex sequence of a graph that is a single path or cycle.

    A path starts at its lower-numbered end; a cycle starts at its smallest
    vertex and continues to that vertex's first neighbour in edge order.
    """
    n = g.n
    if n == 0:
        return []
    adj = g.adjacency()
    deg = [len(a) for a in adj]
    if g.m == n - 1:
        ends = [v for v in range(n) if deg[v] <= 1]
        if any(d > 2 for d in deg) or not ends:
            raise NotPathOrCycle("not a path")
        start = min(ends)
    elif g.m == n:
        if any(d != 2 for d in deg):
            raise NotPathOrCycle("not a cycle")
        start = 0
    else:
        raise NotPathOrCycle(f"{n} vertices and {g.m} edges")
    seq, prev, cur = [start], -1, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt or nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        seq.append(cur)
    if len(seq) != n:
        raise NotPathOrCycle("graph is disconnected")
    return seq


def embed_path_or_cycle_mapped(g: SimpleGraph, s: PointSet, mu: Sequence[int]) -> Drawing:
    """Leave each point horizontally and enter the next one vertically."""
    inst = validate_instance(g, s, mu)
    seq = path_or_cycle_order(g)
    succ = {}
    for i, v in enumerate(seq):
        if i + 1 < len(seq):
            succ[v] = seq[i + 1]
    if g.m == g.n and g.n > 0:
        succ[seq[-1]] = seq[0]
    pts = s.points
    mapping = inst.mapping
    bends = []
    for a, b in g.edges:
        first, second = (a, b) if succ.get(a) == b else (b, a)
        bends.append([l_bend(pts[mapping[first]], pts[mapping[second]])])
    return make_drawing(pts, mapping, g.edges, bends)
