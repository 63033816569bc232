"""Exhaustive reference implementations, used as ground truth in tests.

These enumerate the whole search space and re-check every candidate with
exact geometry; they share no decision logic with the fast algorithms.
Guards are hard errors: an oracle that silently samples is not an oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import TooLarge
from .geometry import Kind, Segment, intersect, point_on_interior
from .model import Drawing, PointSet, SimpleGraph, make_drawing, validate_instance

MAX_MAPPED_EDGES = 20
MAX_UNMAPPED_VERTICES = 7
MAX_INTERVALS = 12


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    assignment: Optional[Tuple[bool, ...]] = None  # True: bend at (x(mu(v)), y(mu(u)))
    mapping: Optional[Tuple[int, ...]] = None
    witnesses: Optional[int] = None  # set only when counting

    def drawing(self, g: SimpleGraph, s: PointSet) -> Drawing:
        if not self.feasible:
            raise ValueError("infeasible instance has no drawing")
        pts = s.points
        bends = []
        for (u, v), val in zip(g.edges, self.assignment):
            pu, pv = pts[self.mapping[u]], pts[self.mapping[v]]
            bends.append([(pv[0], pu[1]) if val else (pu[0], pv[1])])
        return make_drawing(pts, self.mapping, g.edges, bends)


def _compatible(segs_a, segs_b) -> bool:
    for a in segs_a:
        for b in segs_b:
            if intersect(a, b).kind == Kind.COLLINEAR_OVERLAP:
                return False
    return True


def brute_rac1_mapped(
    g: SimpleGraph, s: PointSet, mu: Sequence[int], count: bool = False
) -> OracleResult:
    """Try every combination of the two L-shapes per edge.

    A combination is accepted when no two pieces of different edges share
    a positive-length sub-segment and no piece passes through a point.
    With ``count=True`` the whole space is enumerated and the number of
    accepted combinations reported.
    """
    if g.m > MAX_MAPPED_EDGES:
        raise TooLarge(f"{g.m} edges exceed the oracle guard of {MAX_MAPPED_EDGES}")
    inst = validate_instance(g, s, mu)
    mu = inst.mapping
    pts = s.points
    occupied = [pts[p] for p in mu]
    options: List[List[Tuple[Segment, Segment]]] = []
    for u, v in g.edges:
        pu, pv = pts[mu[u]], pts[mu[v]]
        opts = []
        for bend in ((pv[0], pu[1]), (pu[0], pv[1])):
            pieces = (Segment(pu, bend), Segment(bend, pv))
            clear = not any(point_on_interior(q, seg) for seg in pieces for q in occupied)
            opts.append(pieces if clear else None)
        options.append(opts)

    m = g.m
    chosen: List[int] = []
    found: Optional[Tuple[bool, ...]] = None
    total = 0

    def extend(i: int) -> bool:
        nonlocal found, total
        if i == m:
            total += 1
            if found is None:
                found = tuple(c == 0 for c in chosen)
            return not count
        for c in (0, 1):
            segs = options[i][c]
            if segs is None:
                continue
            if all(_compatible(segs, options[j][chosen[j]]) for j in range(i)):
                chosen.append(c)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    extend(0)
    return OracleResult(found is not None, found, mu if found is not None else None, total if count else None)


def brute_rac1_unmapped(g: SimpleGraph, s: PointSet) -> OracleResult:
    """Search every bijection (in lexicographic order) for a mapped drawing."""
    if g.n > MAX_UNMAPPED_VERTICES:
        raise TooLarge(f"{g.n} vertices exceed the oracle guard of {MAX_UNMAPPED_VERTICES}")
    validate_instance(g, s)
    for mu in permutations(range(g.n)):
        res = brute_rac1_mapped(g, s, mu)
        if res.feasible:
            return res
    return OracleResult(False)


def brute_min_layers(intervals: Sequence[Tuple[int, int]]) -> int:
    """Fewest layers such that intervals sharing a layer are disjoint."""
    k = len(intervals)
    if k > MAX_INTERVALS:
        raise TooLarge(f"{k} intervals exceed the oracle guard of {MAX_INTERVALS}")
    if k == 0:
        return 0
    ivs = [tuple(sorted(iv)) for iv in intervals]
    clash = [[i != j and ivs[i][0] <= ivs[j][1] and ivs[j][0] <= ivs[i][1] for j in range(k)] for i in range(k)]

    def colorable(limit: int) -> bool:
        layer = [-1] * k

        def place(i: int, used: int) -> bool:
            if i == k:
                return True
            # new layers are opened in order, which removes relabelled duplicates
            for c in range(min(used + 1, limit)):
                if all(not clash[i][j] or layer[j] != c for j in range(i)):
                    layer[i] = c
                    if place(i + 1, max(used, c + 1)):
                        return True
            layer[i] = -1
            return False

        return place(0, 0)

    for limit in range(1, k + 1):
        if colorable(limit):
            return limit
    return k


# ------------------------------------------------------ fixture searches


def _prufer_tree(seq: Sequence[int], n: int) -> List[Tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


def _isomorphic(e1, e2, n: int) -> bool:
    target = {frozenset(e) for e in e2}
    return any({frozenset((p[a], p[b])) for a, b in e1} == target for p in permutations(range(n)))


def binary_tree_shapes(n: int) -> List[SimpleGraph]:
    """All trees on n vertices with max degree 3, one per isomorphism class,
    in order of first appearance among lexicographic Pruefer sequences."""
    if n == 1:
        return [SimpleGraph(1, ())]
    if n == 2:
        return [SimpleGraph(2, ((0, 1),))]
    shapes: List[List[Tuple[int, int]]] = []
    for seq in product(range(n), repeat=n - 2):
        edges = _prufer_tree(seq, n)
        deg = [0] * n
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        if max(deg) > 3:
            continue
        if any(_isomorphic(edges, other, n) for other in shapes):
            continue
        shapes.append(edges)
    return [SimpleGraph(n, tuple(e)) for e in shapes]


def all_point_sets(n: int):
    for ys in permutations(range(1, n + 1)):
        yield PointSet(tuple((i + 1, y) for i, y in enumerate(ys)))


def _stars_feasible(g: SimpleGraph, s: PointSet, mu: Sequence[int]) -> bool:
    """Is every vertex's set of incident edges drawable on its own?"""
    for edges in g.incidence():
        if len(edges) > 1:
            star = SimpleGraph(g.n, tuple(g.edges[e] for e in edges))
            if not brute_rac1_mapped(star, s, mu).feasible:
                return False
    return True


def find_unsat_binary_tree(n: int = 6, global_only: bool = True) -> Dict:
    """First (tree, point set, mapping) without a restricted one-bend drawing.

    With ``global_only`` instances where a single vertex already cannot
    draw its own incident edges are skipped, so the conflict found spans
    several vertices. Enumeration order: tree shapes as in
    :func:`binary_tree_shapes`, then point sets by lexicographic
    y-permutation, then mappings lexicographically. Returns the instance
    together with its position in that order.
    """
    for ti, tree in enumerate(binary_tree_shapes(n)):
        for pi, s in enumerate(all_point_sets(n)):
            for mi, mu in enumerate(permutations(range(n))):
                if brute_rac1_mapped(tree, s, mu).feasible:
                    continue
                if global_only and not _stars_feasible(tree, s, mu):
                    continue
                return {
                    "n": n,
                    "edges": [list(e) for e in tree.edges],
                    "points": [list(p) for p in s.points],
                    "mapping": list(mu),
                    "manifest": {
                        "generator": "find_unsat_binary_tree",
                        "seed": None,
                        "enumeration": "tree shapes by first lexicographic Pruefer sequence, "
                        "then point sets by lexicographic y-permutation, then mappings lexicographically",
                        "tree_index": ti,
                        "point_set_index": pi,
                        "mapping_index": mi,
                        "global_only": global_only,
                    },
                }
    raise LookupError(f"every {n}-vertex binary tree instance is feasible")
