"""Restricted RAC_1 embeddings of binary trees of cycles (cacti).

Each cycle is handled like one vertex of the binary-tree construction: its
k points are the k consecutive columns between the left and right subtree
regions. The connector ``u`` reaches the left subtree through its left
port, ``v`` the right subtree through its right port, and ``z`` is entered
vertically from the parent point at row ``y_r``.

Inside a cycle every edge is an L-shape, and two L-shapes at a shared
point overlap exactly when they use the same port (left/right/up/down) of
that point. So once a cycle's vertex->point mapping is fixed, choosing the
L-shapes is a 2-SAT problem over the cycle's edges with the connector ports
blocked. The mapping itself follows the case analysis below; for the four-
and three-vertex configurations the mapping is searched among all k!
candidates, cheapest first.
"""
from __future__ import annotations

from itertools import permutations
from typing import Dict, List, MutableMapping, Optional, Sequence, Tuple

from .errors import SizeMismatch
from .model import CactusNode, CactusTree, Drawing, PointSet, edge_key, make_drawing
from .twosat import TwoSatFormula, Unsatisfiable, solve_2sat

# every branch of the case analysis for inner cycles (both children present)
PLACEMENT_CASES = (
    "1",
    "2a",
    "2b",
    "3-middle",
    "3-k>=5",
    "3-k=4-between",
    "3-k=4-below",
    "3-k=4-above",
    "3-k=3",
)
# same-side shortcuts and the root/leaf/one-child extensions
BOUNDARY_CASES = ("2-same", "3-k=4-same", "root", "leaf", "single-child")

_EXHAUSTIVE_K = 6


def _port(a, b, horizontal: bool) -> str:
    if horizontal:
        return "R" if b[0] > a[0] else "L"
    return "U" if b[1] > a[1] else "D"


def orient_cycle(
    coords: Sequence[Tuple[int, int]], blocked: Sequence[Optional[str]]
) -> Optional[List[bool]]:
    """L-shape choices for the cycle through ``coords`` (in cyclic order).

    Edge ``i`` joins point ``i`` to point ``i + 1``; choice True leaves point
    ``i`` horizontally. ``blocked[i]`` is a port of point ``i`` already used
    by a connector. Returns None if no port-disjoint choice exists.
    """
    k = len(coords)
    clauses = []
    for i in range(k):
        a = coords[i]
        e_out, e_in = i, (i - 1) % k
        b, prev = coords[(i + 1) % k], coords[(i - 1) % k]
        # port used at a by each choice of its two cycle edges
        out_ports = {True: _port(a, b, True), False: _port(a, b, False)}
        in_ports = {True: _port(a, prev, False), False: _port(a, prev, True)}
        for co, po in out_ports.items():
            lit_o = e_out + 1 if co else -(e_out + 1)
            if po == blocked[i]:
                clauses.append((-lit_o, -lit_o))
            for ci, pi in in_ports.items():
                lit_i = e_in + 1 if ci else -(e_in + 1)
                if po == pi:
                    clauses.append((-lit_o, -lit_i))
        for ci, pi in in_ports.items():
            lit_i = e_in + 1 if ci else -(e_in + 1)
            if pi == blocked[i]:
                clauses.append((-lit_i, -lit_i))
    try:
        return solve_2sat(TwoSatFormula(k, tuple(clauses)))
    except Unsatisfiable:
        return None


class _CyclePlacer:
    def __init__(self, node: CactusNode, pts: List[int], coords, y_r: Optional[int]):
        self.node = node
        self.pts = pts  # reserved point ids, left to right
        self.P = coords
        self.y_r = y_r
        vs = node.vertices
        self.Z = vs[node.z] if node.z is not None else None
        self.U = vs[node.u] if node.u is not None else None
        self.V = vs[node.v] if node.v is not None else None

    def Y(self, p):
        return self.P[p][1]

    def X(self, p):
        return self.P[p][0]

    def side(self, p) -> int:
        return 1 if self.Y(p) > self.y_r else -1

    def same_side_pair(self, cands) -> Optional[Tuple[int, int]]:
        """Two candidates on one side of y_r, the first closer to it."""
        for sgn in (1, -1):
            group = sorted((p for p in cands if self.side(p) == sgn), key=lambda p: abs(self.Y(p) - self.y_r))
            if len(group) >= 2:
                return group[0], group[1]
        return None

    def z_neighbours(self):
        vs, k, z = self.node.vertices, self.node.k, self.node.z
        return vs[(z + 1) % k], vs[(z - 1) % k]

    def complete(self, fixed: Dict[int, int]) -> Dict[int, int]:
        """Place the unfixed vertices on the unused points, left to right."""
        vs = self.node.vertices
        start = self.node.z if self.node.z is not None else 0
        rest_v = [vs[(start + i) % len(vs)] for i in range(len(vs))]
        rest_v = [v for v in rest_v if v not in fixed]
        used = set(fixed.values())
        rest_p = [p for p in self.pts if p not in used]
        out = dict(fixed)
        out.update(zip(rest_v, rest_p))
        return out

    def all_mappings(self):
        vs = self.node.vertices
        for perm in permutations(self.pts):
            yield dict(zip(vs, perm))

    def plan(self) -> Tuple[str, List[Dict[int, int]], bool]:
        """(case label, candidate partial mappings, search all k! afterwards)."""
        pts, k = self.pts, self.node.k
        U, V, Z = self.U, self.V, self.Z
        p1, pk = pts[0], pts[-1]
        inner = pts[1:-1]
        if Z is None:
            fixed = {}
            if U is not None:
                fixed[U] = p1
            if V is not None:
                fixed[V] = pk
            return "root", [fixed], False

        if U is None or V is None:
            fixed, avail = {}, list(pts)
            if U is not None:
                fixed[U] = p1
                avail.remove(p1)
            if V is not None:
                fixed[V] = pk
                avail.remove(pk)
            w = next(x for x in self.z_neighbours() if x not in (U, V))
            pair = self.same_side_pair(avail)
            cands = []
            if pair is not None:
                fixed.update({Z: pair[0], w: pair[1]})
                cands.append(fixed)
            label = "leaf" if U is None and V is None else "single-child"
            return label, cands, k <= _EXHAUSTIVE_K

        free = [x for x in self.z_neighbours() if x not in (U, V)]
        if free:
            w = free[0]
            if k >= 5:
                p, q = self.same_side_pair(inner)
                return "1", [{U: p1, V: pk, Z: p, w: q}], False
            # k == 4: the cycle is (u, w, z, v) or its mirror (u, z, w, v)
            p2, p3 = inner
            if self.side(p2) == self.side(p3):
                p, q = self.same_side_pair(inner)
                return "2-same", [{U: p1, V: pk, Z: p, w: q}], False
            z_next_to_v = V in self.z_neighbours()
            if z_next_to_v:
                near, mid, far = pts[2], pts[1], pts[3]
            else:
                near, mid, far = pts[1], pts[2], pts[0]
            sub = "2a" if (self.Y(far) > self.Y(near)) == (self.Y(mid) > self.Y(near)) else "2b"
            return sub, [{U: p1, V: pk, Z: p2, w: p3}, {U: p1, V: pk, Z: p3, w: p2}], True

        lo, hi = sorted((self.Y(p1), self.Y(pk)))
        middle = [p for p in inner if lo < self.Y(p) < hi]
        if middle:
            return "3-middle", [{U: p1, V: pk, Z: middle[0]}], False
        if k >= 5 or (k == 4 and self.side(inner[0]) == self.side(inner[1])):
            p, q = self.same_side_pair(inner)
            fixed = {Z: p, U: q, V: pk} if self.X(q) < self.X(p) else {Z: p, V: q, U: p1}
            return ("3-k>=5" if k >= 5 else "3-k=4-same"), [fixed], False
        if k == 3:
            return "3-k=3", [{U: p1, V: pk, Z: inner[0]}], False
        p2, p3 = inner
        ylo, yhi = sorted((self.Y(p2), self.Y(p3)))
        if ylo < lo and hi < yhi:
            w = next(x for x in self.node.vertices if x not in (U, V, Z))
            return "3-k=4-between", [{U: p1, V: pk, Z: p2, w: p3}], False
        sub = "3-k=4-below" if hi < ylo else "3-k=4-above"
        return sub, [], True

    def place(self) -> Tuple[str, Dict[int, int], List[bool], bool]:
        label, cands, search = self.plan()
        for fixed in cands:
            mapping = self.complete(fixed)
            choices = self.orient(mapping)
            if choices is not None:
                return label, mapping, choices, False
        used_fallback = not search
        if self.node.k <= _EXHAUSTIVE_K:
            for mapping in self.all_mappings():
                choices = self.orient(mapping)
                if choices is not None:
                    return label, mapping, choices, used_fallback
        raise RuntimeError(f"cycle placement failed in case {label}")

    def orient(self, mapping: Dict[int, int]) -> Optional[List[bool]]:
        vs = self.node.vertices
        coords = [self.P[mapping[v]] for v in vs]
        blocked: List[Optional[str]] = []
        for v, c in zip(vs, coords):
            if v == self.U:
                blocked.append("L")
            elif v == self.V:
                blocked.append("R")
            elif v == self.Z:
                blocked.append("U" if self.y_r > c[1] else "D")
            else:
                blocked.append(None)
        return orient_cycle(coords, blocked)


def _subtree_sizes(c: CactusTree) -> Dict[int, int]:
    sizes: Dict[int, int] = {}
    for node in reversed(c.nodes()):
        sizes[id(node)] = node.k + sum(sizes[id(ch)] for ch in node.children())
    return sizes


def embed_cactus(
    c: CactusTree, s: PointSet, case_log: Optional[MutableMapping[str, int]] = None
) -> Drawing:
    """Restricted RAC_1 embedding of a cactus on a permutation grid.

    ``case_log``, if given, is incremented per cycle with the name of the
    case branch that placed it (plus ``"fallback"`` whenever a case's own
    mapping failed and the exhaustive search had to step in).
    """
    g = c.graph()
    if g.n != len(s):
        raise SizeMismatch(f"cactus has {g.n} vertices but there are {len(s)} points")
    P = s.points
    by_x = s.by_x()
    sizes = _subtree_sizes(c)
    mapping = [-1] * g.n
    bends: Dict[Tuple[int, int], Tuple[int, int]] = {}

    stack = [(c.root, 0, None)]
    while stack:
        node, lo, parent_vertex = stack.pop()
        left = sizes[id(node.left)] if node.left is not None else 0
        reserved = by_x[lo + left : lo + left + node.k]
        y_r = P[mapping[parent_vertex]][1] if parent_vertex is not None else None
        label, placed, choices, fallback = _CyclePlacer(node, reserved, P, y_r).place()
        if case_log is not None:
            case_log[label] = case_log.get(label, 0) + 1
            if fallback:
                case_log["fallback"] = case_log.get("fallback", 0) + 1
        for v, p in placed.items():
            mapping[v] = p
        vs = node.vertices
        for i, horizontal_first in enumerate(choices):
            a, b = vs[i], vs[(i + 1) % node.k]
            pa, pb = P[placed[a]], P[placed[b]]
            bends[edge_key(a, b)] = (pb[0], pa[1]) if horizontal_first else (pa[0], pb[1])
        if parent_vertex is not None:
            pz, pr = P[placed[vs[node.z]]], P[mapping[parent_vertex]]
            bends[edge_key(parent_vertex, vs[node.z])] = (pz[0], pr[1])
        if node.left is not None:
            stack.append((node.left, lo, vs[node.u]))
        if node.right is not None:
            stack.append((node.right, lo + left + node.k, vs[node.v]))

    return make_drawing(P, mapping, g.edges, [[bends[edge_key(a, b)]] for a, b in g.edges])
