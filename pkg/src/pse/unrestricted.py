"""Unrestricted constructions: RAC_3, large-angle two-bend and one-bend drawings.

All three number the vertices by the x-coordinate of their points: vertex
``v_i`` is the one sitting on the point with x = i. Without a mapping,
vertex ``j`` goes to the point with x = j + 1.
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .errors import InvalidEpsilon
from .geometry import AngleSpec
from .model import Drawing, PointSet, SimpleGraph, make_drawing, validate_instance


def _mapping(g: SimpleGraph, s: PointSet, mu: Optional[Sequence[int]]) -> Tuple[int, ...]:
    inst = validate_instance(g, s, mu)
    if inst.mapping is not None:
        return inst.mapping
    by_x = s.by_x()
    return tuple(by_x[j] for j in range(g.n))


def _x_index(s: PointSet, mapping: Sequence[int]) -> List[int]:
    return [s.points[p][0] for p in mapping]


def _check_eps(eps: AngleSpec) -> None:
    if eps.is_right or not 0 < eps.degrees < 90:
        raise InvalidEpsilon(f"epsilon must lie strictly between 0 and 90 degrees, got {eps.degrees}")


def rac3_anchors(n: int, degree_of_index: Sequence[int]) -> List[int]:
    """Anchor rows ``y_1..y_n`` (returned 0-based) for vertex degrees by x."""
    y = [0] * n
    for i in range(n - 1, 0, -1):
        d = degree_of_index[i]
        y[i - 1] = y[i] - (2 * (d - 1) + 3 if d >= 1 else 3)
    return y


def rac3_embed(g: SimpleGraph, s: PointSet, mu: Optional[Sequence[int]] = None) -> Drawing:
    """Three-bend drawing with every crossing at a right angle.

    The end bends of all edges at ``v_i`` sit in column i + 1 at rows
    ``y_i, y_i - 2, ...``; the middle bend joins them with slopes +1 and -1.
    """
    mapping = _mapping(g, s, mu)
    xi = _x_index(s, mapping)
    n = g.n
    deg = g.degrees()
    deg_by_x = [0] * n
    for v in range(n):
        deg_by_x[xi[v] - 1] = deg[v]
    anchor = rac3_anchors(n, deg_by_x)
    used = [0] * n
    bends = []
    for u, v in g.edges:
        if xi[u] > xi[v]:
            u, v = v, u
        slots = []
        for w in (u, v):
            i = xi[w]
            slots.append((i + 1, anchor[i - 1] - 2 * used[w]))
            used[w] += 1
        (a, b), (c, d) = slots
        mid = ((a + c + d - b) // 2, (b + d + c - a) // 2)
        bends.append([(a, b), mid, (c, d)])
    fixed = [bs if xi[e[0]] < xi[e[1]] else bs[::-1] for e, bs in zip(g.edges, bends)]
    return make_drawing(s.points, mapping, g.edges, fixed)


def alpha_ac2_embed(
    g: SimpleGraph, s: PointSet, eps: AngleSpec, mu: Optional[Sequence[int]] = None
) -> Drawing:
    """Two-bend drawing with crossing angles at least 90 degrees minus eps.

    Edge number k (1-based) runs horizontally on its own row -k - ceil(cot eps)
    below the grid, reached from both endpoints through column x + 1.
    """
    _check_eps(eps)
    mapping = _mapping(g, s, mu)
    xi = _x_index(s, mapping)
    c = eps.ceil_cot()
    bends = []
    for k, (u, v) in enumerate(g.edges, start=1):
        row = -k - c
        bends.append([(xi[u] + 1, row), (xi[v] + 1, row)])
    return make_drawing(s.points, mapping, g.edges, bends)


def refinement_factor(eps: AngleSpec) -> int:
    return 1 + eps.ceil_cot()


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def alpha_ac1_embed(
    g: SimpleGraph, s: PointSet, eps: AngleSpec, mu: Optional[Sequence[int]] = None
) -> Drawing:
    """One-bend drawing on the grid refined by ``1 + ceil(cot eps)``.

    Each edge starts as the L-shape bent at (x_v, y_u), v the endpoint
    further right, and its bend is pushed one refined unit diagonally so the
    near-horizontal piece slopes slightly down and the near-vertical piece
    steeply up.
    """
    _check_eps(eps)
    mapping = _mapping(g, s, mu)
    lam = refinement_factor(eps)
    pts = s.points
    bends = []
    for u, v in g.edges:
        pu, pv = pts[mapping[u]], pts[mapping[v]]
        if pu[0] > pv[0]:
            pu, pv = pv, pu
        bends.append([(lam * pv[0] - _sign(pv[1] - pu[1]), lam * pu[1] - _sign(pv[0] - pu[0]))])
    return make_drawing(pts, mapping, g.edges, bends, lam=lam)
