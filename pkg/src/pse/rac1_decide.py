"""Deciding mu-respecting restricted RAC_1 embeddings with 2-SAT.

Edge ``e = (u, v)`` (in edge-list order) owns variable ``e``: true draws it
with the bend at ``(x(mu(v)), y(mu(u)))`` (leave ``u`` horizontally), false
with the bend at ``(x(mu(u)), y(mu(v)))``. In a permutation grid only edges
sharing a vertex can overlap, so clauses are only generated per vertex.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from .errors import DegreeTooHigh, PSEError
from .geometry import segments_overlap
from .model import Drawing, PointSet, SimpleGraph, make_drawing, validate_instance
from .twosat import TwoSatFormula, Unsatisfiable, solve_2sat


class Infeasible(PSEError):
    """No mu-respecting restricted RAC_1 embedding exists.

    ``conflicts`` holds one entry per clause of the failing component of the
    implication graph: ``((edge, bend), (edge, bend))``, two drawing
    choices that overlap each other.
    """

    def __init__(self, message: str, conflicts: List[Tuple[Tuple[int, tuple], Tuple[int, tuple]]]):
        super().__init__(message)
        self.conflicts = conflicts


def candidate_bends(g: SimpleGraph, s: PointSet, mu: Sequence[int]) -> List[Tuple[tuple, tuple]]:
    """Per edge: (bend when true, bend when false)."""
    pts = s.points
    out = []
    for u, v in g.edges:
        pu, pv = pts[mu[u]], pts[mu[v]]
        out.append(((pv[0], pu[1]), (pu[0], pv[1])))
    return out


def build_formula(g: SimpleGraph, s: PointSet, mu: Sequence[int]) -> TwoSatFormula:
    inst = validate_instance(g, s, mu)
    mu = inst.mapping
    inc = g.incidence()
    for v, edges in enumerate(inc):
        if len(edges) > 4:
            raise DegreeTooHigh(f"vertex {v} has degree {len(edges)} > 4")
    pts = s.points
    # shapes[e][0] / shapes[e][1]: the two pieces of e when true / false
    shapes = []
    for (u, v), (bt, bf) in zip(g.edges, candidate_bends(g, s, mu)):
        pu, pv = pts[mu[u]], pts[mu[v]]
        shapes.append((((pu, bt), (bt, pv)), ((pu, bf), (bf, pv))))

    clauses = []
    overlap = segments_overlap
    for edges in inc:
        d = len(edges)
        for i in range(d):
            e = edges[i]
            for j in range(i + 1, d):
                f = edges[j]
                for ce in (0, 1):
                    a1, a2 = shapes[e][ce]
                    for cf in (0, 1):
                        b1, b2 = shapes[f][cf]
                        if overlap(a1, b1) or overlap(a1, b2) or overlap(a2, b1) or overlap(a2, b2):
                            # forbid x_e == (ce == 0) together with x_f == (cf == 0)
                            clauses.append((e + 1 if ce else -(e + 1), f + 1 if cf else -(f + 1)))
    return TwoSatFormula(g.m, tuple(clauses))


def drawing_from_assignment(
    g: SimpleGraph, s: PointSet, mu: Sequence[int], assignment: Sequence[bool]
) -> Drawing:
    cands = candidate_bends(g, s, mu)
    bends = [[bt if val else bf] for (bt, bf), val in zip(cands, assignment)]
    return make_drawing(s.points, mu, g.edges, bends)


def decide_and_embed_rac1_mapped(g: SimpleGraph, s: PointSet, mu: Sequence[int]) -> Drawing:
    """The drawing for a satisfying assignment, or raise :class:`Infeasible`."""
    f = build_formula(g, s, mu)
    mu = tuple(mu)
    try:
        assignment = solve_2sat(f)
    except Unsatisfiable as exc:
        cands = candidate_bends(g, s, mu)
        conflicts = []
        for a, b in exc.clauses:
            # clause (a or b) forbids the choices (not a) and (not b)
            ea, eb = abs(a) - 1, abs(b) - 1
            conflicts.append(((ea, cands[ea][0 if a < 0 else 1]), (eb, cands[eb][0 if b < 0 else 1])))
        raise Infeasible(
            f"no restricted RAC_1 drawing respects the mapping (edge {exc.variable} is forced both ways)",
            conflicts,
        ) from None
    return drawing_from_assignment(g, s, mu, assignment)


def format_certificate(g: SimpleGraph, exc: Infeasible) -> str:
    lines = [str(exc)]
    for (ea, ba), (eb, bb) in exc.conflicts:
        lines.append(
            f"  edge {g.edges[ea]} bent at {ba} overlaps edge {g.edges[eb]} bent at {bb}"
        )
    return "\n".join(lines)
