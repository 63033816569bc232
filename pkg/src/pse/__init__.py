"""Point-set embeddings of graphs with right-angle and large-angle crossings.

Constructions place a graph's vertices on a prescribed grid point set and
route every edge as a polyline with few bends; :func:`verify` checks any
drawing exactly against a drawing style.
"""
from .cactus import embed_cactus
from .errors import PSEError
from .geometry import AngleSpec, Segment, crossing_angle_satisfies, intersect, point_on_interior
from .model import CactusNode, CactusTree, Drawing, PointSet, SimpleGraph, StyleSpec, validate_instance
from .rac1 import embed_binary_tree, embed_path_or_cycle_mapped
from .rac1_decide import Infeasible, build_formula, decide_and_embed_rac1_mapped
from .rac2 import book_embed_maxdeg2_unmapped, bracket_embed, edge_color_4, matching_min_area
from .twosat import TwoSatFormula, Unsatisfiable, solve_2sat
from .unrestricted import alpha_ac1_embed, alpha_ac2_embed, rac3_embed
from .verifier import VerificationReport, drawing_stats, verify

__all__ = [
    "AngleSpec",
    "CactusNode",
    "CactusTree",
    "Drawing",
    "Infeasible",
    "PSEError",
    "PointSet",
    "Segment",
    "SimpleGraph",
    "StyleSpec",
    "TwoSatFormula",
    "Unsatisfiable",
    "VerificationReport",
    "alpha_ac1_embed",
    "alpha_ac2_embed",
    "book_embed_maxdeg2_unmapped",
    "bracket_embed",
    "build_formula",
    "crossing_angle_satisfies",
    "decide_and_embed_rac1_mapped",
    "drawing_stats",
    "edge_color_4",
    "embed_binary_tree",
    "embed_cactus",
    "embed_path_or_cycle_mapped",
    "intersect",
    "matching_min_area",
    "point_on_interior",
    "rac3_embed",
    "solve_2sat",
    "validate_instance",
    "verify",
]
