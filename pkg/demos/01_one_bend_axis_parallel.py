"""One bend per edge, every segment horizontal or vertical.

Run with ``python3 demos/01_one_bend_axis_parallel.py``. Each cell builds an
instance, draws it and lets the verifier confirm the drawing.
"""
# %% Setup
import random

import numpy as np

from pse import (
    Infeasible,
    PointSet,
    SimpleGraph,
    StyleSpec,
    decide_and_embed_rac1_mapped,
    embed_binary_tree,
    embed_cactus,
    embed_path_or_cycle_mapped,
    verify,
)
from pse import generators as gen
from pse.io import instance_from_doc, load_fixture
from pse.rac1_decide import format_certificate

rng = random.Random(2)
STYLE = StyleSpec.restricted_rac(1)

# %% A binary tree on any permutation grid
# The root takes the point whose x-rank leaves room for the left subtree;
# every edge is an L-shape and the drawing stays inside the n x n box.
tree = gen.random_binary_tree(25, rng)
points = gen.random_points(25, rng)
drawing = embed_binary_tree(tree, points)
report = verify(drawing, STYLE, graph=tree)
print("tree:", "clean" if report.ok else report.kinds(), "| crossings:", report.stats.crossing_count)
print("bounding box:", report.stats.bounding_box)

# %% Paths and cycles with a prescribed vertex-to-point mapping
# Four points where a straight-line planar drawing of the 4-cycle is impossible.
c4 = SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
square = PointSet(((2, 2), (4, 4), (1, 1), (3, 3)))
d = embed_path_or_cycle_mapped(c4, square, (0, 1, 2, 3))
for e in d.edges:
    print(f"  edge {e.u}-{e.v} bends at {e.bends[0]}")
print("4-cycle:", "clean" if verify(d, STYLE, mapping=(0, 1, 2, 3)).ok else "violations")

# %% Cacti: trees of cycles
# The case log records which placement rule handled each cycle.
log = {}
for _ in range(40):
    n = rng.randint(10, 60)
    c = gen.random_cactus(n, rng)
    assert verify(embed_cactus(c, gen.random_points(n, rng), log), STYLE).ok
for name, count in sorted(log.items()):
    print(f"  {name:>22}: {count}")

# %% Deciding a fixed mapping with 2-SAT
# One boolean per edge picks its L-shape; overlapping choices become clauses.
trials, feasible = 400, 0
for _ in range(trials):
    n = rng.randint(4, 40)
    g = gen.random_graph(n, 4, rng, m=rng.randint(n // 2, n))
    try:
        decide_and_embed_rac1_mapped(g, gen.random_points(n, rng), gen.random_mapping(n, rng))
        feasible += 1
    except Infeasible:
        pass
print(f"sparse max-degree-4 graphs with a random mapping: {feasible}/{trials} drawable")

# %% An instance with no drawing, and why
inst = instance_from_doc(load_fixture("unsat_tree6"))
try:
    decide_and_embed_rac1_mapped(inst.graph, inst.points, inst.mapping)
except Infeasible as exc:
    print(format_certificate(inst.graph, exc))

# %% Degree profile of the instances above
deg = np.array(gen.random_graph(200, 4, rng).degrees())
print("degree histogram:", np.bincount(deg).tolist())
