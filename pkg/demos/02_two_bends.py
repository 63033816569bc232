"""Two bends per edge: brackets around the grid and one-sided book layouts.

Run with ``python3 demos/02_two_bends.py``.
"""
# %% Setup
import random
from collections import Counter

import numpy as np

from pse import StyleSpec, book_embed_maxdeg2_unmapped, bracket_embed, edge_color_4, matching_min_area, verify
from pse import generators as gen
from pse.io import instance_from_doc, load_fixture

rng = random.Random(5)
STYLE = StyleSpec.restricted_rac(2)

# %% Four colours decide where each edge leaves its endpoints
petersen = instance_from_doc(load_fixture("petersen")).graph
colors = edge_color_4(petersen)
print("Petersen colour classes:", dict(Counter(c.name for c in colors)))

# %% Bracket drawings of max-degree-3 graphs
# Every edge leaves both endpoints in its colour's direction and turns on a
# private line outside the grid, so the box grows by at most m per side.
widths = []
for _ in range(30):
    n = rng.randint(10, 120)
    g = gen.random_graph(n, 3, rng)
    rep = verify(bracket_embed(g, gen.random_points(n, rng), gen.random_mapping(n, rng)), STYLE)
    assert rep.ok
    widths.append((rep.stats.width / (n + 2 * g.m + 1), n))
ratio = np.array([w for w, _ in widths])
print(f"width / (n + 2m + 1): mean {ratio.mean():.3f}, max {ratio.max():.3f}")

# %% Perfect matchings on a line: fewest vertical layers
# Consecutive matched points get a straight segment; other pairs are
# intervals, and the layer count equals the deepest stack of overlapping intervals.
for half in (4, 16, 64):
    n = 2 * half
    g = gen.random_matching(n, rng)
    d, layers = matching_min_area(gen.random_collinear_points(n, rng), g, gen.random_mapping(n, rng))
    assert verify(d, STYLE).ok
    print(f"  {half:>3} pairs -> {layers} layers")

# %% Paths and cycles on a line, no mapping given
g = gen.random_maxdeg2(30, rng)
d = book_embed_maxdeg2_unmapped(g, gen.random_collinear_points(30, rng))
bent = sum(1 for e in d.edges if e.bends)
print(f"{len(g.components())} components, {bent} edges leave the axis, verifier:", verify(d, STYLE).ok)
