"""Trading bends for angle: diagonal middle segments and refined grids.

Run with ``python3 demos/03_angles_off_the_grid.py [outdir]``; SVG renderings
are written to ``outdir`` (default: a temporary directory).
"""
# %% Setup
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

import numpy as np

from pse import AngleSpec, StyleSpec, alpha_ac1_embed, alpha_ac2_embed, rac3_embed, verify
from pse.io import instance_from_doc, load_fixture
from pse.svg import render_svg
from pse.unrestricted import rac3_anchors

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="pse-demo-"))
out.mkdir(parents=True, exist_ok=True)
k4 = instance_from_doc(load_fixture("k4"))
g, s = k4.graph, k4.points

# %% Three bends, right angles everywhere
# End segments are vertical; the two middle pieces have slopes +1 and -1,
# so any two middle pieces that cross meet at exactly 90 degrees.
print("anchor rows for K4:", rac3_anchors(4, [3, 3, 3, 3]))
d3 = rac3_embed(g, s)
rep = verify(d3, StyleSpec.rac(3))
print("three bends:", rep.ok, "| crossings", rep.stats.crossing_count, "| right:", rep.stats.min_angle_is_right)
(out / "k4_three_bends.svg").write_text(render_svg(d3))

# %% Two bends, angle at least 90 - eps
# Horizontal middle rows sit far enough below the grid that the vertical
# pieces crossing them are nearly perpendicular.
for deg in (45, 20, 10):
    eps = AngleSpec.from_degrees(deg)
    d2 = alpha_ac2_embed(g, s, eps)
    rep = verify(d2, StyleSpec.aac(2, eps.complement()))
    print(f"  eps={deg:>2}: ok={rep.ok} min angle {rep.stats.min_angle_degrees or 90:.2f} height {rep.stats.height}")
(out / "k4_two_bends.svg").write_text(render_svg(d2))

# %% One bend on a refined grid
# With cot eps = 7 the grid is refined eight times and every L-shape is
# nudged by one refined unit, tilting both of its pieces slightly.
eps = AngleSpec.from_cot(7)
d1 = alpha_ac1_embed(g, s, eps)
rep = verify(d1, StyleSpec.aac(1, eps.complement()))
slopes = []
for i in range(len(d1.edges)):
    (ax, ay), (bx, by), (cx, cy) = d1.polyline(i)
    slopes += [Fraction(by - ay, bx - ax), Fraction(cy - by, cx - bx)]
flat = np.array([float(x) for x in slopes if abs(x) < 1])
steep = np.array([float(x) for x in slopes if abs(x) > 1])
print(f"lambda={d1.lam} ok={rep.ok} min angle {rep.stats.min_angle_degrees:.3f}")
print(f"shallow pieces |slope| <= {np.abs(flat).max():.4f}, steep pieces |slope| >= {np.abs(steep).min():.1f}")
(out / "k4_one_bend.svg").write_text(render_svg(d1))
print("SVGs written to", out)
