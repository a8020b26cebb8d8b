"""Lay out a random ordered tree and check what the layout guarantees.

Run:  python3 demos/tree_layout.py [seed] [n]
"""

import sys
from pathlib import Path

from kinner.layout import layout_first_quadrant, layout_tree
from kinner.render import render_svg
from kinner.trees import random_tree, tree_graph
from kinner.verify import check_monotone, check_near_convex, check_slope_disjoint, reflex_pairs

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 3
n = int(sys.argv[2]) if len(sys.argv) > 2 else 25
t = random_tree(seed, n)
g = tree_graph(t)

# First the quadrant drawing: each vertex steps from its parent along a
# primitive vector built from the leaf interval it spans.
q, wq = layout_first_quadrant(t)
print(f"tree with {n} vertices, {sum(1 for v in t.vertices if not t.children[v])} leaves")
print(f"first-quadrant drawing: {q.width} x {q.height}")

# The shear (x, y) -> (x, x + y) moves every edge above the diagonal.
d, w, refs = layout_tree(t)
print(f"second-octant drawing:  {d.width} x {d.height}, in octant: {d.in_second_octant()}")

for verdict in (check_slope_disjoint(t, d, w), check_near_convex(t, d), check_monotone(g, t, d)):
    print(verdict.format())
print("reflex pairs (all at the root):", reflex_pairs(t, d))

out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "tree_layout.svg").write_text(render_svg(g, t, d))
print(f"wrote {out / 'tree_layout.svg'}")
