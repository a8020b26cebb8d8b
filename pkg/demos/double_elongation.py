"""Two leaders sharing an endpoint can stretch the same tree edge twice.

Run:  python3 demos/double_elongation.py
"""

from kinner import draw_monotone, parse_embedded_graph
from kinner.leaders import dependency_order, leader_edges
from kinner.verify import check_monotone, check_planar_drawing

G = """\
n 6
v 1: 2 5 4
v 2: 3 6 5 1
v 3: 4 5 6 2
v 4: 1 3
v 5: 2 6 3 1
v 6: 3 5 2
outer: 1 2 3 4
root: 1
"""

g = parse_embedded_graph(G)
r = draw_monotone(g)
print("tree edges:", sorted(r.tree.edges))
for rec in dependency_order(leader_edges(g, r.tree), r.tree):
    print(rec.format())
print(r.report(), end="")

# Vertex 3 is an endpoint of both leaders, so its parent edge 2-3 is
# elongated once per leader. The drawing is still valid.
print(check_planar_drawing(g, r.drawing).format())
print(check_monotone(g, r.tree, r.drawing).format())

try:
    draw_monotone(g, strict_order=True)
except Exception as exc:
    print(f"strict_order=True refuses: {exc}")
