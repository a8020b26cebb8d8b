"""Step through the pipeline on K4 with one vertex inside the outer triangle.

Run:  python3 demos/k4_walkthrough.py
"""

from kinner import (
    draw_monotone,
    find_good_tree,
    initial_state,
    insert_leader,
    insert_ordinary,
    leader_edges,
    parse_embedded_graph,
    run_checks,
)
from kinner.verify import check_planar_drawing

K4 = """\
n 4
v 1: 2 4 3
v 2: 3 4 1
v 3: 1 4 2
v 4: 1 2 3
outer: 1 2 3
root: 1
"""

g = parse_embedded_graph(K4)
t = find_good_tree(g)
print("good spanning tree, children of the root:", t.children[t.root])

state = initial_state(g, t)
print("tree drawing:", dict(state.drawing.coords))

# Chord 2-3 encloses leaf 4, so it is a leader. Both endpoints get pushed
# along their parent edges until they sit strictly above vertex 4.
(rec,) = leader_edges(g, t)
print(rec.format())
state = insert_leader(state, rec)
print(state.inserted[0].format())
print("after the leader:", dict(state.drawing.coords))

state = insert_ordinary(state)
for verdict in run_checks(g, t, state.drawing):
    print(verdict.format())

# The ceiling factor stops exactly at the leaf height. Here that lines up
# 2, 4 and 3 on y = 3, and the leader passes through vertex 4.
ceil = draw_monotone(g, ceiling_lambda=True)
print("ceiling variant:", dict(ceil.drawing.coords))
print(check_planar_drawing(g, ceil.drawing).format())
