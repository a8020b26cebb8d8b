"""Which chords become leaders, and in what order they are inserted.

The graph is a 15-vertex plane graph with five inner leaves (v1..v5) and
seven chords. Chords that cover the same leaves form a group; the innermost
chord of each group is its leader.

Run:  python3 demos/leader_selection.py
"""

from pathlib import Path

from kinner import (
    classify_edges,
    dependency_order,
    draw_monotone,
    embedding_from_drawing,
    render_svg,
    run_checks,
    tree_from_edges,
)

POS = {
    "r": (0, 0), "a": (-4, 2), "a1": (-6, 5), "a2": (-7, 8), "v1": (-2, 2), "v2": (-1, 3),
    "b": (1, 4), "b1": (1, 8), "b2": (1, 11), "b3": (1, 14), "v3": (3, 7), "v4": (4, 6),
    "c": (9, 6), "v5": (10, 9), "c1": (13, 8),
}
TREE = [
    ("r", "a"), ("a", "a1"), ("a1", "a2"), ("r", "v1"), ("r", "v2"), ("r", "b"), ("b", "b1"),
    ("b1", "b2"), ("b2", "b3"), ("b", "v3"), ("b", "v4"), ("r", "c"), ("c", "v5"), ("c", "c1"),
]
CHORDS = [("a", "v2"), ("a1", "v2"), ("a2", "v2"), ("a2", "b"), ("b1", "c"), ("b2", "c"), ("b3", "c1")]

ids = {name: i for i, name in enumerate(POS, start=1)}
names = {i: name for name, i in ids.items()}


def label(e):
    return f"{names[e[0]]}-{names[e[1]]}"


# The embedding is read off a hand drawing; the pipeline then ignores it.
g = embedding_from_drawing(
    [(ids[a], ids[b]) for a, b in TREE + CHORDS], {ids[k]: p for k, p in POS.items()}, ids["r"]
)
t = tree_from_edges(g, [(ids[a], ids[b]) for a, b in TREE])

leaders, ordinary = classify_edges(g, t)
for rec in sorted(leaders + ordinary, key=lambda r: sorted(r.covered)):
    kind = "leader  " if rec in leaders else "ordinary"
    print(f"{kind} {label(rec.edge):7} covers {sorted(names[x] for x in rec.covered)}")

print("insertion order:", " ".join(label(r.edge) for r in dependency_order(leaders, t)))

r = draw_monotone(g, t)
for ins in r.insertions:
    print(f"  {label(ins.record.edge):7} lambda={ins.lambda_u},{ins.lambda_v}")
print(f"final grid {r.drawing.width} x {r.drawing.height}, ledger bound {r.ledger_bound}")
for verdict in run_checks(g, t, r.drawing):
    print(verdict.format())

out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "leader_selection.svg").write_text(render_svg(g, t, r.drawing, leaders=r.leaders))
print(f"wrote {out / 'leader_selection.svg'}")
