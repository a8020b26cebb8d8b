"""Acceptance suite: one test per criterion, checked literally.

Each test gathers every failing sub-check and reports them together, so a
red line names all of its causes instead of only the first.
"""

import random
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from conftest import load
from kinner.assembler import draw_monotone
from kinner.generate import generate_k_inner
from kinner.goodtree import NoGoodTreeError, SearchBudgetExceeded, find_good_tree
from kinner.graph import inner_vertices
from kinner.layout import GridDrawing, layout_first_quadrant, layout_tree
from kinner.leaders import covered_leaves, leader_edges, non_tree_edges
from kinner.trees import (
    balanced_binary_tree,
    broom_tree,
    caterpillar_tree,
    path_tree,
    random_tree,
    star_tree,
    tree_graph,
)
from kinner.verify import (
    check_monotone,
    check_near_convex,
    check_planar_drawing,
    check_planar_segments,
    check_slope_disjoint,
    rational_segment_conflict,
)

ARTIFACTS = Path(__file__).parent / "artifacts"


def _sizes():
    return [2 + (i * 131) % 511 for i in range(200)]


@lru_cache(maxsize=None)
def tree_corpus():
    out = [(f"random-{i}-n{n}", random_tree(i, n)) for i, n in enumerate(_sizes())]
    for n in (1, 2, 3, 10, 64, 200, 512):
        out.append((f"path-n{n}", path_tree(n)))
        out.append((f"star-n{n}", star_tree(n)))
    for h, b in ((1, 5), (5, 5), (20, 20), (100, 50)):
        out.append((f"broom-{h}x{b}", broom_tree(h, b)))
    for s, l, last in ((5, 2, False), (10, 3, True), (30, 4, False), (60, 6, True)):
        out.append((f"caterpillar-{s}x{l}{'-tail' if last else ''}", caterpillar_tree(s, l, last)))
    for n in (7, 15, 31, 63, 127, 255, 511):
        out.append((f"binary-n{n}", balanced_binary_tree(n)))
    return tuple(out)


@lru_cache(maxsize=None)
def tree_layouts():
    rows = []
    for name, t in tree_corpus():
        q, wq = layout_first_quadrant(t)
        d, w, _ = layout_tree(t)
        rows.append((name, t, q, wq, d, w))
    return tuple(rows)


@lru_cache(maxsize=None)
def pipeline_instances():
    """100 generated k-inner instances (n <= 64, k <= 5) that admit a good tree."""
    out = []
    seed = 0
    while len(out) < 100:
        n = 8 + (seed * 7) % 57
        k = seed % 6
        g = generate_k_inner(seed, n, k)
        seed += 1
        try:
            t = find_good_tree(g, max_steps=200_000)
        except (NoGoodTreeError, SearchBudgetExceeded):
            continue
        out.append((f"gen-{seed - 1}-n{n}-k{k}", g, t))
    return tuple(out)


def every_instance():
    named = [("instance-a", load("instance_a.txt")), ("instance-b", load("instance_b.txt")),
             ("shared-endpoint", load("shared_endpoint.txt"))]
    rows = [(name, g, find_good_tree(g)) for name, g in named]
    return rows + list(pipeline_instances())


def _report(failures, limit=12):
    shown = failures[:limit]
    more = f"\n  ... {len(failures) - limit} more" if len(failures) > limit else ""
    return "\n  " + "\n  ".join(shown) + more


def test_criterion_1_tree_layout_properties():
    failures = []
    for name, t, _, _, d, w in tree_layouts():
        n = len(t.vertices)
        if not check_slope_disjoint(t, d, w).ok:
            failures.append(f"{name}: slope-disjoint")
        nc = check_near_convex(t, d, root_exceptions=0)
        if not nc.ok:
            failures.append(f"{name}: near-convex with zero exceptions ({nc.info})")
        if not d.in_second_octant():
            failures.append(f"{name}: outside the second octant")
        if n <= 128 and not check_monotone(tree_graph(t), t, d).ok:
            failures.append(f"{name}: monotone")
    assert not failures, f"{len(failures)} failing checks:" + _report(failures)


def test_criterion_2_tree_grid_bounds():
    failures, gaps = [], []
    for name, t, q, _, d, _ in tree_layouts():
        n = len(t.vertices)
        if name.startswith(("path", "star")) and max(q.width, q.height) > max(0, n - 1):
            failures.append(f"{name}: side {max(q.width, q.height)} > n-1 = {n - 1}")
        if q.width > n or q.height > n:
            gaps.append(f"{name} n={n} quadrant={q.width}x{q.height} octant={d.width}x{d.height}")
        envelope_ok = min(q.width, q.height) <= n and max(q.width, q.height) <= n * n / 4
        if n >= 2 and not envelope_ok:
            failures.append(f"{name}: {q.width}x{q.height} outside the n x n^2/4 envelope (n={n})")
    ARTIFACTS.mkdir(exist_ok=True)
    (ARTIFACTS / "known_gaps_tree_nxn.txt").write_text(
        "# corpus trees whose first-quadrant drawing exceeds n x n\n" + "".join(g + "\n" for g in gaps)
    )
    failures += [f"n x n gap: {g}" for g in gaps]
    assert not failures, f"{len(failures)} failing checks (gaps listed in artifacts/known_gaps_tree_nxn.txt):" + _report(failures)


def test_criterion_3_pipeline_bounds():
    failures = []
    for name, g, t in pipeline_instances():
        r = draw_monotone(g, t)
        side = max(r.drawing.width, r.drawing.height)
        if side > r.ledger_bound:
            failures.append(f"{name}: strict side {side} > {r.ledger_bound}")
        p = draw_monotone(g, t, ceiling_lambda=True)
        pside = max(p.drawing.width, p.drawing.height)
        if p.tree_side <= 2 * g.n and pside > p.claimed_bound:
            failures.append(f"{name}: ceiling side {pside} > {p.claimed_bound}")
    assert not failures, _report(failures)


def test_criterion_4_leader_and_cover_counts():
    failures = []
    for name, g, t in every_instance():
        k = len(inner_vertices(g))
        leaders = leader_edges(g, t)
        if len(leaders) > k:
            failures.append(f"{name}: {len(leaders)} leaders > k={k}")
        for e in non_tree_edges(g, t):
            c = covered_leaves(g, t, e)
            if len(c) > k:
                failures.append(f"{name}: |C({e[0]}-{e[1]})| = {len(c)} > k={k}")
    assert not failures, _report(failures)


def test_criterion_5_final_drawing_planar_and_monotone():
    failures = []
    for name, g, t in every_instance():
        r = draw_monotone(g, t)
        if not check_planar_drawing(g, r.drawing).ok:
            failures.append(f"{name}: planar")
        if not check_monotone(g, r.tree, r.drawing).ok:
            failures.append(f"{name}: monotone")
    assert not failures, _report(failures)


def test_criterion_6_elongation_order():
    failures = []
    for name, g, t in every_instance():
        r = draw_monotone(g, t)
        failures += [f"{name}: {v}" for v in r.order_violations]
    runs = len({f.split(":")[0] for f in failures})
    assert not failures, f"{len(failures)} violations in {runs} runs:" + _report(failures)


def test_criterion_7_outerplanar():
    failures, gaps = [], []
    for seed in range(50):
        n = 3 + (seed * 11) % 62
        g = generate_k_inner(seed, n, 0)
        name = f"outerplanar-{seed}-n{n}"
        t = find_good_tree(g)
        r = draw_monotone(g, t)
        q, _ = layout_first_quadrant(t)
        if r.leaders:
            failures.append(f"{name}: {len(r.leaders)} leaders")
        if r.drawing.coords != q.coords:
            failures.append(f"{name}: drawing differs from the first-quadrant tree drawing")
        if r.drawing.width > n or r.drawing.height > n:
            gaps.append(f"{name} grid={r.drawing.width}x{r.drawing.height}")
        if not check_planar_drawing(g, r.drawing).ok:
            failures.append(f"{name}: planar")
        if not check_monotone(g, r.tree, r.drawing).ok:
            failures.append(f"{name}: monotone")
    ARTIFACTS.mkdir(exist_ok=True)
    (ARTIFACTS / "known_gaps_outerplanar_nxn.txt").write_text(
        "# outerplanar instances whose drawing exceeds n x n\n" + "".join(x + "\n" for x in gaps)
    )
    failures += [f"n x n gap: {x}" for x in gaps]
    assert not failures, f"{len(failures)} failing checks:" + _report(failures)


def test_criterion_8_instance_b_snapshot():
    g = load("instance_b.txt")
    r = draw_monotone(g)
    assert dict(r.drawing.coords) == {1: (0, 0), 2: (0, 4), 4: (1, 3), 3: (4, 6)}
    assert (r.drawing.width, r.drawing.height) == (4, 6)
    assert max(r.drawing.width, r.drawing.height) <= 2 * (r.k + 1) * g.n == 16


def _random_family(rng):
    size = rng.randint(2, 9)
    pts = set()
    while len(pts) < size:
        pts.add((rng.randint(0, 6), rng.randint(0, 6)))
    d = GridDrawing(dict(enumerate(sorted(pts), start=1)))
    pairs = [(a, b) for a in d.coords for b in d.coords if a < b]
    return d, rng.sample(pairs, rng.randint(1, min(len(pairs), 8)))


def _rational_point_inside(p, s):
    (ax, ay), (bx, by) = s
    rx, ry = bx - ax, by - ay
    if (p[0] - ax) * ry - (p[1] - ay) * rx != 0:
        return False
    t = Fraction((p[0] - ax) * rx + (p[1] - ay) * ry, rx * rx + ry * ry)
    return 0 < t < 1


def _oracle_planar(d, edges):
    segs = [(d[a], d[b]) for a, b in edges]
    if any(rational_segment_conflict(segs[x], segs[y]) for x in range(len(segs)) for y in range(x)):
        return False
    # a vertex in the interior of an edge it does not belong to
    return not any(
        _rational_point_inside(p, (d[a], d[b])) for a, b in edges for v, p in d.coords.items() if v not in (a, b)
    )


def test_criterion_9_verifier_cross_validation():
    failures = []
    rng = random.Random(2024)
    for i in range(1000):
        d, edges = _random_family(rng)
        expected = _oracle_planar(d, edges)
        if check_planar_segments(d, edges).ok != expected:
            failures.append(f"family {i}: oracle says planar={expected}")
    for name, t, q, wq, d, w in tree_layouts():
        g = tree_graph(t)
        for label, drawing, witness in (("quadrant", q, wq), ("octant", d, w)):
            if check_slope_disjoint(t, drawing, witness).ok and not check_monotone(g, t, drawing).ok:
                failures.append(f"{name} {label}: witness passes but monotone fails")
    assert not failures, _report(failures)
