from itertools import combinations

import pytest

from kinner.generate import generate_k_inner
from kinner.goodtree import (
    NoGoodTreeError,
    SearchBudgetExceeded,
    TreeError,
    boundary_path,
    find_good_tree,
    iter_good_trees,
    tree_from_edges,
    verify_good_tree,
)
from kinner.graph import parse_embedded_graph


def all_good_trees_brute_force(g):
    found = set()
    for edges in combinations(sorted(g.edges), g.n - 1):
        try:
            t = tree_from_edges(g, edges)
        except TreeError:
            continue
        if verify_good_tree(g, t).ok:
            found.add(t.edges)
    return found


def test_instance_a_star_is_good(graph_a):
    t = tree_from_edges(graph_a, [(1, 2), (1, 3)])
    assert verify_good_tree(graph_a, t).ok


def test_instance_a_path_violates_c1(graph_a):
    v = verify_good_tree(graph_a, tree_from_edges(graph_a, [(1, 2), (2, 3)]))
    assert not v.ok
    assert (v.condition, v.vertex, v.edge) == ("C1", 3, (3, 1))
    assert v.format().splitlines()[0] == "GOODTREE violation C1 v=3 edge=3-1"


def test_instance_a_has_exactly_one_good_tree(graph_a):
    # {1-3, 3-2} mirrors the path case and fails C1 at v=2
    assert all_good_trees_brute_force(graph_a) == {frozenset({(1, 2), (1, 3)})}


def test_finder_instance_a(graph_a):
    assert find_good_tree(graph_a).edges == {(1, 2), (1, 3)}


def test_finder_instance_b_star(graph_b):
    t = find_good_tree(graph_b)
    assert t.children[1] == (2, 4, 3)
    v = verify_good_tree(graph_b, t)
    assert v.ok and v.format().startswith("GOODTREE ok")


def test_root_convention_is_flagged(graph_b):
    v = verify_good_tree(graph_b, find_good_tree(graph_b))
    assert v.root_convention_used
    assert "outer-face corner" in v.format()


def test_single_vertex():
    g = parse_embedded_graph("n 1\nv 1:\nouter: 1\nroot: 1\n")
    t = find_good_tree(g)
    assert t.vertices == [1] and not t.edges


def test_tree_errors(graph_b):
    with pytest.raises(TreeError):
        tree_from_edges(graph_b, [(1, 2), (1, 4)])
    with pytest.raises(TreeError):
        tree_from_edges(graph_b, [(1, 2), (2, 4), (1, 4)])


def test_no_good_tree_raises():
    # wheel-like embedding rooted so that every tree leaves a chord to the root path
    for seed in range(200):
        g = generate_k_inner(seed, 8, 3)
        if not all_good_trees_brute_force(g):
            with pytest.raises(NoGoodTreeError):
                find_good_tree(g)
            return
    pytest.skip("no instance without a good tree in the seed range")


def test_budget(graph_b):
    with pytest.raises(SearchBudgetExceeded):
        find_good_tree(generate_k_inner(3, 40, 5), max_steps=2)


@pytest.mark.parametrize("seed", range(120))
def test_enumeration_matches_brute_force(seed):
    n = 4 + seed % 5
    g = generate_k_inner(seed, n, seed % max(1, n - 3))
    assert {t.edges for t in iter_good_trees(g)} == all_good_trees_brute_force(g)


@pytest.mark.parametrize("seed", range(30))
def test_chords_never_join_ancestor_and_descendant(seed):
    g = generate_k_inner(seed, 20, seed % 5)
    try:
        t = find_good_tree(g)
    except NoGoodTreeError:
        return
    assert verify_good_tree(g, t).ok
    for a, b in g.edges - t.edges:
        assert not t.is_ancestor(a, b) and not t.is_ancestor(b, a)


def test_boundary_paths_star(graph_b):
    t = find_good_tree(graph_b)
    assert boundary_path(graph_b, t, 2, "left") == [2] == boundary_path(graph_b, t, 2, "right")
    # first clockwise child on the left path, last on the right path
    assert boundary_path(graph_b, t, 1, "left") == [1, 2]
    assert boundary_path(graph_b, t, 1, "right") == [1, 3]


def test_boundary_paths_chain():
    g = parse_embedded_graph("n 3\nv 1: 2\nv 2: 3 1\nv 3: 2\nouter: 1 2 3 2\nroot: 1\n")
    t = find_good_tree(g)
    assert boundary_path(g, t, 1, "left") == [1, 2, 3] == boundary_path(g, t, 1, "right")


def test_boundary_side_validated(graph_b):
    with pytest.raises(ValueError):
        boundary_path(graph_b, find_good_tree(graph_b), 1, "up")
