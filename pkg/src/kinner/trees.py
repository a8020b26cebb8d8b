"""Ordered trees without a host graph, and a few standard families."""

from __future__ import annotations

import random
from typing import Dict, List, Mapping, Sequence

from .goodtree import RootedOrderedTree
from .graph import EmbeddedGraph, _trace_cycles


def ordered_tree(root: int, children: Mapping[int, Sequence[int]]) -> RootedOrderedTree:
    """Build a tree from clockwise child lists (missing entries mean leaves)."""
    kids: Dict[int, tuple] = {}
    parent: Dict[int, int] = {}
    depth = {root: 0}
    order = [root]
    for v in order:
        kids[v] = tuple(children.get(v, ()))
        for c in kids[v]:
            if c in depth:
                raise ValueError(f"vertex {c} reached twice")
            parent[c] = v
            depth[c] = depth[v] + 1
            order.append(c)
    size: Dict[int, int] = {}
    for v in reversed(order):
        size[v] = 1 + sum(size[c] for c in kids[v])
    return RootedOrderedTree(root=root, parent=parent, children=kids, subtree_size=size, depth=depth)


def tree_graph(t: RootedOrderedTree) -> EmbeddedGraph:
    """The tree as a plane graph whose rotation matches the child order."""
    rot = {}
    for v in t.vertices:
        kids = t.children[v]
        rot[v] = kids if v == t.root else (t.parent[v],) + kids
    if len(rot) == 1:
        return EmbeddedGraph(n=1, rotation=rot, outer_walk=(t.root,), root=t.root)
    cycles, _ = _trace_cycles(rot)
    (face,) = cycles
    walk = [d[0] for d in face]
    i = face.index((t.root, t.children[t.root][0]))
    walk = walk[i:] + walk[:i]
    return EmbeddedGraph(n=len(rot), rotation=rot, outer_walk=tuple(walk), root=t.root)


def _from_parent_list(parents: Sequence[int]) -> RootedOrderedTree:
    # parents[i] is the parent of vertex i + 2; vertex 1 is the root
    children: Dict[int, List[int]] = {}
    for i, p in enumerate(parents):
        children.setdefault(p, []).append(i + 2)
    return ordered_tree(1, children)


def random_tree(seed: int, n: int) -> RootedOrderedTree:
    """Random recursive tree with randomly shuffled child orders."""
    rng = random.Random(seed)
    children: Dict[int, List[int]] = {}
    for v in range(2, n + 1):
        children.setdefault(rng.randint(1, v - 1), []).append(v)
    for kids in children.values():
        rng.shuffle(kids)
    return ordered_tree(1, children)


def path_tree(n: int) -> RootedOrderedTree:
    return _from_parent_list(list(range(1, n)))


def star_tree(n: int) -> RootedOrderedTree:
    return _from_parent_list([1] * (n - 1))


def broom_tree(handle: int, bristles: int) -> RootedOrderedTree:
    """A path of ``handle`` vertices whose last vertex carries ``bristles`` leaves."""
    parents = list(range(1, handle)) + [handle] * bristles
    return _from_parent_list(parents)


def caterpillar_tree(spine: int, legs: int, spine_last: bool = False) -> RootedOrderedTree:
    """Spine of ``spine`` vertices, each with ``legs`` leaves.

    The spine continues through the first child of each spine vertex, or
    through the last child when ``spine_last`` is set.
    """
    children: Dict[int, List[int]] = {}
    nxt = spine + 1
    for s in range(1, spine + 1):
        leaves = list(range(nxt, nxt + legs))
        nxt += legs
        if s < spine:
            children[s] = (leaves + [s + 1]) if spine_last else ([s + 1] + leaves)
        else:
            children[s] = leaves
    return ordered_tree(1, children)


def balanced_binary_tree(n: int) -> RootedOrderedTree:
    return _from_parent_list([v // 2 for v in range(2, n + 1)])
