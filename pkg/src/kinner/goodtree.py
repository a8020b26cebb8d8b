"""Ordered spanning trees and good spanning trees of a fixed embedding.

Children of a vertex are ordered clockwise starting right after the
parent edge.  The root has no parent edge; its order starts with the
successor of the root on the clockwise outer walk (see
``EmbeddedGraph.root_start``), i.e. right after the outer-face corner.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from .graph import Edge, EmbeddedGraph, edge_key


class TreeError(ValueError):
    """A proposed tree does not span the graph or uses foreign edges."""


class NoGoodTreeError(LookupError):
    """The embedding (with its root) admits no good spanning tree."""


class SearchBudgetExceeded(RuntimeError):
    pass


def vertex_order(g: EmbeddedGraph, v: int, parent: Optional[int]) -> Tuple[int, ...]:
    """Neighbours of v clockwise, starting after the parent edge (parent excluded).

    For the root (``parent is None``) every neighbour is returned, starting
    with ``g.root_start``.
    """
    if parent is None:
        if g.degree(v) == 0:
            return ()
        if v == g.root:
            return g.rotation_from(v, g.root_start)
        raise ValueError(f"vertex {v} needs a parent")
    return g.rotation_from(v, g.cw_next(v, parent))[:-1]


@dataclass(frozen=True)
class RootedOrderedTree:
    root: int
    parent: Mapping[int, int]
    children: Mapping[int, Tuple[int, ...]]
    subtree_size: Mapping[int, int] = field(compare=False)
    depth: Mapping[int, int] = field(compare=False)

    @property
    def vertices(self) -> List[int]:
        return list(self.children)

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(edge_key(p, c) for c, p in self.parent.items())

    @cached_property
    def preorder(self) -> Tuple[int, ...]:
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return tuple(out)

    @cached_property
    def leaves(self) -> Tuple[int, ...]:
        """Leaves in child-order (left to right) traversal."""
        return tuple(v for v in self.preorder if not self.children[v])

    def is_tree_edge(self, a: int, b: int) -> bool:
        return edge_key(a, b) in self.edges

    def is_ancestor(self, a: int, b: int) -> bool:
        """a is a proper ancestor of b."""
        if self.depth[a] >= self.depth[b]:
            return False
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
        return a == b

    def path_from_root(self, v: int) -> List[int]:
        path = [v]
        while v != self.root:
            v = self.parent[v]
            path.append(v)
        path.reverse()
        return path

    def subtree(self, u: int) -> List[int]:
        out = []
        stack = [u]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return out

    def tree_path(self, a: int, b: int) -> List[int]:
        """Vertices on the tree path from a to b."""
        pa = self.path_from_root(a)
        pb = self.path_from_root(b)
        i = 0
        while i < min(len(pa), len(pb)) and pa[i] == pb[i]:
            i += 1
        return list(reversed(pa[i:])) + [pa[i - 1]] + pb[i:]


def tree_from_parent(g: EmbeddedGraph, parent: Mapping[int, int]) -> RootedOrderedTree:
    root = g.root
    kids: Dict[int, List[int]] = {v: [] for v in g.vertices}
    for c, p in parent.items():
        if not g.has_edge(c, p):
            raise TreeError(f"tree edge {p}-{c} is not an edge of the graph")
        kids[p].append(c)
    children: Dict[int, Tuple[int, ...]] = {}
    for v in g.vertices:
        want = set(kids[v])
        order = vertex_order(g, v, parent.get(v)) if v != root or g.n > 1 else ()
        children[v] = tuple(w for w in order if w in want)
    depth = {root: 0}
    stack = [root]
    while stack:
        v = stack.pop()
        for c in children[v]:
            depth[c] = depth[v] + 1
            stack.append(c)
    if len(depth) != g.n:
        raise TreeError("tree does not span the graph")
    size: Dict[int, int] = {}
    for v in sorted(depth, key=depth.get, reverse=True):
        size[v] = 1 + sum(size[c] for c in children[v])
    return RootedOrderedTree(
        root=root, parent=dict(parent), children=children, subtree_size=size, depth=depth
    )


def tree_from_edges(g: EmbeddedGraph, edges: Iterable[Edge]) -> RootedOrderedTree:
    """Orient a spanning tree given as undirected edges away from g.root."""
    edges = [edge_key(a, b) for a, b in edges]
    if len(set(edges)) != len(edges):
        raise TreeError("duplicate tree edge")
    if len(edges) != g.n - 1:
        raise TreeError(f"a spanning tree needs {g.n - 1} edges, got {len(edges)}")
    adj: Dict[int, List[int]] = {v: [] for v in g.vertices}
    for a, b in edges:
        if a not in adj or b not in adj:
            raise TreeError(f"tree edge {a}-{b} uses an unknown vertex")
        adj[a].append(b)
        adj[b].append(a)
    parent: Dict[int, int] = {}
    seen = {g.root}
    stack = [g.root]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    if len(seen) != g.n:
        raise TreeError("tree does not span the graph")
    return tree_from_parent(g, parent)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GoodTreeVerdict:
    status: str  # "ok" | "violation"
    condition: Optional[str] = None  # C1 | C2a | C2b | C2c
    vertex: Optional[int] = None
    path: Optional[Tuple[int, ...]] = None
    edge: Optional[Edge] = None
    root_convention_used: bool = False

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def format(self) -> str:
        if self.ok:
            text = "GOODTREE ok"
        else:
            text = f"GOODTREE violation {self.condition} v={self.vertex} edge={self.edge[0]}-{self.edge[1]}"
        if self.root_convention_used:
            text += "\n# root ordering taken from the outer-face corner"
        return text


def verify_good_tree(g: EmbeddedGraph, t: RootedOrderedTree) -> GoodTreeVerdict:
    """Check conditions C1 and C2 at every non-root vertex.

    Left/right groups are computed from the rotation system directly, not
    from ``t.children``, so a tree with a wrong child order is still judged
    on the embedding.
    """
    if t.root != g.root:
        raise TreeError(f"tree root {t.root} differs from graph root {g.root}")
    if set(t.depth) != set(g.vertices) or len(t.edges) != g.n - 1:
        raise TreeError("tree does not span the graph")
    for e in t.edges:
        if e not in g.edges:
            raise TreeError(f"tree edge {e[0]}-{e[1]} is not an edge of the graph")

    root_used = False

    def order_at(u: int) -> Tuple[int, ...]:
        # clockwise order at u starting from its parent edge (parent first)
        if u == t.root:
            return vertex_order(g, u, None)
        p = t.parent[u]
        return g.rotation_from(u, p)

    for v in sorted(g.vertices):
        if v == t.root:
            continue
        path = t.path_from_root(v)
        on_path = {u: i for i, u in enumerate(path)}
        p = t.parent[v]
        seq = vertex_order(g, v, p)
        # C1
        for w in seq:
            if not t.is_tree_edge(v, w) and w in on_path:
                return GoodTreeVerdict("violation", "C1", v, tuple(path), (v, w), root_used)
        classes = []
        for w in seq:
            if t.is_tree_edge(v, w):
                classes.append("T")
                continue
            # deepest path vertex that is an ancestor of w
            anc = w
            while anc not in on_path:
                anc = t.parent[anc]
            i = on_path[anc]
            if i == len(path) - 1:
                return GoodTreeVerdict("violation", "C2c", v, tuple(path), (v, w), root_used)
            branch = w
            while t.parent[branch] != anc:
                branch = t.parent[branch]
            order = order_at(anc)
            if anc == t.root:
                root_used = True
            side = "L" if order.index(branch) < order.index(path[i + 1]) else "R"
            classes.append(side)
        tree_pos = [i for i, c in enumerate(classes) if c == "T"]
        if tree_pos and tree_pos[-1] - tree_pos[0] + 1 != len(tree_pos):
            bad = next(i for i in range(tree_pos[0], tree_pos[-1]) if classes[i] != "T")
            return GoodTreeVerdict("violation", "C2a", v, tuple(path), (v, seq[bad]), root_used)
        if tree_pos:
            for i, c in enumerate(classes):
                if (i < tree_pos[0] and c != "L") or (i > tree_pos[-1] and c != "R"):
                    return GoodTreeVerdict("violation", "C2b", v, tuple(path), (v, seq[i]), root_used)
        else:
            for i in range(1, len(classes)):
                if classes[i - 1] == "R" and classes[i] == "L":
                    return GoodTreeVerdict("violation", "C2b", v, tuple(path), (v, seq[i]), root_used)
    return GoodTreeVerdict("ok", root_convention_used=root_used)


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

_FREE, _PENDING, _VISITED = 0, 1, 2


def iter_good_trees(g: EmbeddedGraph, max_steps: Optional[int] = None) -> Iterator[RootedOrderedTree]:
    """Enumerate every good spanning tree of g rooted at g.root.

    The tree is grown in preorder.  When a vertex v is visited its
    neighbours after the parent edge must read: already-visited vertices
    (the X group; none of them an ancestor), then the children, then
    vertices that will be visited after the subtree of v (the Z group).
    The children are therefore a prefix of the unclaimed neighbours that
    follow the visited block, and each choice of prefix length is one
    branch.  Longer prefixes are tried first.  A vertex adjacent to a
    proper ancestor of v is never claimed by v (C1 at that vertex).
    """
    n = g.n
    status = {v: _FREE for v in g.vertices}
    parent: Dict[int, int] = {}
    depth: Dict[int, int] = {}
    pending: List[int] = [g.root]
    status[g.root] = _PENDING
    depth[g.root] = 0
    steps = 0
    visited = 0

    def ancestors(v: int) -> set:
        out = set()
        while v in parent:
            v = parent[v]
            out.add(v)
        return out

    # frame: [v, candidates, j, min_j, applied]
    frames: List[list] = []

    def visit(v: int):
        nonlocal steps
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise SearchBudgetExceeded(f"good-tree search exceeded {max_steps} steps")
        seq = vertex_order(g, v, parent.get(v))
        anc = ancestors(v)
        k = 0
        while k < len(seq) and status[seq[k]] == _VISITED:
            if seq[k] in anc:
                return None
            k += 1
        rest = seq[k:]
        if any(status[x] == _VISITED for x in rest):
            return None
        path = anc | {v}
        cand = []
        for x in rest:
            if status[x] != _FREE:
                break
            if any(y in path and y != v for y in g.rotation[x]):
                break
            cand.append(x)
        min_j = len(cand) if v == g.root else 0
        if v == g.root and len(cand) != len(rest):
            return None
        return [v, cand, len(cand) + 1, min_j, False]

    def apply(f) -> None:
        v, cand, j = f[0], f[1], f[2]
        for c in cand[:j]:
            status[c] = _PENDING
            parent[c] = v
            depth[c] = depth[v] + 1
        pending.extend(reversed(cand[:j]))
        f[4] = True

    def retract(f) -> None:
        v, cand, j = f[0], f[1], f[2]
        for _ in range(j):
            pending.pop()
        for c in cand[:j]:
            status[c] = _FREE
            del parent[c]
            del depth[c]
        f[4] = False

    def next_choice(f) -> bool:
        if f[4]:
            retract(f)
        f[2] -= 1
        if f[2] < f[3]:
            return False
        apply(f)
        return True

    while True:
        descend = False
        if pending:
            v = pending.pop()
            status[v] = _VISITED
            visited += 1
            f = visit(v)
            if f is not None:
                frames.append(f)
                next_choice(f)
                descend = True
            else:
                status[v] = _PENDING
                visited -= 1
                pending.append(v)
        elif visited == n:
            yield tree_from_parent(g, dict(parent))
        if descend:
            continue
        while frames:
            f = frames[-1]
            if next_choice(f):
                break
            frames.pop()
            status[f[0]] = _PENDING
            visited -= 1
            pending.append(f[0])
        else:
            return


def find_good_tree(g: EmbeddedGraph, max_steps: Optional[int] = None) -> RootedOrderedTree:
    """First good spanning tree in search order; raises NoGoodTreeError."""
    for t in iter_good_trees(g, max_steps=max_steps):
        return t
    raise NoGoodTreeError("the embedding admits no good spanning tree rooted at %d" % g.root)


def boundary_path(g: EmbeddedGraph, t: RootedOrderedTree, u: int, side: str) -> List[int]:
    """Leftmost or rightmost downward path from u to a leaf.

    Measured counter-clockwise from the parent edge, the leftmost path takes
    the last tree edge at every vertex, which is the first child in the
    clockwise child order; the rightmost path takes the last child.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    path = [u]
    while t.children[path[-1]]:
        kids = t.children[path[-1]]
        path.append(kids[0] if side == "left" else kids[-1])
    return path
