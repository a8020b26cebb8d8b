"""Covered leaves, leader edges and their insertion order.

Everything here is combinatorial: the interior of the cycle formed by a
non-tree edge and its tree path is found in the dual graph, by flooding
faces from the outer face without crossing a cycle edge.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .goodtree import RootedOrderedTree, boundary_path
from .graph import Edge, EmbeddedGraph, edge_key


class LeaderOrderError(RuntimeError):
    """The leader dependency relation is cyclic or otherwise inconsistent."""


@dataclass(frozen=True)
class LeaderRecord:
    edge: Edge
    covered: FrozenSet[int]
    cycle: Tuple[int, ...]
    inner_side: str  # "L" or "R": side of edge[0] -> edge[1] holding the interior
    u: int
    v: int
    right_path: Tuple[int, ...]
    left_path: Tuple[int, ...]
    interior: FrozenSet[int]  # face ids inside the cycle

    @property
    def boundary_set(self) -> FrozenSet[int]:
        return frozenset(self.right_path) | frozenset(self.left_path)

    def format(self) -> str:
        ids = ",".join(str(x) for x in sorted(self.covered))
        return f"leader {self.edge[0]}-{self.edge[1]} C={{{ids}}} side={self.inner_side}"


def non_tree_edges(g: EmbeddedGraph, t: RootedOrderedTree) -> List[Edge]:
    return sorted(e for e in g.edges if e not in t.edges)


def cycle_interior(g: EmbeddedGraph, t: RootedOrderedTree, e: Edge) -> Tuple[Tuple[int, ...], FrozenSet[int]]:
    """Tree path of e (as the cycle's vertex sequence) and the faces it encloses."""
    a, b = e
    if t.is_tree_edge(a, b):
        raise ValueError(f"{a}-{b} is a tree edge")
    if not g.has_edge(a, b):
        raise ValueError(f"{a}-{b} is not an edge of the graph")
    fs = g.faces
    path = t.tree_path(a, b)
    blocked = {edge_key(path[i], path[i + 1]) for i in range(len(path) - 1)}
    blocked.add(edge_key(a, b))
    seen = {fs.outer_face_id}
    queue = deque(seen)
    while queue:
        f = queue.popleft()
        for x, y in fs.faces[f]:
            if edge_key(x, y) in blocked:
                continue
            h = fs.face_of[(y, x)]
            if h not in seen:
                seen.add(h)
                queue.append(h)
    inside = frozenset(range(len(fs))) - seen
    return tuple(path), inside


def _leaves_inside(g: EmbeddedGraph, t: RootedOrderedTree, cycle: Sequence[int], inside: FrozenSet[int]) -> FrozenSet[int]:
    on_cycle = set(cycle)
    fs = g.faces
    out = set()
    for leaf in t.leaves:
        if leaf in on_cycle or g.degree(leaf) == 0:
            continue
        w = g.rotation[leaf][0]
        if fs.face_of[(leaf, w)] in inside:
            out.add(leaf)
    return frozenset(out)


def covered_leaves(g: EmbeddedGraph, t: RootedOrderedTree, e: Edge) -> FrozenSet[int]:
    e = edge_key(*e)
    cycle, inside = cycle_interior(g, t, e)
    return _leaves_inside(g, t, cycle, inside)


def leader_record(g: EmbeddedGraph, t: RootedOrderedTree, e: Edge) -> LeaderRecord:
    """Full record for any non-tree edge (leader or not)."""
    a, b = edge_key(*e)
    cycle, inside = cycle_interior(g, t, (a, b))
    covered = _leaves_inside(g, t, cycle, inside)
    fs = g.faces
    side = "L" if fs.face_of[(a, b)] in inside else "R"
    # orient u -> v with the interior on the right
    u, v = (b, a) if side == "L" else (a, b)
    return LeaderRecord(
        edge=(a, b),
        covered=covered,
        cycle=cycle,
        inner_side=side,
        u=u,
        v=v,
        right_path=tuple(boundary_path(g, t, u, "right")),
        left_path=tuple(boundary_path(g, t, v, "left")),
        interior=inside,
    )


def _lies_inside(g: EmbeddedGraph, e: Edge, rec: LeaderRecord) -> bool:
    fo = g.faces.face_of
    a, b = e
    return fo[(a, b)] in rec.interior and fo[(b, a)] in rec.interior


def classify_edges(g: EmbeddedGraph, t: RootedOrderedTree) -> Tuple[List[LeaderRecord], List[LeaderRecord]]:
    """Split non-tree edges into (leaders, ordinary), both sorted by edge."""
    groups: Dict[FrozenSet[int], List[LeaderRecord]] = {}
    ordinary: List[LeaderRecord] = []
    for e in non_tree_edges(g, t):
        rec = leader_record(g, t, e)
        if rec.covered:
            groups.setdefault(rec.covered, []).append(rec)
        else:
            ordinary.append(rec)
    leaders: List[LeaderRecord] = []
    for cset, recs in groups.items():
        innermost = [r for r in recs if not any(_lies_inside(g, o.edge, r) for o in recs if o is not r)]
        if len(innermost) != 1:
            names = " ".join(f"{r.edge[0]}-{r.edge[1]}" for r in innermost)
            raise LeaderOrderError(f"expected one innermost edge covering {sorted(cset)}, found [{names}]")
        leaders.append(innermost[0])
        ordinary.extend(r for r in recs if r is not innermost[0])
    leaders.sort(key=lambda r: r.edge)
    ordinary.sort(key=lambda r: r.edge)
    return leaders, ordinary


def leader_edges(g: EmbeddedGraph, t: RootedOrderedTree) -> List[LeaderRecord]:
    return classify_edges(g, t)[0]


def _must_precede(a: LeaderRecord, b: LeaderRecord, t: RootedOrderedTree) -> bool:
    if a.covered < b.covered:
        return True
    return any(t.is_ancestor(x, y) for x in a.edge for y in b.edge)


def dependency_order(leaders: Sequence[LeaderRecord], t: RootedOrderedTree) -> List[LeaderRecord]:
    """Topological order of the leader dependency DAG; ties keep input order."""
    m = len(leaders)
    succ: List[List[int]] = [[] for _ in range(m)]
    indeg = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and _must_precede(leaders[i], leaders[j], t):
                succ[i].append(j)
                indeg[j] += 1
    ready = [i for i in range(m) if indeg[i] == 0]
    heapq.heapify(ready)
    order: List[int] = []
    while ready:
        i = heapq.heappop(ready)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(ready, j)
    if len(order) != m:
        stuck = sorted(f"{leaders[i].edge[0]}-{leaders[i].edge[1]}" for i in range(m) if i not in order)
        raise LeaderOrderError("leader dependencies contain a cycle among " + " ".join(stuck))
    return [leaders[i] for i in order]


def format_leader_report(ordered: Sequence[LeaderRecord]) -> str:
    lines = [r.format() for r in ordered]
    lines.append("order: " + " ".join(f"{r.edge[0]}-{r.edge[1]}" for r in ordered))
    return "\n".join(lines) + "\n"
