"""Full drawing pipeline: tree layout, leader insertion, ordinary edges."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import FrozenSet, List, Optional, Tuple

from .geometry import add, scale
from .goodtree import RootedOrderedTree, find_good_tree, tree_from_edges
from .graph import Edge, EmbeddedGraph, inner_vertices
from .layout import GridDrawing, RangeWitness, RefVectorTable, layout_first_quadrant, layout_tree, reference_vectors
from .leaders import LeaderRecord, classify_edges, dependency_order


class ElongationOrderError(RuntimeError):
    """A tree edge would be elongated twice, or after an edge below it."""


@dataclass(frozen=True)
class Insertion:
    record: LeaderRecord
    w: int
    lambda_u: int
    lambda_v: int

    def format(self) -> str:
        a, b = self.record.edge
        return f"leader {a}-{b} w={self.w} lambda_u={self.lambda_u} lambda_v={self.lambda_v}"


@dataclass(frozen=True)
class PipelineState:
    graph: EmbeddedGraph
    tree: RootedOrderedTree
    drawing: GridDrawing
    ref_vectors: RefVectorTable
    elongated: FrozenSet[int] = frozenset()  # child endpoints of elongated tree edges
    inserted: Tuple[Insertion, ...] = ()
    drawn_edges: FrozenSet[Edge] = frozenset()
    stage: str = "tree"
    strict_order: bool = False
    order_violations: Tuple[str, ...] = field(default=(), compare=False)


def initial_state(g: EmbeddedGraph, t: RootedOrderedTree, strict_order: bool = False) -> PipelineState:
    d, _, refs = layout_tree(t)
    return PipelineState(g, t, d, refs, drawn_edges=frozenset(t.edges), strict_order=strict_order)


def elongate(state: PipelineState, u: int, lam: int) -> PipelineState:
    """Translate T_u by lam copies of u's reference vector."""
    t = state.tree
    if u == t.root:
        raise ValueError("the root has no parent edge to elongate")
    if lam < 0:
        raise ValueError(f"elongation factor must be non-negative, got {lam}")
    if lam == 0:
        return state
    problems = []
    if u in state.elongated:
        problems.append(f"edge {t.parent[u]}-{u} elongated twice")
    below = sorted(x for x in t.subtree(u) if x != u and x in state.elongated)
    if below:
        problems.append(f"edge {t.parent[u]}-{u} elongated after edges inside its subtree (at {below})")
    if problems and state.strict_order:
        raise ElongationOrderError("; ".join(problems))
    shift = scale(state.ref_vectors[u], lam)
    coords = dict(state.drawing.coords)
    for x in t.subtree(u):
        coords[x] = add(coords[x], shift)
    return replace(
        state,
        drawing=state.drawing.with_coords(coords),
        elongated=state.elongated | {u},
        order_violations=state.order_violations + tuple(problems),
    )


def elongation_factor(cur_y: int, ref_y: int, w_y: int, ceiling_lambda: bool = False) -> int:
    """Smallest factor putting the vertex above height w_y.

    Strict mode lands strictly above; the ceiling variant,
    which lands exactly on w_y when the gap is a multiple of ref_y.
    """
    if ref_y <= 0:
        raise ValueError("reference vector must point upward")
    gap = w_y - cur_y
    if ceiling_lambda:
        return max(0, -(-gap // ref_y))
    return gap // ref_y + 1 if gap >= 0 else 0


def insert_leader(state: PipelineState, rec: LeaderRecord, ceiling_lambda: bool = False) -> PipelineState:
    d = state.drawing
    w = min(rec.covered, key=lambda x: (-d[x][1], x))
    wy = d[w][1]
    lams = []
    for x in (rec.u, rec.v):
        if x == state.tree.root:
            if d[x][1] <= wy:
                raise ElongationOrderError(f"root endpoint {x} lies below covered leaf {w}")
            lams.append(0)
            continue
        lam = elongation_factor(state.drawing[x][1], state.ref_vectors[x][1], wy, ceiling_lambda)
        state = elongate(state, x, lam)
        lams.append(lam)
    ins = Insertion(rec, w, lams[0], lams[1])
    return replace(
        state,
        inserted=state.inserted + (ins,),
        drawn_edges=state.drawn_edges | {rec.edge},
        drawing=state.drawing.with_coords(state.drawing.coords, "after-leaders"),
        stage="after-leaders",
    )


def insert_ordinary(state: PipelineState) -> PipelineState:
    return replace(
        state,
        drawn_edges=frozenset(state.graph.edges),
        drawing=state.drawing.with_coords(state.drawing.coords, "final"),
        stage="final",
    )


@dataclass(frozen=True)
class PipelineResult:
    drawing: GridDrawing
    tree: RootedOrderedTree
    leaders: Tuple[LeaderRecord, ...]
    insertions: Tuple[Insertion, ...]
    k: int
    tree_side: int
    ceiling_lambda: bool
    outerplanar_path: bool
    witness: Optional[RangeWitness]
    order_violations: Tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return len(self.drawing.coords)

    @property
    def ledger_bound(self) -> int:
        return self.tree_side + len(self.leaders) * (self.tree_side + 1)

    @property
    def claimed_bound(self) -> int:
        return 2 * (self.k + 1) * self.n

    @property
    def ok(self) -> bool:
        # grid size only; planarity is the verifier's job
        return self.drawing.side <= self.ledger_bound

    def report(self) -> str:
        d = self.drawing
        lines = [
            f"k={self.k} leaders={len(self.leaders)} tree_side={self.tree_side} "
            f"grid={d.width}x{d.height} bound={self.ledger_bound} ok={str(self.ok).lower()}"
        ]
        lines += [ins.format() for ins in self.insertions]
        lines += [f"# order violation: {msg}" for msg in self.order_violations]
        return "\n".join(lines) + "\n"


def resolve_tree(g: EmbeddedGraph, max_steps: Optional[int] = None) -> RootedOrderedTree:
    """Tree given in the input file, or the first good tree found."""
    if g.tree_edges is not None:
        return tree_from_edges(g, g.tree_edges)
    return find_good_tree(g, max_steps=max_steps)


def draw_monotone(
    g: EmbeddedGraph,
    tree: Optional[RootedOrderedTree] = None,
    ceiling_lambda: bool = False,
    strict_order: bool = False,
) -> PipelineResult:
    t = tree if tree is not None else resolve_tree(g)
    k = len(inner_vertices(g))
    leaders, _ = classify_edges(g, t)
    if not leaders:
        # nothing to elongate: keep the smaller first-quadrant drawing
        d, w = layout_first_quadrant(t)
        return PipelineResult(
            drawing=GridDrawing(d.coords, "final"),
            tree=t,
            leaders=(),
            insertions=(),
            k=k,
            tree_side=d.side,
            ceiling_lambda=ceiling_lambda,
            outerplanar_path=True,
            witness=w,
        )
    state = initial_state(g, t, strict_order)
    tree_side = state.drawing.side
    for rec in dependency_order(leaders, t):
        state = insert_leader(state, rec, ceiling_lambda)
    state = insert_ordinary(state)
    return PipelineResult(
        drawing=state.drawing,
        tree=t,
        leaders=tuple(ins.record for ins in state.inserted),
        insertions=state.inserted,
        k=k,
        tree_side=tree_side,
        ceiling_lambda=ceiling_lambda,
        outerplanar_path=False,
        witness=None,
        order_violations=state.order_violations,
    )


def edge_classes(g: EmbeddedGraph, t: RootedOrderedTree, leaders: List[LeaderRecord]) -> dict:
    """Map every edge to 'tree', 'leader' or 'ordinary'."""
    lead = {r.edge for r in leaders}
    return {e: ("tree" if e in t.edges else "leader" if e in lead else "ordinary") for e in sorted(g.edges)}


__all__ = [
    "ElongationOrderError",
    "Insertion",
    "PipelineResult",
    "PipelineState",
    "draw_monotone",
    "edge_classes",
    "elongate",
    "elongation_factor",
    "initial_state",
    "insert_leader",
    "insert_ordinary",
    "reference_vectors",
    "resolve_tree",
]
