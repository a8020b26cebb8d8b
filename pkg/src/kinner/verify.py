"""Exact, independent checks for drawings produced by the pipeline.

Each check returns a CheckVerdict; a failing verdict always carries a
counterexample that can be re-checked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .geometry import (
    Vec,
    angle_key,
    compare_angle,
    convex_hull,
    cross,
    dot,
    in_relative_interior,
    on_hull_boundary,
    same_direction,
    segments_conflict,
    sub,
)
from .goodtree import RootedOrderedTree
from .graph import Edge, EmbeddedGraph, edge_key, rotation_from_drawing
from .layout import GridDrawing, RangeWitness
from .leaders import LeaderRecord, leader_record, non_tree_edges


@dataclass(frozen=True)
class CheckVerdict:
    name: str
    ok: bool
    counterexample: Optional[Tuple[Any, ...]] = None
    info: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def format(self) -> str:
        text = f"CHECK {self.name} {self.status}"
        if self.counterexample is not None:
            text += " " + " ".join(_fmt(x) for x in self.counterexample)
        if self.info:
            text += f" ({self.info})"
        return text


def _fmt(x: Any) -> str:
    if isinstance(x, tuple) and len(x) == 2 and all(isinstance(y, int) for y in x):
        return f"{x[0]}-{x[1]}"
    return str(x)


def _require(d: GridDrawing, vertices: Iterable[int]) -> None:
    missing = sorted(set(vertices) - set(d.coords))
    if missing:
        raise ValueError(f"no coordinates for vertices {missing}")


# ---------------------------------------------------------------------------
# Planarity
# ---------------------------------------------------------------------------

Segment = Tuple[Vec, Vec]


def first_segment_conflict(segments: Sequence[Segment]) -> Optional[Tuple[int, int]]:
    """Lexicographically first pair of segments that meet improperly."""
    for i, j in combinations(range(len(segments)), 2):
        (p1, p2), (q1, q2) = segments[i], segments[j]
        if segments_conflict(p1, p2, q1, q2):
            return i, j
    return None


def rational_segment_conflict(s: Segment, t: Segment) -> bool:
    """Slow reference predicate built on exact rational line solving.

    Meant as an oracle for ``segments_conflict``; shares no code with it.
    """
    (ax, ay), (bx, by) = s
    (cx, cy), (dx, dy) = t
    ends_s = {s[0], s[1]}
    ends_t = {t[0], t[1]}
    shared = ends_s & ends_t
    rx, ry = bx - ax, by - ay
    sx, sy = dx - cx, dy - cy
    den = rx * sy - ry * sx
    qx, qy = cx - ax, cy - ay
    if den != 0:
        a = Fraction(qx * sy - qy * sx, den)
        b = Fraction(qx * ry - qy * rx, den)
        if not (0 <= a <= 1 and 0 <= b <= 1):
            return False
        point = (ax + a * rx, ay + a * ry)
        return point not in shared
    # parallel
    if qx * ry - qy * rx != 0:
        return False
    # collinear: project onto the direction of s
    rr = rx * rx + ry * ry
    t0 = Fraction(qx * rx + qy * ry, rr)
    t1 = Fraction((dx - ax) * rx + (dy - ay) * ry, rr)
    lo, hi = max(Fraction(0), min(t0, t1)), min(Fraction(1), max(t0, t1))
    if lo > hi:
        return False
    if lo < hi:
        return True
    point = (ax + lo * rx, ay + lo * ry)
    return point not in shared


def check_planar_segments(d: GridDrawing, edges: Iterable[Edge]) -> CheckVerdict:
    """Planarity of the straight-line drawing of ``edges`` under ``d``."""
    es = sorted(edge_key(*e) for e in edges)
    _require(d, {x for e in es for x in e})
    segs = [(d[a], d[b]) for a, b in es]
    hit = first_segment_conflict(segs)
    if hit is not None:
        return CheckVerdict("planar", False, (es[hit[0]], es[hit[1]]))
    for a, b in es:
        for v, p in sorted(d.coords.items()):
            if v != a and v != b and in_relative_interior(p, d[a], d[b]):
                return CheckVerdict("planar", False, (v, (a, b)))
    return CheckVerdict("planar", True)


def check_planar_drawing(g: EmbeddedGraph, d: GridDrawing) -> CheckVerdict:
    """No two edges cross or overlap, and no vertex sits inside a foreign edge."""
    _require(d, g.vertices)
    return check_planar_segments(d, g.edges)


# ---------------------------------------------------------------------------
# Monotonicity
# ---------------------------------------------------------------------------

def _cone_add(cone: Optional[Tuple[Vec, Vec]], v: Vec) -> Tuple[bool, Optional[Tuple[Vec, Vec]]]:
    if cone is None:
        return True, (v, v)
    lo, hi = cone
    if same_direction(v, lo) or same_direction(v, hi):
        return True, cone
    a, b = cross(lo, v), cross(v, hi)
    if a > 0 and b > 0:
        return True, cone
    if a > 0:
        return True, (lo, v)
    if b > 0:
        return True, (v, hi)
    return False, None


def path_is_monotone(vectors: Sequence[Vec]) -> bool:
    """Edge vectors fit in an open half-plane (their angular span is below pi)."""
    cone = None
    for v in vectors:
        ok, cone = _cone_add(cone, v)
        if not ok:
            return False
    return True


def check_monotone(g: EmbeddedGraph, t: RootedOrderedTree, d: GridDrawing) -> CheckVerdict:
    """Every vertex pair is joined by a monotone tree path."""
    _require(d, g.vertices)
    adj: Dict[int, List[int]] = {v: list(t.children[v]) for v in t.vertices}
    for c, p in t.parent.items():
        adj[c].append(p)
    for src in sorted(t.vertices):
        stack: List[Tuple[int, int, Optional[Tuple[Vec, Vec]]]] = [(src, 0, None)]
        while stack:
            x, came, cone = stack.pop()
            for y in adj[x]:
                if y == came:
                    continue
                ok, nxt = _cone_add(cone, sub(d[y], d[x]))
                if not ok:
                    a, b = sorted((src, y))
                    return CheckVerdict("monotone", False, (a, b))
                stack.append((y, x, nxt))
    return CheckVerdict("monotone", True)


# ---------------------------------------------------------------------------
# Slope-disjointness
# ---------------------------------------------------------------------------

def _rel(base: Vec, v: Vec) -> Vec:
    # v rotated so that base points along +x (scaled by |base|)
    return (dot(base, v), cross(base, v))


def _cmp_from(base: Vec, a: Vec, b: Vec) -> int:
    """Compare counter-clockwise angles measured from base, in [0, 2*pi)."""
    return compare_angle(_rel(base, a), _rel(base, b))


def _strictly_inside(lo: Vec, hi: Vec, v: Vec) -> bool:
    if same_direction(v, lo):
        return False
    return _cmp_from(lo, v, hi) < 0


def check_slope_disjoint(t: RootedOrderedTree, d: GridDrawing, w: RangeWitness) -> CheckVerdict:
    """Non-strict slope-disjointness certified by the given witness.

    1. every edge of T_u and the edge entering u lies strictly inside u's range;
    2. a child's range is nested in its parent's range;
    3. sibling ranges have disjoint interiors.
    """
    verts = t.vertices
    if len(verts) == 1:
        return CheckVerdict("slope-disjoint", True)
    missing = sorted(v for v in verts if v not in w)
    if missing:
        raise ValueError(f"witness has no range for vertices {missing}")
    vec = {c: sub(d[c], d[p]) for c, p in t.parent.items()}
    for u in verts:
        lo, hi = w[u]
        if same_direction(lo, hi):
            return CheckVerdict("slope-disjoint", False, ("empty-range", u))
        edges = [x for x in t.subtree(u) if x != u]
        if u != t.root:
            edges.append(u)
        for x in edges:
            if not _strictly_inside(lo, hi, vec[x]):
                return CheckVerdict("slope-disjoint", False, ("edge-outside", u, (t.parent[x], x)))
        for c in t.children[u]:
            clo, chi = w[c]
            if not (same_direction(clo, lo) or _strictly_inside(lo, hi, clo)):
                return CheckVerdict("slope-disjoint", False, ("nesting", u, c))
            if not (same_direction(chi, hi) or _strictly_inside(lo, hi, chi)):
                return CheckVerdict("slope-disjoint", False, ("nesting", u, c))
            if _cmp_from(lo, clo, chi) >= 0:
                return CheckVerdict("slope-disjoint", False, ("nesting", u, c))
        for a, b in combinations(t.children[u], 2):
            alo, ahi = w[a]
            blo, bhi = w[b]
            apart = _cmp_from(lo, ahi, blo) <= 0 or _cmp_from(lo, bhi, alo) <= 0
            if not apart:
                return CheckVerdict("slope-disjoint", False, ("siblings", a, b))
    return CheckVerdict("slope-disjoint", True)


# ---------------------------------------------------------------------------
# Near-convexity
# ---------------------------------------------------------------------------

def reflex_pairs(t: RootedOrderedTree, d: GridDrawing) -> List[Tuple[int, int, int]]:
    """(vertex, a, b) for every angularly consecutive pair of tree edges at
    vertex (from edge to a, counter-clockwise to edge to b) spanning more
    than pi or nothing at all."""
    out = []
    for v in sorted(t.vertices):
        nbrs = list(t.children[v]) + ([t.parent[v]] if v in t.parent else [])
        if len(nbrs) < 2:
            continue
        nbrs.sort(key=lambda x: angle_key(sub(d[x], d[v])))
        for i, a in enumerate(nbrs):
            b = nbrs[(i + 1) % len(nbrs)]
            va, vb = sub(d[a], d[v]), sub(d[b], d[v])
            c = cross(va, vb)
            if c < 0 or (c == 0 and dot(va, vb) > 0):
                out.append((v, a, b))
    return out


def check_near_convex(t: RootedOrderedTree, d: GridDrawing, root_exceptions: int = 1) -> CheckVerdict:
    """All consecutive edge angles lie in (0, pi], up to ``root_exceptions``
    reflex angles at the root."""
    bad = reflex_pairs(t, d)
    at_root = [x for x in bad if x[0] == t.root]
    others = [x for x in bad if x[0] != t.root]
    info = f"root exceptions used: {len(at_root)}"
    if others:
        v, a, b = others[0]
        return CheckVerdict("near-convex", False, (v, a, b), info)
    if len(at_root) > root_exceptions:
        v, a, b = at_root[root_exceptions]
        return CheckVerdict("near-convex", False, (v, a, b), info)
    return CheckVerdict("near-convex", True, None, info)


def check_embedding(g: EmbeddedGraph, d: GridDrawing) -> CheckVerdict:
    """The drawing realizes the rotation system of g (up to cyclic shifts)."""
    _require(d, g.vertices)
    drawn = rotation_from_drawing(g.edges, {v: d[v] for v in g.vertices})
    for v in g.vertices:
        want = tuple(g.rotation[v])
        got = tuple(drawn[v])
        if len(want) <= 2:
            if sorted(want) != sorted(got):
                return CheckVerdict("embedding", False, (v,))
            continue
        i = got.index(want[0])
        if got[i:] + got[:i] != want:
            return CheckVerdict("embedding", False, (v,))
    return CheckVerdict("embedding", True)


# ---------------------------------------------------------------------------
# Hull property around leaders
# ---------------------------------------------------------------------------

def check_hull_property(g: EmbeddedGraph, t: RootedOrderedTree, d: GridDrawing, rec: LeaderRecord) -> CheckVerdict:
    pts = {v: d[v] for v in rec.boundary_set}
    hull = convex_hull(pts.values())
    for v in sorted(pts):
        if not on_hull_boundary(pts[v], hull):
            return CheckVerdict("hull", False, (rec.edge, v))
    rp, lp = set(rec.right_path), set(rec.left_path)
    for e in non_tree_edges(g, t):
        if e == rec.edge:
            continue
        other = leader_record(g, t, e)
        if other.covered != rec.covered:
            continue
        a, b = e
        if not ((a in rp and b in lp) or (a in lp and b in rp)):
            return CheckVerdict("hull", False, (rec.edge, e))
    return CheckVerdict("hull", True)


# ---------------------------------------------------------------------------
# Grid size
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridReport:
    width: int
    height: int
    n: int
    k: int
    tree_side: int
    leaders: int

    @property
    def side(self) -> int:
        return max(self.width, self.height)

    @property
    def ledger_bound(self) -> int:
        return self.tree_side + self.leaders * (self.tree_side + 1)

    @property
    def claimed_bound(self) -> int:
        return 2 * (self.k + 1) * self.n

    @property
    def within_ledger(self) -> bool:
        return self.side <= self.ledger_bound

    @property
    def within_claimed(self) -> bool:
        return self.side <= self.claimed_bound

    @property
    def within_claimed_plus_k(self) -> bool:
        return self.side <= self.claimed_bound + self.k

    @property
    def fits_n_by_n(self) -> bool:
        return self.side <= self.n

    def format(self) -> str:
        return (
            f"grid={self.width}x{self.height} ledger_bound={self.ledger_bound} "
            f"claimed_bound={self.claimed_bound} fits_nxn={str(self.fits_n_by_n).lower()}"
        )


def grid_report(d: GridDrawing, n: int, k: int, tree_side: int, leaders: int = 0) -> GridReport:
    return GridReport(d.width, d.height, n, k, tree_side, leaders)


def run_checks(
    g: EmbeddedGraph,
    t: RootedOrderedTree,
    d: GridDrawing,
    w: Optional[RangeWitness] = None,
) -> List[CheckVerdict]:
    """Checks that apply to a complete drawing of g."""
    out = [check_planar_drawing(g, d), check_monotone(g, t, d), check_embedding(g, d)]
    out.append(check_near_convex(t, d))
    if w is not None:
        out.append(check_slope_disjoint(t, d, w))
    return out
