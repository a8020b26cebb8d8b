"""Monotone grid drawings of rooted ordered trees.

Leaves are numbered 1..L in child order.  A vertex u whose subtree spans
leaves i..j is drawn at parent + primitive(i - 1, L - j + 1).  Leaf t
therefore points in direction (t - 1, L - t + 1); these directions turn
strictly clockwise with t, and every vertex direction lies between those
of its first and last leaf, which gives nested, touching-only slope
ranges.  The slope-range witness uses the mediant of consecutive leaf
directions as the shared boundary between neighbouring ranges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from .geometry import Vec, add, primitive, sub
from .goodtree import RootedOrderedTree


@dataclass(frozen=True)
class GridDrawing:
    coords: Mapping[int, Vec]
    stage: str = "tree"  # tree | after-leaders | final

    def __post_init__(self) -> None:
        coords = {v: (int(p[0]), int(p[1])) for v, p in self.coords.items()}
        if len(set(coords.values())) != len(coords):
            raise ValueError("two vertices share a grid point")
        object.__setattr__(self, "coords", MappingProxyType(coords))

    def __getitem__(self, v: int) -> Vec:
        return self.coords[v]

    @property
    def width(self) -> int:
        xs = [p[0] for p in self.coords.values()]
        return max(xs) - min(xs) if xs else 0

    @property
    def height(self) -> int:
        ys = [p[1] for p in self.coords.values()]
        return max(ys) - min(ys) if ys else 0

    @property
    def side(self) -> int:
        return max(self.width, self.height)

    def in_first_quadrant(self) -> bool:
        return all(x >= 0 and y >= 0 for x, y in self.coords.values())

    def in_second_octant(self) -> bool:
        return all(0 <= x <= y for x, y in self.coords.values())

    def with_coords(self, coords: Mapping[int, Vec], stage: str | None = None) -> "GridDrawing":
        return GridDrawing(coords, stage or self.stage)


@dataclass(frozen=True)
class IntervalTable:
    intervals: Mapping[int, Tuple[int, int]]
    leaf_total: int


@dataclass(frozen=True)
class RangeWitness:
    """Per-vertex slope range given by boundary direction vectors.

    ``ranges[u] = (lo, hi)``: every edge of T_u and the edge entering u has
    polar angle strictly between angle(lo) and angle(hi).
    """

    ranges: Mapping[int, Tuple[Vec, Vec]] = field(default_factory=dict)

    def __getitem__(self, v: int) -> Tuple[Vec, Vec]:
        return self.ranges[v]

    def __contains__(self, v: int) -> bool:
        return v in self.ranges

    def __len__(self) -> int:
        return len(self.ranges)


RefVectorTable = Mapping[int, Vec]


def leaf_intervals(t: RootedOrderedTree) -> IntervalTable:
    index = {leaf: i for i, leaf in enumerate(t.leaves, start=1)}
    iv: Dict[int, Tuple[int, int]] = {}
    for v in reversed(t.preorder):
        kids = t.children[v]
        if not kids:
            iv[v] = (index[v], index[v])
        else:
            iv[v] = (iv[kids[0]][0], iv[kids[-1]][1])
    return IntervalTable(MappingProxyType(iv), len(t.leaves))


def _boundary(t: int, total: int) -> Vec:
    """Direction separating leaf t from leaf t + 1 (t = 0..total)."""
    if t == 0:
        return (-1, 1)
    if t == total:
        return (total, 1)
    return primitive((2 * t - 1, 2 * total - 2 * t + 1))


def layout_first_quadrant(t: RootedOrderedTree) -> Tuple[GridDrawing, RangeWitness]:
    table = leaf_intervals(t)
    total = table.leaf_total
    coords: Dict[int, Vec] = {t.root: (0, 0)}
    for v in t.preorder:
        for c in t.children[v]:
            i, j = table.intervals[c]
            coords[c] = add(coords[v], primitive((i - 1, total - j + 1)))
    if len(t.vertices) == 1:
        return GridDrawing(coords, "tree"), RangeWitness({})
    ranges = {}
    for v, (i, j) in table.intervals.items():
        ranges[v] = (_boundary(j, total), _boundary(i - 1, total))
    return GridDrawing(coords, "tree"), RangeWitness(MappingProxyType(ranges))


def _shear(p: Vec) -> Vec:
    return (p[0], p[0] + p[1])


def shear_second_octant(d: GridDrawing, w: RangeWitness) -> Tuple[GridDrawing, RangeWitness]:
    """Map (x, y) -> (x, x + y).

    The shear has determinant 1, so it keeps the circular order of all
    directions; every first-quadrant point lands in y >= x.
    """
    if not d.in_first_quadrant():
        raise ValueError("drawing is not contained in the first quadrant")
    coords = {v: _shear(p) for v, p in d.coords.items()}
    ranges = {v: (_shear(lo), _shear(hi)) for v, (lo, hi) in w.ranges.items()}
    return GridDrawing(coords, d.stage), RangeWitness(MappingProxyType(ranges))


def reference_vectors(t: RootedOrderedTree, d: GridDrawing) -> RefVectorTable:
    return MappingProxyType({c: sub(d[c], d[p]) for c, p in t.parent.items()})


def layout_tree(t: RootedOrderedTree) -> Tuple[GridDrawing, RangeWitness, RefVectorTable]:
    """Second-octant drawing plus its witness and frozen reference vectors."""
    d, w = shear_second_octant(*layout_first_quadrant(t))
    return d, w, reference_vectors(t, d)


# ---------------------------------------------------------------------------
# Text dumps
# ---------------------------------------------------------------------------

def format_coords(d: GridDrawing, w: RangeWitness | None = None) -> str:
    lines = [f"p {v} {x} {y}" for v, (x, y) in sorted(d.coords.items())]
    if w is not None:
        lines += [f"w {v} {lo[0]} {lo[1]} {hi[0]} {hi[1]}" for v, (lo, hi) in sorted(w.ranges.items())]
    return "\n".join(lines) + "\n"


def parse_coords(text: str) -> Tuple[GridDrawing, RangeWitness | None]:
    coords: Dict[int, Vec] = {}
    ranges: Dict[int, Tuple[Vec, Vec]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split("#", 1)[0].split()
        if not parts:
            continue
        try:
            if parts[0] == "p" and len(parts) == 4:
                coords[int(parts[1])] = (int(parts[2]), int(parts[3]))
                continue
            if parts[0] == "w" and len(parts) == 6:
                a, b, c, e = map(int, parts[2:])
                ranges[int(parts[1])] = ((a, b), (c, e))
                continue
        except ValueError:
            pass
        raise ValueError(f"line {lineno}: cannot parse {raw.strip()!r}")
    return GridDrawing(coords, "final"), (RangeWitness(ranges) if ranges else None)
