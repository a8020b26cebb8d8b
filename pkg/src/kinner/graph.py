"""Plane graphs stored as rotation systems.

A graph is given by the clockwise cyclic order of neighbours around every
vertex (y axis pointing up), a designated outer face and a root vertex on
that face.  Faces are traced with the rule

    next(u -> v) = (v -> w),  w = clockwise successor of u around v

which walks every face with the face on its left.  Under this rule inner
faces come out counter-clockwise and the outer face clockwise, so the
``outer:`` line of the text format is the clockwise boundary walk.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .geometry import angle_key, sub

Edge = Tuple[int, int]
Dart = Tuple[int, int]


class GraphFormatError(ValueError):
    """Syntax error in a graph document, with 1-based line/column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EmbeddingError(ValueError):
    """The rotation system does not describe a valid connected plane graph."""

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def _cyclic_index(seq: Sequence[int], target: Sequence[int]) -> int:
    """Offset at which ``target`` occurs as a cyclic rotation of ``seq``, or -1."""
    if len(seq) != len(target):
        return -1
    m = len(seq)
    for off in range(m):
        if all(seq[(off + i) % m] == target[i] for i in range(m)):
            return off
    return -1


@dataclass(frozen=True)
class FaceSet:
    faces: Tuple[Tuple[Dart, ...], ...]
    face_of: Mapping[Dart, int]
    outer_face_id: int

    def vertices(self, fid: int) -> Tuple[int, ...]:
        return tuple(d[0] for d in self.faces[fid])

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class EmbeddedGraph:
    """Connected simple plane graph; validated on construction."""

    n: int
    rotation: Mapping[int, Tuple[int, ...]]
    outer_walk: Tuple[int, ...]
    root: int
    tree_edges: Optional[Tuple[Edge, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rotation", {v: tuple(r) for v, r in sorted(self.rotation.items())})
        object.__setattr__(self, "outer_walk", tuple(self.outer_walk))
        self._validate()

    # -- derived data -----------------------------------------------------

    @property
    def vertices(self) -> List[int]:
        return list(self.rotation)

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(edge_key(u, v) for u, nbrs in self.rotation.items() for v in nbrs)

    @cached_property
    def _pos(self) -> Dict[int, Dict[int, int]]:
        return {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in self.rotation.items()}

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, a: int, b: int) -> bool:
        return edge_key(a, b) in self.edges

    def cw_next(self, v: int, u: int) -> int:
        """Clockwise successor of neighbour u around v."""
        nbrs = self.rotation[v]
        return nbrs[(self._pos[v][u] + 1) % len(nbrs)]

    def cw_prev(self, v: int, u: int) -> int:
        nbrs = self.rotation[v]
        return nbrs[(self._pos[v][u] - 1) % len(nbrs)]

    def rotation_from(self, v: int, start: int) -> Tuple[int, ...]:
        """Clockwise neighbours of v beginning with ``start``."""
        nbrs = self.rotation[v]
        i = self._pos[v][start]
        return nbrs[i:] + nbrs[:i]

    @cached_property
    def root_start(self) -> Optional[int]:
        """First neighbour of the root in clockwise order.

        The root has no parent edge, so its ordering starts right after the
        outer-face corner at the root's first occurrence on the outer walk,
        i.e. with the walk successor of the root.
        """
        if self.n == 1:
            return None
        walk = self.outer_walk
        i = walk.index(self.root)
        return walk[(i + 1) % len(walk)]

    @cached_property
    def faces(self) -> FaceSet:
        return _trace_faces(self)

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        rot = self.rotation
        if self.n < 1 or len(rot) != self.n:
            raise EmbeddingError("count", f"expected {self.n} vertices, got {len(rot)}")
        for v, nbrs in rot.items():
            if v < 1:
                raise EmbeddingError("ids", f"vertex id {v} is not positive")
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError("simple", f"parallel edges at vertex {v}")
            for w in nbrs:
                if w == v:
                    raise EmbeddingError("simple", f"loop at vertex {v}")
                if w not in rot:
                    raise EmbeddingError("ids", f"vertex {v} lists unknown neighbour {w}")
                if v not in rot[w]:
                    raise EmbeddingError("asymmetric", f"{w} in rotation of {v} but {v} not in rotation of {w}")
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for w in rot[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n:
            raise EmbeddingError("disconnected", f"only {len(seen)} of {self.n} vertices reachable")
        if self.root not in rot:
            raise EmbeddingError("root", f"root {self.root} is not a vertex")
        if self.root not in self.outer_walk:
            raise EmbeddingError("root", f"root {self.root} is not on the outer walk")
        self.faces  # traces faces, checks Euler and the outer walk


def _trace_cycles(rotation: Mapping[int, Tuple[int, ...]]) -> Tuple[List[Tuple[Dart, ...]], Dict[Dart, int]]:
    pos = {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in rotation.items()}
    face_of: Dict[Dart, int] = {}
    cycles: List[Tuple[Dart, ...]] = []
    for u in rotation:
        for v in rotation[u]:
            if (u, v) in face_of:
                continue
            fid = len(cycles)
            cycle = []
            dart = (u, v)
            while dart not in face_of:
                face_of[dart] = fid
                cycle.append(dart)
                a, b = dart
                nbrs = rotation[b]
                dart = (b, nbrs[(pos[b][a] + 1) % len(nbrs)])
            cycles.append(tuple(cycle))
    return cycles, face_of


def _trace_faces(g: EmbeddedGraph) -> FaceSet:
    if g.n == 1:
        if g.outer_walk != (g.root,):
            raise EmbeddingError("outer", "single-vertex graph must have outer walk equal to the root")
        return FaceSet(faces=((),), face_of={}, outer_face_id=0)
    cycles, face_of = _trace_cycles(g.rotation)
    e = len(face_of) // 2
    if g.n - e + len(cycles) != 2:
        raise EmbeddingError("euler", f"V - E + F = {g.n} - {e} + {len(cycles)} != 2")
    outer = -1
    for fid, cyc in enumerate(cycles):
        if _cyclic_index([d[0] for d in cyc], g.outer_walk) >= 0:
            outer = fid
            break
    if outer < 0:
        raise EmbeddingError("outer", f"outer walk {list(g.outer_walk)} is not a face of the rotation system")
    return FaceSet(faces=tuple(cycles), face_of=face_of, outer_face_id=outer)


def faces(g: EmbeddedGraph) -> FaceSet:
    return g.faces


def inner_vertices(g: EmbeddedGraph) -> frozenset:
    """Vertices that do not lie on the outer face boundary."""
    on_outer = set(g.outer_walk)
    return frozenset(v for v in g.vertices if v not in on_outer)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\S+")


def _int_token(tok: str, line: int, col: int) -> int:
    if not tok.isdigit() or int(tok) < 1:
        raise GraphFormatError(f"expected a positive integer, got {tok!r}", line, col)
    return int(tok)


def _tokens(text: str, offset: int = 0) -> List[Tuple[str, int]]:
    return [(m.group(), m.start() + offset + 1) for m in _TOKEN.finditer(text)]


def parse_edge_list(tokens: Iterable[Tuple[str, int]], lineno: int) -> List[Edge]:
    out = []
    for tok, col in tokens:
        parts = tok.split("-")
        if len(parts) != 2:
            raise GraphFormatError(f"expected an edge a-b, got {tok!r}", lineno, col)
        out.append((_int_token(parts[0], lineno, col), _int_token(parts[1], lineno, col)))
    return out


def parse_embedded_graph(text: str) -> EmbeddedGraph:
    """Parse the line-based graph format and validate the embedding."""
    n: Optional[int] = None
    rotation: Dict[int, Tuple[int, ...]] = {}
    outer: Optional[Tuple[int, ...]] = None
    root: Optional[int] = None
    tree: Optional[List[Edge]] = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        head, hcol = toks[0]
        if n is None:
            if head != "n" or len(toks) != 2:
                raise GraphFormatError("first line must be 'n <vertex-count>'", lineno, hcol)
            n = _int_token(toks[1][0], lineno, toks[1][1])
            continue
        if head == "v":
            colon = line.find(":")
            if colon < 0:
                raise GraphFormatError("vertex line needs ':'", lineno, hcol)
            id_toks = _tokens(line[line.index("v") + 1:colon], line.index("v") + 1)
            if len(id_toks) != 1:
                raise GraphFormatError("vertex line needs exactly one id before ':'", lineno, hcol)
            vid = _int_token(id_toks[0][0], lineno, id_toks[0][1])
            if vid in rotation:
                raise GraphFormatError(f"vertex {vid} declared twice", lineno, id_toks[0][1])
            rotation[vid] = tuple(_int_token(t, lineno, c) for t, c in _tokens(line[colon + 1:], colon + 1))
        elif head.rstrip(":") in ("outer", "root", "tree"):
            key = head.rstrip(":")
            colon = line.find(":")
            if colon < 0:
                raise GraphFormatError(f"'{key}' line needs ':'", lineno, hcol)
            rest = _tokens(line[colon + 1:], colon + 1)
            if key == "outer":
                if outer is not None:
                    raise GraphFormatError("duplicate outer line", lineno, hcol)
                if not rest:
                    raise GraphFormatError("empty outer walk", lineno, hcol)
                outer = tuple(_int_token(t, lineno, c) for t, c in rest)
            elif key == "root":
                if root is not None or len(rest) != 1:
                    raise GraphFormatError("root line needs exactly one id", lineno, hcol)
                root = _int_token(rest[0][0], lineno, rest[0][1])
            else:
                tree = parse_edge_list(rest, lineno)
        else:
            raise GraphFormatError(f"unknown directive {head!r}", lineno, hcol)
    if n is None:
        raise GraphFormatError("missing 'n' line", max(last_line, 1))
    if outer is None:
        raise GraphFormatError("missing 'outer:' line", max(last_line, 1))
    if root is None:
        raise GraphFormatError("missing 'root:' line", max(last_line, 1))
    return EmbeddedGraph(
        n=n,
        rotation=rotation,
        outer_walk=outer,
        root=root,
        tree_edges=tuple(tree) if tree is not None else None,
    )


def serialize_graph(g: EmbeddedGraph, tree_edges: Optional[Iterable[Edge]] = None) -> str:
    lines = [f"n {g.n}"]
    for v, nbrs in g.rotation.items():
        lines.append(f"v {v}: " + " ".join(map(str, nbrs)) if nbrs else f"v {v}:")
    lines.append("outer: " + " ".join(map(str, g.outer_walk)))
    lines.append(f"root: {g.root}")
    tree_edges = tree_edges if tree_edges is not None else g.tree_edges
    if tree_edges is not None:
        lines.append("tree: " + " ".join(f"{a}-{b}" for a, b in tree_edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Geometry -> embedding
# ---------------------------------------------------------------------------

def rotation_from_drawing(
    edges: Iterable[Edge], coords: Mapping[int, Tuple[int, int]]
) -> Dict[int, Tuple[int, ...]]:
    """Clockwise rotation system realised by a straight-line drawing."""
    nbrs: Dict[int, List[int]] = {v: [] for v in coords}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rot = {}
    for v, ws in nbrs.items():
        # counter-clockwise by polar angle, then reversed for clockwise
        ws = sorted(ws, key=lambda w: angle_key(sub(coords[w], coords[v])))
        rot[v] = tuple(reversed(ws))
    return rot


def embedding_from_drawing(
    edges: Iterable[Edge], coords: Mapping[int, Tuple[int, int]], root: int
) -> EmbeddedGraph:
    """Build the plane graph realised by a planar straight-line drawing.

    The outer face is the traced face with the most negative signed area
    (it is the only one walked clockwise).
    """
    edges = list(edges)
    rot = rotation_from_drawing(edges, coords)
    cycles, _ = _trace_cycles(dict(sorted(rot.items())))
    best, best_area = [root], None
    for cyc in cycles:
        walk = [d[0] for d in cyc]
        m = len(walk)
        area = sum(
            coords[walk[i]][0] * coords[walk[(i + 1) % m]][1] - coords[walk[(i + 1) % m]][0] * coords[walk[i]][1]
            for i in range(m)
        )
        if best_area is None or area < best_area:
            best, best_area = walk, area
    if root in best:
        i = best.index(root)
        best = best[i:] + best[:i]
    return EmbeddedGraph(n=len(rot), rotation=rot, outer_walk=tuple(best), root=root)
