"""Plain SVG output for grid drawings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .goodtree import RootedOrderedTree
from .graph import EmbeddedGraph
from .layout import GridDrawing
from .leaders import LeaderRecord, leader_edges

_STROKES = {
    "tree": 'stroke="#222222" stroke-width="2"',
    "leader": 'stroke="#c0392b" stroke-width="2" stroke-dasharray="6,4"',
    "ordinary": 'stroke="#9a9a9a" stroke-width="1"',
}


@dataclass(frozen=True)
class RenderStyle:
    scale: int = 24  # pixels per grid unit
    radius: int = 5
    margin: int = 24
    labels: bool = True

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise ValueError(f"scale must be at least 1, got {self.scale}")
        if self.radius < 0 or self.margin < 0:
            raise ValueError("radius and margin must be non-negative")


def render_svg(
    g: EmbeddedGraph,
    t: RootedOrderedTree,
    d: GridDrawing,
    style: RenderStyle = RenderStyle(),
    leaders: Optional[Sequence[LeaderRecord]] = None,
) -> str:
    missing = sorted(set(g.vertices) - set(d.coords))
    if missing:
        raise ValueError(f"no coordinates for vertices {missing}")
    if leaders is None:
        leaders = leader_edges(g, t)
    lead = {r.edge for r in leaders}
    xs = [p[0] for p in d.coords.values()]
    ys = [p[1] for p in d.coords.values()]
    x0, y1 = min(xs), max(ys)
    s, m = style.scale, style.margin
    width = (max(xs) - x0) * s + 2 * m
    height = (y1 - min(ys)) * s + 2 * m

    def px(v: int) -> tuple:
        x, y = d[v]
        return (x - x0) * s + m, (y1 - y) * s + m  # screen y grows downward

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    groups = {"ordinary": [], "leader": [], "tree": []}
    for a, b in sorted(g.edges):
        kind = "tree" if (a, b) in t.edges else "leader" if (a, b) in lead else "ordinary"
        (ax, ay), (bx, by) = px(a), px(b)
        groups[kind].append(f'<line class="{kind}" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" {_STROKES[kind]}/>')
    for kind in ("ordinary", "leader", "tree"):
        out += groups[kind]
    for v in sorted(g.vertices):
        cx, cy = px(v)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{style.radius}" fill="#1f4e79"/>')
        if style.labels:
            out.append(
                f'<text x="{cx + style.radius + 2}" y="{cy - style.radius - 2}" '
                f'font-family="monospace" font-size="12">{v}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
