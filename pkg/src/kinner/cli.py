"""Command line entry point: draw, verify, gen, tree."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .assembler import draw_monotone, resolve_tree
from .generate import generate_drawable
from .goodtree import NoGoodTreeError, SearchBudgetExceeded, TreeError, tree_from_edges, verify_good_tree
from .graph import EmbeddedGraph, GraphFormatError, _tokens, inner_vertices, parse_edge_list, parse_embedded_graph, serialize_graph
from .layout import format_coords, layout_first_quadrant, layout_tree, parse_coords
from .leaders import format_leader_report, leader_edges
from .render import render_svg
from .verify import check_slope_disjoint, grid_report, run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NOT_FOUND = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc


def _load_graph(path: str) -> EmbeddedGraph:
    try:
        return parse_embedded_graph(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _tree_edges_from_file(path: str):
    """Accept either a ``tree:`` line or a bare list of a-b tokens."""
    edges = []
    for lineno, raw in enumerate(_read(path).splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip().startswith("tree:"):
            body = body.split(":", 1)[1]
        if not body.strip():
            continue
        try:
            edges += parse_edge_list(_tokens(body), lineno)
        except GraphFormatError as exc:
            raise InputError(f"{path}: {exc}") from exc
    return edges


def cmd_draw(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    result = draw_monotone(g, ceiling_lambda=args.ceiling_lambda)
    if args.coords:
        _write(args.coords, format_coords(result.drawing))
    if args.output:
        _write(args.output, render_svg(g, result.tree, result.drawing, leaders=result.leaders))
    if args.report:
        sys.stdout.write(format_leader_report(result.leaders) if result.leaders else "order:\n")
        sys.stdout.write(result.report())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    try:
        drawing, witness = parse_coords(_read(args.coords))
    except ValueError as exc:
        raise InputError(f"{args.coords}: {exc}") from exc
    missing = sorted(set(g.vertices) - set(drawing.coords))
    if missing:
        raise InputError(f"{args.coords}: no coordinates for vertices {missing}")
    try:
        t = tree_from_edges(g, _tree_edges_from_file(args.tree)) if args.tree else resolve_tree(g)
    except TreeError as exc:
        raise InputError(str(exc)) from exc
    verdict = verify_good_tree(g, t)
    print(verdict.format())
    checks = run_checks(g, t, drawing)
    if witness is not None:
        checks.append(check_slope_disjoint(t, drawing, witness))
    for c in checks:
        print(c.format())
    leaders = leader_edges(g, t)
    tree_side = (layout_tree(t) if leaders else layout_first_quadrant(t))[0].side
    rep = grid_report(drawing, g.n, len(inner_vertices(g)), tree_side, len(leaders))
    print("# " + rep.format())
    return EXIT_OK if verdict.ok and all(c.ok for c in checks) else EXIT_FAIL


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        g, _, used = generate_drawable(args.seed, args.n, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    header = f"# generated n={args.n} k={args.k} seed={used}"
    if used != args.seed:
        header += f" (requested seed {args.seed} had no good spanning tree)"
    _write(args.output, header + "\n" + serialize_graph(g))
    return EXIT_OK


def cmd_tree(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    t = resolve_tree(g)
    if args.quadrant:
        d, w = layout_first_quadrant(t)
    else:
        d, w, _ = layout_tree(t)
    _write(args.coords, format_coords(d, w))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kinner", description="Planar monotone grid drawings of k-inner plane graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("draw", help="run the full drawing pipeline")
    d.add_argument("--input", required=True)
    d.add_argument("--output", help="SVG file to write")
    d.add_argument("--coords", help="coordinate dump to write")
    d.add_argument("--paper-lambda", dest="ceiling_lambda", action="store_true", help="use the ceiling elongation factor")
    d.add_argument("--report", action="store_true", help="print leaders, insertions and grid size")
    d.set_defaults(func=cmd_draw)

    v = sub.add_parser("verify", help="check a drawing against its graph")
    v.add_argument("--input", required=True)
    v.add_argument("--coords", required=True)
    v.add_argument("--tree", help="file with the spanning tree edges")
    v.set_defaults(func=cmd_verify)

    gp = sub.add_parser("gen", help="generate a random k-inner plane graph")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--k", type=int, required=True)
    gp.add_argument("--seed", type=int, required=True)
    gp.add_argument("--output", required=True)
    gp.set_defaults(func=cmd_gen)

    tp = sub.add_parser("tree", help="draw only the good spanning tree")
    tp.add_argument("--input", required=True)
    mode = tp.add_mutually_exclusive_group()
    mode.add_argument("--octant", action="store_true", help="second-octant drawing (default)")
    mode.add_argument("--quadrant", action="store_true", help="first-quadrant drawing")
    tp.add_argument("--coords", required=True)
    tp.set_defaults(func=cmd_tree)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, TreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NoGoodTreeError, SearchBudgetExceeded) as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND


if __name__ == "__main__":
    sys.exit(main())
