"""Planar monotone grid drawings of k-inner plane graphs, with exact verifiers."""

from .assembler import (
    ElongationOrderError,
    PipelineResult,
    PipelineState,
    draw_monotone,
    elongate,
    elongation_factor,
    initial_state,
    insert_leader,
    insert_ordinary,
)
from .generate import generate_drawable, generate_k_inner
from .goodtree import (
    GoodTreeVerdict,
    NoGoodTreeError,
    RootedOrderedTree,
    SearchBudgetExceeded,
    TreeError,
    boundary_path,
    find_good_tree,
    iter_good_trees,
    tree_from_edges,
    tree_from_parent,
    verify_good_tree,
)
from .graph import (
    EmbeddedGraph,
    EmbeddingError,
    FaceSet,
    GraphFormatError,
    embedding_from_drawing,
    faces,
    inner_vertices,
    parse_embedded_graph,
    serialize_graph,
)
from .layout import (
    GridDrawing,
    IntervalTable,
    RangeWitness,
    format_coords,
    layout_first_quadrant,
    layout_tree,
    leaf_intervals,
    parse_coords,
    shear_second_octant,
)
from .leaders import (
    LeaderOrderError,
    LeaderRecord,
    classify_edges,
    covered_leaves,
    dependency_order,
    format_leader_report,
    leader_edges,
)
from .render import RenderStyle, render_svg
from .trees import ordered_tree, tree_graph
from .verify import (
    CheckVerdict,
    GridReport,
    check_embedding,
    check_hull_property,
    check_monotone,
    check_near_convex,
    check_planar_drawing,
    check_slope_disjoint,
    grid_report,
    run_checks,
)

__version__ = "0.1.0"
