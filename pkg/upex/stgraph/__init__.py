"""
Engines for instances whose graph is an upward planar st-graph.
"""

from .conditions import (
    AuxGraph,
    check_condition1,
    check_condition2_fixed,
    condition2_violation,
    pinned_floor,
    pinned_groups,
)
from .dominance import (
    DominanceIndex,
    Relation,
    build_dominance_index,
    transitive_edges,
    transitive_reduction,
)
from .fixed import build_witness_drawing_st, solve_st_fue
from .spqr import NodeKind, SkeletonEdge, SpqrNode, SpqrTree, build_spqr_tree
from .stgraph import StGraph, st_embedding
from .variable import assemble_embedding, solve_st_upe
from .witness import line_classes, witness_lines

__all__ = [
    "AuxGraph",
    "check_condition1",
    "check_condition2_fixed",
    "condition2_violation",
    "pinned_floor",
    "pinned_groups",
    "DominanceIndex",
    "Relation",
    "build_dominance_index",
    "transitive_edges",
    "transitive_reduction",
    "build_witness_drawing_st",
    "solve_st_fue",
    "NodeKind",
    "SkeletonEdge",
    "SpqrNode",
    "SpqrTree",
    "build_spqr_tree",
    "StGraph",
    "st_embedding",
    "assemble_embedding",
    "solve_st_upe",
    "line_classes",
    "witness_lines",
]
