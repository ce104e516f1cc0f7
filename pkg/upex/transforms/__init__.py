"""
Equivalence-preserving instance transforms.
"""

from .element_map import ElementMap, Origin, OriginKind, rewire_paths, split_route
from .elimination import Segment, SweepState, eliminate_partial_edges, subdivide_bends, sweep_lines
from .distinct_y import make_distinct_y, split_vertices, strip_height
from .olp import OrderedLevelGraph, olp_to_upe, upe_to_olp

__all__ = [
    "ElementMap",
    "Origin",
    "OriginKind",
    "rewire_paths",
    "split_route",
    "Segment",
    "SweepState",
    "eliminate_partial_edges",
    "subdivide_bends",
    "sweep_lines",
    "make_distinct_y",
    "split_vertices",
    "strip_height",
    "OrderedLevelGraph",
    "olp_to_upe",
    "upe_to_olp",
]
