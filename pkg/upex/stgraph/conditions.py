"""
The two conditions deciding extensibility of st-graph instances with
edgeless H.

Condition 1: whenever a pinned vertex u reaches a pinned vertex w, the
pin of w is strictly higher. Condition 2: pinned vertices sharing a y, read
by increasing x, are each to the left of the next in the embedding.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import List, Optional, Tuple

import networkx as nx

from ..core.geometry import sorted_exactly
from ..core.graph import DirectedGraph, Edge
from ..core.model import UpeInstance
from ..exceptions import PreconditionError, PreconditionReason
from ..logging import get_logger
from .dominance import DominanceIndex

logger = get_logger(__name__)


def _require_edgeless(inst: UpeInstance) -> None:
    if inst.partial_edges:
        raise PreconditionError(
            "conditions are stated for an edgeless partial drawing",
            engine_type="stgraph",
            reason=PreconditionReason.H_HAS_EDGES,
        )


def pinned_groups(inst: UpeInstance) -> List[Tuple[int, ...]]:
    """Pinned vertices grouped by y (increasing), each group by increasing x"""
    pos = inst.drawing.vertex_pos
    by_y = sorted_exactly(sorted(inst.partial_vertices), key=lambda v: pos[v].y)
    return [
        tuple(sorted_exactly(group, key=lambda v: pos[v].x))
        for _, group in groupby(by_y, key=lambda v: pos[v].y)
    ]


@dataclass(frozen=True)
class AuxGraph:
    """
    G plus one connector vertex between every two consecutive y-groups of
    pinned vertices.

    Connector k has id ``base_n + k`` with edges from every vertex of group
    k and to every vertex of group k + 1.
    """
    graph: DirectedGraph
    base_n: int
    groups: Tuple[Tuple[int, ...], ...]

    @classmethod
    def build(cls, inst: UpeInstance, groups: Optional[List[Tuple[int, ...]]] = None) -> "AuxGraph":
        if groups is None:
            groups = pinned_groups(inst)
        n = inst.n
        edges: List[Edge] = list(inst.graph.edges)
        for k in range(len(groups) - 1):
            x = n + k
            edges.extend((v, x) for v in groups[k])
            edges.extend((x, w) for w in groups[k + 1])
        return cls(DirectedGraph(n + max(len(groups) - 1, 0), tuple(edges)), n, tuple(groups))

    @property
    def connector_count(self) -> int:
        return self.graph.n - self.base_n

    def is_acyclic(self) -> bool:
        return self.graph.is_acyclic()

    def cycle(self) -> Optional[List[Edge]]:
        """A directed cycle, or None"""
        try:
            return [(u, v) for u, v in nx.find_cycle(self.graph.to_networkx())]
        except nx.NetworkXNoCycle:
            return None


def check_condition1(inst: UpeInstance, groups: Optional[List[Tuple[int, ...]]] = None) -> bool:
    """
    Pins never decrease along directed paths.

    Raises:
        PreconditionError: the instance has H-edges
    """
    _require_edgeless(inst)
    aux = AuxGraph.build(inst, groups)
    ok = aux.is_acyclic()
    if not ok:
        logger.debug(f"condition 1 fails, auxiliary cycle {aux.cycle()}")
    return ok


def condition2_violation(
    inst: UpeInstance,
    idx: DominanceIndex,
    groups: Optional[List[Tuple[int, ...]]] = None,
) -> Optional[Tuple[int, int]]:
    """First consecutive same-y pair (a, b), a left of b in the pins but not in G"""
    _require_edgeless(inst)
    for group in groups if groups is not None else pinned_groups(inst):
        for a, b in zip(group, group[1:]):
            if not idx.is_left_of(a, b):
                return a, b
    return None


def check_condition2_fixed(inst: UpeInstance, idx: DominanceIndex) -> bool:
    """
    Same-y pins are ordered as the embedding orders their vertices.

    Raises:
        PreconditionError: the instance has H-edges
    """
    violation = condition2_violation(inst, idx)
    if violation is not None:
        logger.debug(f"condition 2 fails at {violation}")
    return violation is None


def pinned_floor(inst: UpeInstance) -> List[Optional[Fraction]]:
    """
    Highest pinned y among the strict ancestors of every vertex (None when
    no ancestor is pinned).
    """
    g = inst.graph
    pos = inst.drawing.vertex_pos
    floor: List[Optional[Fraction]] = [None] * g.n
    for v in g.topological_order() or []:
        best = floor[v]
        for u in g.predecessors(v):
            for y in (floor[u], pos[u].y if u in inst.partial_vertices else None):
                if y is not None and (best is None or y > best):
                    best = y
        floor[v] = best
    return floor
