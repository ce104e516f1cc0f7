"""
Reductions between fully pinned UPE instances and ordered level graphs.

A fully pinned instance with edgeless H is an ordered level graph in
disguise: the levels are the distinct y-coordinates in increasing order and
each level is ordered by x. The converse map pins v at (xi(v), level(v)).
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..core.geometry import Point
from ..core.graph import DirectedGraph, Edge
from ..core.model import PartialDrawing, UpeInstance
from ..exceptions import PreconditionError, PreconditionReason
from ..logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class OrderedLevelGraph:
    """
    A directed graph with a level per vertex and a left-to-right order per level.

    Attributes:
        graph: The directed graph
        level: Level of every vertex, levels start at 1
        within_level: Vertices of every level from left to right
    """
    graph: DirectedGraph
    level: Tuple[int, ...]
    within_level: Mapping[int, Tuple[int, ...]]

    def xi(self, v: int) -> int:
        """1-based position of v within its level"""
        return self.within_level[self.level[v]].index(v) + 1

    @property
    def level_count(self) -> int:
        return max(self.level, default=0)

    def structure_problem(self) -> Optional[str]:
        """Describe why levels or orders are malformed, or None"""
        if len(self.level) != self.graph.n:
            return "every vertex needs a level"
        if any(lv < 1 for lv in self.level):
            return "levels start at 1"
        members: Dict[int, List[int]] = {}
        for v, lv in enumerate(self.level):
            members.setdefault(lv, []).append(v)
        for lv, vs in members.items():
            if sorted(self.within_level.get(lv, ())) != sorted(vs):
                return f"order of level {lv} is not a permutation of its vertices"
        for lv in self.within_level:
            if lv not in members and self.within_level[lv]:
                return f"order given for empty level {lv}"
        return None

    def downward_edges(self) -> List[Edge]:
        """Edges that do not go to a strictly higher level"""
        return [(u, v) for u, v in self.graph.edges if self.level[u] >= self.level[v]]

    def max_level_width(self) -> int:
        return max((len(vs) for vs in self.within_level.values()), default=0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "level": {str(v): lv for v, lv in enumerate(self.level)},
            "xi": {str(lv): list(vs) for lv, vs in sorted(self.within_level.items())},
        }

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "OrderedLevelGraph":
        n = int(doc["n"])
        graph = DirectedGraph.of(n, doc.get("edges", []))
        raw_level = {int(k): int(v) for k, v in doc["level"].items()}
        level = tuple(raw_level.get(v, 0) for v in range(n))
        if "xi" in doc:
            within = {int(k): tuple(int(v) for v in vs) for k, vs in doc["xi"].items()}
        else:
            within = {}
            for v in range(n):
                within.setdefault(level[v], ())
                within[level[v]] += (v,)
        return cls(graph, level, within)


def upe_to_olp(inst: UpeInstance) -> OrderedLevelGraph:
    """
    Read an ordered level graph off a fully pinned instance with edgeless H.

    Raises:
        PreconditionError: H has edges, some vertex is unpinned, or an
            embedding is prescribed
    """
    if inst.partial_edges:
        raise PreconditionError(
            "ordered level graphs need an edgeless H",
            engine_name="olp",
            engine_type="transforms",
            reason=PreconditionReason.H_HAS_EDGES,
        )
    if not inst.fully_pinned:
        raise PreconditionError(
            "ordered level graphs need every vertex pinned",
            engine_name="olp",
            engine_type="transforms",
            reason=PreconditionReason.NOT_FULLY_PINNED,
        )
    if inst.embedding is not None:
        raise PreconditionError(
            "ordered level planarity has no fixed embedding",
            engine_name="olp",
            engine_type="transforms",
            reason=PreconditionReason.EMBEDDING_FORBIDDEN,
        )

    pos = inst.drawing.vertex_pos
    ys = sorted({p.y for p in pos.values()})
    rank = {y: i + 1 for i, y in enumerate(ys)}
    level = tuple(rank[pos[v].y] for v in range(inst.n))
    within: Dict[int, Tuple[int, ...]] = {}
    for v in sorted(range(inst.n), key=lambda v: (pos[v].y, pos[v].x)):
        within[level[v]] = within.get(level[v], ()) + (v,)
    olg = OrderedLevelGraph(inst.graph, level, within)
    logger.debug(f"upe->olp: {inst.n} vertices on {len(ys)} levels")
    return olg


def olp_to_upe(olg: OrderedLevelGraph) -> UpeInstance:
    """
    Pin every vertex at (xi(v), level(v)) with edgeless H.

    Raises:
        PreconditionError: levels or orders are malformed
    """
    problem = olg.structure_problem()
    if problem is not None:
        raise PreconditionError(
            f"malformed ordered level graph: {problem}",
            engine_name="olp",
            engine_type="transforms",
            reason=PreconditionReason.NOT_LEVELED,
        )
    pos = {}
    for lv, vs in olg.within_level.items():
        for i, v in enumerate(vs, start=1):
            pos[v] = Point.of(i, lv)
    return UpeInstance(
        graph=olg.graph,
        partial_vertices=frozenset(range(olg.graph.n)),
        partial_edges=frozenset(),
        drawing=PartialDrawing(pos, {}),
    )
