"""
Validated st-graphs and their default upward embedding.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional

import networkx as nx

from ..core.graph import DirectedGraph, UpwardEmbedding, rotation_is_planar
from ..exceptions import PreconditionError, PreconditionReason, UpexError
from ..logging import get_logger

logger = get_logger(__name__)


def _not_st(message: str) -> PreconditionError:
    return PreconditionError(message, engine_type="stgraph", reason=PreconditionReason.NOT_ST_GRAPH)


@dataclass(frozen=True)
class StGraph:
    """
    A DAG with a single source ``s`` and a single sink ``t``.

    ``embedding`` is the upward embedding the graph was validated with, if
    any.
    """
    graph: DirectedGraph
    s: int
    t: int
    embedding: Optional[UpwardEmbedding] = None

    @property
    def n(self) -> int:
        return self.graph.n

    @classmethod
    def build(
        cls,
        graph: DirectedGraph,
        embedding: Optional[UpwardEmbedding] = None,
        check_embedding: bool = True,
    ) -> "StGraph":
        """
        Validate ``graph`` as an upward planar st-graph.

        With an embedding, the lists must match the edges and (unless
        ``check_embedding`` is off) form a planar rotation system with the
        bottom of s and the top of t on one face. Without one, G plus the
        edge (s, t) must be planar.

        Raises:
            PreconditionError: not a single-source single-sink DAG, or not
                planar
            InstanceValidationError: the embedding does not fit the graph
        """
        sources, sinks = graph.sources(), graph.sinks()
        if len(sources) != 1 or len(sinks) != 1:
            raise _not_st(f"expected one source and one sink, found {len(sources)} and {len(sinks)}")
        if not graph.is_acyclic():
            raise _not_st("graph has a directed cycle")
        s, t = sources[0], sinks[0]

        if embedding is not None:
            embedding.validate(graph, poles=(s, t), planar=check_embedding, engine_type="stgraph")
        elif graph.n > 1:
            closed = graph.undirected()
            closed.add_edge(s, t)
            planar, _ = nx.check_planarity(closed)
            if not planar:
                raise _not_st("graph is not upward planar (G + (s, t) is not planar)")
        return cls(graph, s, t, embedding)

    def with_default_embedding(self) -> "StGraph":
        if self.embedding is not None:
            return self
        return StGraph(self.graph, self.s, self.t, st_embedding(self.graph, self.s, self.t))


def _rotate_to(order: List[int], first: int) -> List[int]:
    i = order.index(first)
    return order[i:] + order[:i]


def st_embedding(graph: DirectedGraph, s: int, t: int) -> UpwardEmbedding:
    """
    Compute an upward embedding of a planar st-graph.

    A planar embedding of G + (s, t) is computed with networkx; every
    planar embedding of an st-graph with s and t on a common face is
    upward, so the clockwise rotations only need to be cut into successor
    and predecessor lists. An existing edge (s, t) ends up as the rightmost
    edge at both poles.
    """
    n = graph.n
    if n == 1:
        return UpwardEmbedding.from_lists(1, {}, {})
    real_st = graph.has_edge(s, t)
    closed = graph.undirected()
    closed.add_edge(s, t)
    planar, embedding = nx.check_planarity(closed)
    if not planar:
        raise _not_st("graph is not upward planar (G + (s, t) is not planar)")

    succ: Dict[int, List[int]] = {}
    pred: Dict[int, List[int]] = {}
    for v in range(n):
        cw = list(embedding.neighbors_cw_order(v))
        outs = set(graph.successors(v))
        if v == s:
            # the closing edge bounds the outer face
            rot = _rotate_to(cw, t)
            succ[v] = rot[1:] + [t] if real_st else rot[1:]
            pred[v] = []
            continue
        if v == t:
            rot = _rotate_to(cw, s)
            ins = rot[1:]
            pred[v] = list(reversed(ins)) + [s] if real_st else list(reversed(ins))
            succ[v] = []
            continue
        start = None
        for i, w in enumerate(cw):
            if w in outs and cw[i - 1] not in outs:
                start = i
                break
        if start is None:
            raise UpexError(
                f"rotation at vertex {v} is not bimodal",
                engine_name="st-embedding",
                engine_type="stgraph",
            )
        rot = cw[start:] + cw[:start]
        k = len(outs)
        if set(rot[:k]) != outs:
            raise UpexError(
                f"rotation at vertex {v} is not bimodal",
                engine_name="st-embedding",
                engine_type="stgraph",
            )
        succ[v] = rot[:k]
        pred[v] = list(reversed(rot[k:]))

    result = UpwardEmbedding.from_lists(n, succ, pred)
    if not rotation_is_planar(graph, result, poles=(s, t)):
        raise UpexError(
            "derived rotation system is not an upward embedding",
            engine_name="st-embedding",
            engine_type="stgraph",
        )
    logger.debug(f"computed an upward embedding for an st-graph with {n} vertices")
    return result

