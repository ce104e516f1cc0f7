"""
Dominance coordinates of embedded st-graphs.

For a reduced planar st-graph (no transitive edges) two depth-first
numberings give a dominance drawing: a monotone path u to v exists iff
v dominates u in both coordinates. The same coordinates separate the
incomparable pairs, so the relation of any two vertices (successor,
predecessor, left or right) is answered by two integer comparisons.
Transitive edges do not change these relations, so the index is built on
the transitive reduction.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, List, Sequence, Tuple

from ..core.graph import DirectedGraph, Edge, UpwardEmbedding
from ..exceptions import PreconditionError, PreconditionReason
from ..logging import get_logger
from .stgraph import StGraph

logger = get_logger(__name__)


class Relation(IntEnum):
    """Position of v relative to u"""
    SUCCESSOR = 0     # directed path u to v
    PREDECESSOR = 1   # directed path v to u
    LEFT = 2          # v lies to the left of every u-t and s-u path
    RIGHT = 3


def _require_embedding(st: StGraph) -> UpwardEmbedding:
    if st.embedding is None:
        raise PreconditionError(
            "dominance coordinates need an upward embedding",
            engine_type="stgraph",
            reason=PreconditionReason.EMBEDDING_REQUIRED,
        )
    return st.embedding


def transitive_edges(st: StGraph) -> List[Edge]:
    """
    Edges (u, v) that are transitive in the embedded st-graph.

    An edge is transitive iff the boundary of one of its two incident faces
    is a monotone path from u to v, which is the case iff v is not the last
    successor of u and u is not the last predecessor of v (face on the
    right), or v is not the first successor and u is not the first
    predecessor (face on the left).
    """
    emb = _require_embedding(st)
    out_rank = {(v, w): i for v, ws in enumerate(emb.succ) for i, w in enumerate(ws)}
    in_rank = {(u, v): i for v, us in enumerate(emb.pred) for i, u in enumerate(us)}
    found = []
    for u, v in st.graph.edges:
        i, j = out_rank[(u, v)], in_rank[(u, v)]
        last_out, last_in = len(emb.succ[u]) - 1, len(emb.pred[v]) - 1
        if (i < last_out and j < last_in) or (i > 0 and j > 0):
            found.append((u, v))
    return found


def transitive_reduction(st: StGraph) -> StGraph:
    """The embedded st-graph without its transitive edges"""
    emb = _require_embedding(st)
    drop = set(transitive_edges(st))
    if not drop:
        return st
    graph = DirectedGraph(st.n, tuple(e for e in st.graph.edges if e not in drop))
    embedding = UpwardEmbedding(
        tuple(tuple(w for w in emb.succ[v] if (v, w) not in drop) for v in range(st.n)),
        tuple(tuple(u for u in emb.pred[v] if (u, v) not in drop) for v in range(st.n)),
    )
    logger.debug(f"removed {len(drop)} transitive edges")
    return StGraph(graph, st.s, st.t, embedding)


def _reverse_postorder(succ: Sequence[Sequence[int]], root: int, rightmost_first: bool) -> List[int]:
    n = len(succ)
    number = [0] * n
    seen = [False] * n
    counter = n
    seen[root] = True
    stack: List[Tuple[int, int]] = [(root, 0)]
    while stack:
        v, i = stack[-1]
        children = succ[v]
        if i == len(children):
            stack.pop()
            counter -= 1
            number[v] = counter
            continue
        stack[-1] = (v, i + 1)
        w = children[len(children) - 1 - i] if rightmost_first else children[i]
        if not seen[w]:
            seen[w] = True
            stack.append((w, 0))
    return number


@dataclass(frozen=True)
class DominanceIndex:
    """
    Dominance coordinates of a reduced embedded st-graph.

    Attributes:
        dom_x: Reverse postorder of a DFS from s taking rightmost edges first
        dom_y: Reverse postorder of a DFS from s taking leftmost edges first
    """
    dom_x: Tuple[int, ...]
    dom_y: Tuple[int, ...]

    @classmethod
    def build(cls, st: StGraph) -> "DominanceIndex":
        reduced = transitive_reduction(st)
        succ = reduced.embedding.succ
        return cls(
            tuple(_reverse_postorder(succ, st.s, rightmost_first=True)),
            tuple(_reverse_postorder(succ, st.s, rightmost_first=False)),
        )

    def relation(self, u: int, v: int) -> Relation:
        """Relation of v with respect to u (u != v)"""
        xu, yu, xv, yv = self.dom_x[u], self.dom_y[u], self.dom_x[v], self.dom_y[v]
        if xv > xu and yv > yu:
            return Relation.SUCCESSOR
        if xv < xu and yv < yu:
            return Relation.PREDECESSOR
        if xv < xu:
            return Relation.LEFT
        return Relation.RIGHT

    def is_left_of(self, u: int, v: int) -> bool:
        """True iff u lies to the left of v"""
        return self.relation(v, u) == Relation.LEFT

    def to_dict(self) -> Dict[str, List[int]]:
        return {"dom_x": list(self.dom_x), "dom_y": list(self.dom_y)}


def build_dominance_index(st: StGraph) -> DominanceIndex:
    """Dominance coordinates of an embedded st-graph (reduced internally)"""
    return DominanceIndex.build(st)
