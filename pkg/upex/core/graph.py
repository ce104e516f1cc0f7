"""
Directed graphs and upward embeddings.

Vertices are dense integers ``0..n-1``; edges are ``(tail, head)`` tuples.
An UpwardEmbedding stores, per vertex, the left-to-right list of adjacent
successors ``succ[v]`` and predecessors ``pred[v]``. Reading ``succ[v]``
followed by ``reversed(pred[v])`` gives the clockwise rotation at ``v``.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import InstanceValidationError, ValidationReason

VertexId = int
Edge = Tuple[VertexId, VertexId]


@dataclass(frozen=True)
class DirectedGraph:
    """
    Simple directed graph on vertices ``0..vertex_count-1``.

    Treated as immutable; adjacency lists are built lazily and cached.
    """
    vertex_count: int
    edges: Tuple[Edge, ...]

    @classmethod
    def of(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "DirectedGraph":
        return cls(int(vertex_count), tuple((int(u), int(v)) for u, v in edges))

    @property
    def n(self) -> int:
        return self.vertex_count

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def _out(self) -> Tuple[Tuple[int, ...], ...]:
        out: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            out[u].append(v)
        return tuple(tuple(x) for x in out)

    @cached_property
    def _in(self) -> Tuple[Tuple[int, ...], ...]:
        inc: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            inc[v].append(u)
        return tuple(tuple(x) for x in inc)

    def successors(self, v: int) -> Tuple[int, ...]:
        return self._out[v]

    def predecessors(self, v: int) -> Tuple[int, ...]:
        return self._in[v]

    def degree(self, v: int) -> int:
        return len(self._out[v]) + len(self._in[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_set

    def sources(self) -> List[int]:
        return [v for v in range(self.vertex_count) if not self._in[v]]

    def sinks(self) -> List[int]:
        return [v for v in range(self.vertex_count) if not self._out[v]]

    def topological_order(self) -> Optional[List[int]]:
        """Kahn order with smallest ids first, or None when the graph has a cycle"""
        indeg = [len(p) for p in self._in]
        queue = deque(v for v in range(self.vertex_count) if indeg[v] == 0)
        order = []
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in self._out[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return order if len(order) == self.vertex_count else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def undirected(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def reachable_from(self, v: int) -> set:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self._out[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


@dataclass(frozen=True)
class UpwardEmbedding:
    """Left-to-right successor and predecessor lists for every vertex"""
    succ: Tuple[Tuple[int, ...], ...]
    pred: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_lists(
        cls,
        vertex_count: int,
        succ: Mapping[int, Sequence[int]],
        pred: Mapping[int, Sequence[int]],
    ) -> "UpwardEmbedding":
        return cls(
            tuple(tuple(int(w) for w in succ.get(v, ())) for v in range(vertex_count)),
            tuple(tuple(int(w) for w in pred.get(v, ())) for v in range(vertex_count)),
        )

    @property
    def vertex_count(self) -> int:
        return len(self.succ)

    def rotation(self, v: int) -> List[Tuple[int, bool]]:
        """Clockwise neighbours of v as (neighbour, is_outgoing) pairs"""
        return [(w, True) for w in self.succ[v]] + [(w, False) for w in reversed(self.pred[v])]

    def mirrored(self) -> "UpwardEmbedding":
        """The embedding of the horizontally reflected drawing"""
        return UpwardEmbedding(
            tuple(tuple(reversed(s)) for s in self.succ),
            tuple(tuple(reversed(p)) for p in self.pred),
        )

    def mismatch(self, graph: DirectedGraph) -> Optional[str]:
        """Describe the first disagreement with graph's edge set, or None"""
        if self.vertex_count != graph.vertex_count:
            return f"embedding has {self.vertex_count} vertices, graph has {graph.vertex_count}"
        m = len(graph.edges)
        outs = {(v, w) for v, s in enumerate(self.succ) for w in s}
        ins = {(u, v) for v, p in enumerate(self.pred) for u in p}
        if (
            len(outs) == m == len(ins)
            and sum(map(len, self.succ)) == m == sum(map(len, self.pred))
            and outs == graph.edge_set == ins
        ):
            return None
        for v in range(graph.vertex_count):
            if sorted(self.succ[v]) != sorted(graph.successors(v)):
                return f"succ[{v}] does not list the successors of {v}"
            if sorted(self.pred[v]) != sorted(graph.predecessors(v)):
                return f"pred[{v}] does not list the predecessors of {v}"
            if len(set(self.succ[v])) != len(self.succ[v]) or len(set(self.pred[v])) != len(self.pred[v]):
                return f"duplicate entry at vertex {v}"
        return None

    def validate(
        self,
        graph: DirectedGraph,
        poles: Optional[Tuple[int, int]] = None,
        planar: bool = True,
        engine_type: str = "core",
    ) -> None:
        """
        Check that the lists are an upward planar embedding of ``graph``.

        Args:
            graph: The graph the lists belong to
            poles: ``(s, t)`` of an st-graph; adds the outer-face condition
            planar: Skip the rotation planarity test when False
            engine_type: Recorded on the raised error

        Raises:
            InstanceValidationError: EMBEDDING_MISMATCH when a list does not
                name exactly the neighbours, EMBEDDING_NOT_PLANAR when the
                rotation system fails the face count
        """
        problem = self.mismatch(graph)
        if problem is not None:
            raise InstanceValidationError(
                f"embedding does not match the graph: {problem}",
                engine_type=engine_type,
                reason=ValidationReason.EMBEDDING_MISMATCH,
            )
        if planar and not rotation_is_planar(graph, self, poles=poles):
            raise InstanceValidationError(
                "embedding is not an upward planar embedding"
                + (" of the st-graph" if poles is not None else ""),
                engine_type=engine_type,
                reason=ValidationReason.EMBEDDING_NOT_PLANAR,
            )

    def to_dict(self) -> Dict[str, Dict[str, List[int]]]:
        return {
            "succ": {str(v): list(s) for v, s in enumerate(self.succ) if s},
            "pred": {str(v): list(p) for v, p in enumerate(self.pred) if p},
        }


def rotation_faces(graph: DirectedGraph, embedding: UpwardEmbedding) -> Dict[Edge, int]:
    """
    Trace the faces of the rotation system.

    Returns a map from dart ``(u, v)`` (the edge between u and v traversed
    from u to v) to a face index. After arriving at ``v`` from ``u`` the
    walk leaves along the clockwise successor of ``u`` in the rotation at v.
    """
    position: Dict[Edge, int] = {}
    rotations: List[List[int]] = []
    for v in range(graph.vertex_count):
        rot = [w for w, _ in embedding.rotation(v)]
        rotations.append(rot)
        for i, w in enumerate(rot):
            position[(v, w)] = i

    face_of: Dict[Edge, int] = {}
    face = 0
    for u, v in graph.edges:
        for dart in ((u, v), (v, u)):
            if dart in face_of:
                continue
            a, b = dart
            while (a, b) not in face_of:
                face_of[(a, b)] = face
                rot = rotations[b]
                c = rot[(position[(b, a)] + 1) % len(rot)]
                a, b = b, c
            face += 1
    return face_of


def rotation_is_planar(
    graph: DirectedGraph,
    embedding: UpwardEmbedding,
    poles: Optional[Tuple[int, int]] = None,
) -> bool:
    """
    Euler-characteristic planarity test of the rotation system.

    Every connected component must satisfy V - E + F = 2. With ``poles``
    ``(s, t)`` the bottom angle of s and the top angle of t must also lie
    on a common face, which makes the lists an upward embedding of an
    st-graph.
    """
    face_of = rotation_faces(graph, embedding)
    if poles is not None:
        s, t = poles
        if not embedding.succ[s] or not embedding.pred[t]:
            return graph.vertex_count == 1
        # st-graphs are connected
        face_count = len(set(face_of.values()))
        if graph.vertex_count - len(graph.edges) + face_count != 2:
            return False
        return face_of[(s, embedding.succ[s][0])] == face_of[(embedding.pred[t][0], t)]

    component_of: Dict[int, int] = {}
    sizes: List[int] = []
    for index, comp in enumerate(nx.connected_components(graph.undirected())):
        sizes.append(len(comp))
        for v in comp:
            component_of[v] = index
    edge_counts = [0] * len(sizes)
    faces: List[set] = [set() for _ in sizes]
    for u, v in graph.edges:
        c = component_of[u]
        edge_counts[c] += 1
        faces[c].add(face_of[(u, v)])
        faces[c].add(face_of[(v, u)])
    for c, size in enumerate(sizes):
        if edge_counts[c] and size - edge_counts[c] + len(faces[c]) != 2:
            return False
    return True
