"""
Instance model: partial drawings, full drawings, UPE instances and decisions.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from .geometry import Point
from .graph import DirectedGraph, Edge, UpwardEmbedding

Route = Tuple[Point, ...]


@dataclass(frozen=True)
class PartialDrawing:
    """Positions of the H-vertices and polyline routes of the H-edges"""
    vertex_pos: Mapping[int, Point] = field(default_factory=dict)
    edge_routes: Mapping[Edge, Route] = field(default_factory=dict)

    @property
    def segment_count(self) -> int:
        return sum(len(r) - 1 for r in self.edge_routes.values())


@dataclass(frozen=True)
class FullDrawing:
    """Positions and routes for every vertex and edge of G"""
    vertex_pos: Mapping[int, Point]
    edge_routes: Mapping[Edge, Route]

    def scaled(self, factor) -> "FullDrawing":
        factor = Fraction(factor)
        return FullDrawing(
            {v: p.scaled(factor) for v, p in self.vertex_pos.items()},
            {e: tuple(p.scaled(factor) for p in r) for e, r in self.edge_routes.items()},
        )


@dataclass(frozen=True)
class UpeInstance:
    """
    The triple (G, H, partial drawing) plus an optional upward embedding.

    ``partial_vertices`` and ``partial_edges`` form H; ``drawing`` fixes
    their geometry. When ``embedding`` is set the instance asks for an
    extension realizing exactly that embedding.
    """
    graph: DirectedGraph
    partial_vertices: FrozenSet[int] = frozenset()
    partial_edges: FrozenSet[Edge] = frozenset()
    drawing: PartialDrawing = field(default_factory=PartialDrawing)
    embedding: Optional[UpwardEmbedding] = None

    @classmethod
    def build(
        cls,
        n: int,
        edges: Sequence[Sequence[int]],
        positions: Optional[Mapping[int, Tuple[Any, Any]]] = None,
        routes: Optional[Mapping[Edge, Sequence[Tuple[Any, Any]]]] = None,
        embedding: Optional[UpwardEmbedding] = None,
    ) -> "UpeInstance":
        """
        Convenience constructor.

        ``positions`` maps pinned vertices to (x, y) pairs of ints, strings or
        Fractions. H-edges are the keys of ``routes``; a route may be given
        as its full point list or as an empty list for a straight segment.
        """
        graph = DirectedGraph.of(n, edges)
        pos = {int(v): Point.of(x, y) for v, (x, y) in (positions or {}).items()}
        edge_routes: Dict[Edge, Route] = {}
        for (u, v), pts in (routes or {}).items():
            if pts:
                edge_routes[(u, v)] = tuple(Point.of(x, y) for x, y in pts)
            else:
                edge_routes[(u, v)] = (pos[u], pos[v])
        return cls(
            graph=graph,
            partial_vertices=frozenset(pos),
            partial_edges=frozenset(edge_routes),
            drawing=PartialDrawing(pos, edge_routes),
            embedding=embedding,
        )

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    @property
    def size(self) -> int:
        return self.graph.vertex_count + len(self.graph.edges) + self.drawing.segment_count

    def pos(self, v: int) -> Optional[Point]:
        return self.drawing.vertex_pos.get(v)

    def is_pinned(self, v: int) -> bool:
        return v in self.partial_vertices

    @property
    def has_partial_edges(self) -> bool:
        return bool(self.partial_edges)

    @property
    def fully_pinned(self) -> bool:
        return len(self.partial_vertices) == self.graph.vertex_count

    def pinned_ys_distinct(self) -> bool:
        ys = [p.y for p in self.drawing.vertex_pos.values()]
        return len(ys) == len(set(ys))

    def with_embedding(self, embedding: Optional[UpwardEmbedding]) -> "UpeInstance":
        return replace(self, embedding=embedding)

    def without_embedding(self) -> "UpeInstance":
        return replace(self, embedding=None)

    def restricted_pins(self, keep: Sequence[int]) -> "UpeInstance":
        """Same graph with H reduced to the given vertices (and no H-edges)"""
        keep_set = frozenset(v for v in keep if v in self.partial_vertices)
        return replace(
            self,
            partial_vertices=keep_set,
            partial_edges=frozenset(),
            drawing=PartialDrawing({v: self.drawing.vertex_pos[v] for v in keep_set}, {}),
        )


def instance_size(inst: UpeInstance) -> int:
    """|V(G)| + |E(G)| + the number of route segments in the partial drawing"""
    return inst.size


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_instance"""
    ok: bool
    size: int
    reason: Any = None
    element: Any = None
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        element = self.element
        if isinstance(element, tuple):
            element = [e if isinstance(e, int) else str(e) for e in element]
        elif not isinstance(element, (int, type(None))):
            element = str(element)
        return {
            "ok": self.ok,
            "size": self.size,
            "reason": self.reason.name if self.reason is not None else None,
            "element": element,
            "message": self.message,
        }


@dataclass
class Decision:
    """
    Answer of an engine.

    ``drawing`` holds a geometric witness when the engine produces one,
    ``embedding`` a witness embedding (variable-embedding st engine),
    ``certificate`` the oracle's passing certificate and ``structure`` a
    JSON-ready structural witness (path/cycle decomposition trees, level
    sweep orders).
    """
    answer: bool
    engine: str
    drawing: Optional[FullDrawing] = None
    embedding: Optional[UpwardEmbedding] = None
    certificate: Any = None
    structure: Any = None
    notes: List[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        return "yes" if self.answer else "no"

    def __bool__(self) -> bool:
        return self.answer
