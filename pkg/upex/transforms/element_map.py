"""
Element maps between an instance and its transformed counterpart.

Transforms keep the ids of the input vertices and append new vertices after
them. A new vertex either subdivides an input edge (a bend or a crossing
point of the edge elimination) or is the upper half of a split vertex.
Each input edge is represented in the output by a directed path.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..core.geometry import Point, route_x_at
from ..core.graph import Edge, UpwardEmbedding
from ..core.model import FullDrawing, Route, UpeInstance
from ..core.verify import drawing_problem
from ..exceptions import LiftReason, WitnessLiftError
from ..logging import get_logger

logger = get_logger(__name__)


class OriginKind(Enum):
    """How a new vertex came into being"""
    BEND = "bend"
    CROSSING = "crossing"
    SPLIT = "split"


@dataclass(frozen=True)
class Origin:
    """
    Where a new vertex comes from.

    ``edge`` and ``segment`` locate a subdividing vertex on the path that
    replaces an input edge (``segment`` is its position on that path).
    ``vertex`` names the input vertex a split partner was taken from.
    """
    kind: OriginKind
    edge: Optional[Edge] = None
    segment: int = 0
    vertex: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "edge": list(self.edge) if self.edge is not None else None,
            "segment": self.segment,
            "vertex": self.vertex,
        }

    @classmethod
    def from_dict(cls, raw: Mapping[str, Any]) -> "Origin":
        edge = raw.get("edge")
        return cls(
            kind=OriginKind(raw["kind"]),
            edge=(int(edge[0]), int(edge[1])) if edge is not None else None,
            segment=int(raw.get("segment", 0)),
            vertex=None if raw.get("vertex") is None else int(raw["vertex"]),
        )


@dataclass
class ElementMap:
    """
    Correspondence between the elements of a source and a target instance.

    Attributes:
        source_n: Vertex count of the source graph
        target_n: Vertex count of the target graph
        paths: Target path of every source edge that is not kept as is
        origins: Origin of every target vertex with id >= source_n
    """
    source_n: int
    target_n: int
    paths: Dict[Edge, Tuple[int, ...]] = field(default_factory=dict)
    origins: Dict[int, Origin] = field(default_factory=dict)

    @classmethod
    def identity(cls, n: int) -> "ElementMap":
        return cls(source_n=n, target_n=n)

    @property
    def is_identity(self) -> bool:
        return self.source_n == self.target_n and not self.paths

    def path(self, e: Edge) -> Tuple[int, ...]:
        """Target vertices along the image of source edge ``e``"""
        return self.paths.get(e, e)

    @property
    def partners(self) -> Dict[int, int]:
        """Source vertex -> the split partner that carries its outgoing edges"""
        return {
            o.vertex: c for c, o in self.origins.items()
            if o.kind is OriginKind.SPLIT and o.vertex is not None
        }

    def source_vertex(self, c: int) -> Optional[int]:
        """Source vertex that target vertex ``c`` stands for, or None for path vertices"""
        if c < self.source_n:
            return c
        origin = self.origins.get(c)
        if origin is None:
            raise WitnessLiftError(
                f"target vertex {c} has no recorded origin",
                engine_type="transforms",
                reason=LiftReason.MISSING_ORIGIN,
                element=c,
            )
        return origin.vertex

    def compose(self, second: "ElementMap") -> "ElementMap":
        """
        Chain this map (A -> B) with ``second`` (B -> C) into a map A -> C.
        """
        if second.source_n != self.target_n:
            raise ValueError("maps do not chain: vertex counts differ")

        def image(b_path: Tuple[int, ...]) -> Tuple[int, ...]:
            out: List[int] = []
            for hop in zip(b_path, b_path[1:]):
                sub = second.path(hop)
                if out and out[-1] == sub[0]:
                    out.extend(sub[1:])
                else:
                    out.extend(sub)
            return tuple(out)

        changed: Dict[Edge, Tuple[int, ...]] = {}
        for e, b_path in self.paths.items():
            changed[e] = image(b_path)
        # every hop of a replacing path touches a new vertex, so an edge
        # between two old ids is a source edge kept by the first map
        for (b1, b2), c_path in second.paths.items():
            if b1 < self.source_n and b2 < self.source_n:
                changed[(b1, b2)] = c_path

        origins: Dict[int, Origin] = {}
        for e, c_path in changed.items():
            for k, c in enumerate(c_path[1:-1], start=1):
                kind = (second.origins.get(c) or self.origins[c]).kind
                origins[c] = Origin(kind, edge=e, segment=k)
        for c, o in second.origins.items():
            if o.kind is OriginKind.SPLIT and o.vertex is not None and o.vertex < self.source_n:
                origins[c] = o

        composed = ElementMap(self.source_n, second.target_n, changed, origins)
        logger.debug(
            f"composed element map: {self.source_n} -> {second.target_n} vertices, "
            f"{len(changed)} replaced edges"
        )
        return composed

    def contract_embedding(self, embedding: UpwardEmbedding) -> UpwardEmbedding:
        """Map an embedding of the target graph back onto the source graph"""
        first_hop: Dict[Edge, int] = {}
        last_hop: Dict[Edge, int] = {}
        for (u, v), p in self.paths.items():
            first_hop[(p[0], p[1])] = v
            last_hop[(p[-2], p[-1])] = u

        partners = self.partners
        succ: Dict[int, List[int]] = {}
        pred: Dict[int, List[int]] = {}
        for v in range(self.source_n):
            out_vertex = partners.get(v, v)
            succ[v] = [first_hop.get((out_vertex, w), w) for w in embedding.succ[out_vertex]]
            pred[v] = [last_hop.get((w, v), w) for w in embedding.pred[v]]
        return UpwardEmbedding.from_lists(self.source_n, succ, pred)

    def lift_drawing(
        self,
        drawing: FullDrawing,
        source: UpeInstance,
        verify: bool = True,
    ) -> FullDrawing:
        """
        Map a drawing of the target instance to one of ``source``.

        Routes of replacing paths are concatenated; a split vertex goes back
        to the midpoint of its two halves. H-edges of the source keep their
        partial-drawing route verbatim. With ``verify`` the result is checked
        and a WitnessLiftError raised when it is not an extension.
        """
        partners = self.partners
        positions: Dict[int, Point] = {}
        for v in range(self.source_n):
            if v in partners:
                low, high = drawing.vertex_pos[v], drawing.vertex_pos[partners[v]]
                positions[v] = Point(low.x, (low.y + high.y) / 2)
            else:
                positions[v] = drawing.vertex_pos[v]

        routes: Dict[Edge, Route] = {}
        for e in source.graph.edges:
            if e in source.partial_edges:
                routes[e] = tuple(source.drawing.edge_routes[e])
                continue
            p = self.path(e)
            pts: List[Point] = []
            for hop in zip(p, p[1:]):
                piece = drawing.edge_routes[hop]
                if pts and pts[-1] == piece[0]:
                    pts.extend(piece[1:])
                else:
                    pts.extend(piece)
            pts[0] = positions[e[0]]
            pts[-1] = positions[e[1]]
            routes[e] = tuple(pts)

        lifted = FullDrawing(positions, routes)
        if verify:
            problem = drawing_problem(source, lifted)
            if problem is not None:
                raise WitnessLiftError(
                    f"lifted drawing is not an extension ({problem.name})",
                    engine_type="transforms",
                    reason=LiftReason.ROUTE_CONFLICT,
                    problem=problem,
                )
        return lifted

    def push_drawing(self, drawing: FullDrawing, target: UpeInstance) -> FullDrawing:
        """
        Map a drawing of the source instance to one of ``target``.

        Only subdividing vertices are supported: each source route is cut at
        the pinned positions of the vertices placed on it.
        """
        if self.partners:
            raise WitnessLiftError(
                "drawings cannot be pushed through split vertices",
                engine_type="transforms",
                reason=LiftReason.SPLIT_VERTEX,
            )
        positions: Dict[int, Point] = {}
        for c in range(self.target_n):
            positions[c] = drawing.vertex_pos[c] if c < self.source_n else target.drawing.vertex_pos[c]

        routes: Dict[Edge, Route] = {}
        for e, r in drawing.edge_routes.items():
            p = self.path(e)
            if len(p) == 2:
                routes[e] = tuple(r)
                continue
            cuts = [positions[c] for c in p[1:-1]]
            for c, q in zip(p[1:-1], cuts):
                if route_x_at(r, q.y) != q.x:
                    raise WitnessLiftError(
                        f"vertex {c} is not on the route of edge {e}",
                        engine_type="transforms",
                        reason=LiftReason.ROUTE_CONFLICT,
                        element=c,
                    )
            for hop, piece in zip(zip(p, p[1:]), split_route(r, cuts)):
                routes[hop] = piece
        return FullDrawing(positions, routes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source_n": self.source_n,
            "target_n": self.target_n,
            "paths": {f"{u}-{v}": list(p) for (u, v), p in sorted(self.paths.items())},
            "origins": {str(c): o.to_dict() for c, o in sorted(self.origins.items())},
        }

    @classmethod
    def from_dict(cls, raw: Mapping[str, Any]) -> "ElementMap":
        paths = {}
        for key, p in raw.get("paths", {}).items():
            u, v = key.split("-")
            paths[(int(u), int(v))] = tuple(int(c) for c in p)
        origins = {int(c): Origin.from_dict(o) for c, o in raw.get("origins", {}).items()}
        return cls(int(raw["source_n"]), int(raw["target_n"]), paths, origins)


def split_route(route: Route, cuts: List[Point]) -> List[Route]:
    """Cut a y-monotone route at points lying on it, given bottom to top"""
    pieces: List[Route] = []
    current: List[Point] = [route[0]]
    ci = 0
    for pt in route[1:]:
        while ci < len(cuts) and cuts[ci].y <= pt.y:
            c = cuts[ci]
            current.append(c)
            pieces.append(tuple(current))
            current = [c]
            ci += 1
        if pt != current[-1]:
            current.append(pt)
    pieces.append(tuple(current))
    return pieces


def rewire_paths(
    embedding: UpwardEmbedding,
    target_n: int,
    paths: Mapping[Edge, Tuple[int, ...]],
) -> UpwardEmbedding:
    """
    Embedding of the graph obtained by replacing edges with monotone paths.

    The second path vertex takes the place of the head in the tail's
    successor list and the second to last takes the place of the tail in
    the head's predecessor list; internal vertices get singleton lists.
    """
    succ = {v: list(s) for v, s in enumerate(embedding.succ)}
    pred = {v: list(p) for v, p in enumerate(embedding.pred)}
    for (u, v), p in paths.items():
        succ[u][succ[u].index(v)] = p[1]
        pred[v][pred[v].index(u)] = p[-2]
        for k in range(1, len(p) - 1):
            succ[p[k]] = [p[k + 1]]
            pred[p[k]] = [p[k - 1]]
    return UpwardEmbedding.from_lists(target_n, succ, pred)
