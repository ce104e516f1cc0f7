"""
Instance validation, drawing verification and embedding extraction.

Planarity of y-monotone polylines is checked with a horizontal sweep. The
sweep stops at every y-coordinate used by a vertex or a bend. At a stop,
two elements may share a point only when that point is a common endpoint
vertex. Between consecutive stops every route is a straight segment, so two
routes cross inside the strip exactly when their left-to-right order flips.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from ..exceptions import (
    DrawingReason,
    InstanceValidationError,
    MalformedDrawingError,
    ValidationReason,
)
from ..logging import get_logger
from .geometry import Point, route_x_at, slope_key
from .graph import DirectedGraph, Edge, UpwardEmbedding
from .model import FullDrawing, Route, UpeInstance, ValidationReport, instance_size

logger = get_logger(__name__)

Conflict = Tuple[str, object]


def find_drawing_conflict(
    vertex_pos: Mapping[int, Point],
    edge_routes: Mapping[Edge, Route],
) -> Optional[Conflict]:
    """
    Return the first planarity conflict of a y-monotone polyline drawing.

    Routes are assumed strictly y-increasing with endpoints at their
    vertices' points. The result is ``None`` or a pair ``(kind, element)``
    with kind one of ``coincident``, ``touch``, ``vertex_on_edge``,
    ``crossing``.
    """
    stops = sorted({p.y for p in vertex_pos.values()}
                   | {p.y for r in edge_routes.values() for p in r})
    if not stops:
        return None

    by_start: Dict[Fraction, List[Edge]] = defaultdict(list)
    for e, r in edge_routes.items():
        by_start[r[0].y].append(e)
    vertices_at: Dict[Fraction, List[int]] = defaultdict(list)
    for v, p in vertex_pos.items():
        vertices_at[p.y].append(v)

    active: List[Edge] = []
    previous: Dict[Edge, Fraction] = {}
    for y in stops:
        active.extend(by_start.get(y, ()))
        current: Dict[Edge, Fraction] = {}
        for e in active:
            current[e] = route_x_at(edge_routes[e], y)

        # strip below this stop: routes alive on both of its boundaries
        spanning = [e for e in previous if e in current]
        if len(spanning) > 1:
            spanning.sort(key=lambda e: (previous[e], current[e]))
            for a, b in zip(spanning, spanning[1:]):
                if current[a] > current[b]:
                    return ("crossing", (a, b))
                if previous[a] == previous[b] and current[a] == current[b]:
                    return ("crossing", (a, b))

        # points on this stop
        groups: Dict[Fraction, Tuple[List[int], List[Edge]]] = {}
        for v in vertices_at.get(y, ()):
            groups.setdefault(vertex_pos[v].x, ([], []))[0].append(v)
        for e, x in current.items():
            groups.setdefault(x, ([], []))[1].append(e)
        for x, (verts, edges) in groups.items():
            if len(verts) > 1:
                return ("coincident", tuple(sorted(verts)))
            if not verts:
                if len(edges) > 1:
                    return ("touch", tuple(edges[:2]))
                continue
            v = verts[0]
            for e in edges:
                if v not in e:
                    return ("vertex_on_edge", (v, e))
                r = edge_routes[e]
                if r[0].y != y and r[-1].y != y:
                    return ("vertex_on_edge", (v, e))

        active = [e for e in active if edge_routes[e][-1].y > y]
        previous = {e: current[e] for e in active}
    return None


def _route_shape_problem(route: Route, tail: Optional[Point], head: Optional[Point]) -> Optional[ValidationReason]:
    if len(route) < 2:
        return ValidationReason.ROUTE_ENDPOINTS
    if (tail is not None and route[0] != tail) or (head is not None and route[-1] != head):
        return ValidationReason.ROUTE_ENDPOINTS
    for a, b in zip(route, route[1:]):
        if not a.y < b.y:
            return ValidationReason.NOT_Y_MONOTONE
    return None


def validate_instance(inst: UpeInstance) -> ValidationReport:
    """
    Check the model invariants of an instance.

    Returns an ok report carrying the instance size |V| + |E| + s, or the
    first violated invariant together with the offending element.
    """
    g = inst.graph
    size = instance_size(inst)

    def fail(reason: ValidationReason, element, message: str) -> ValidationReport:
        logger.debug(f"instance rejected: {reason.name} at {element}: {message}")
        return ValidationReport(False, size, reason, element, message)

    seen = set()
    for e in g.edges:
        u, v = e
        if not (0 <= u < g.n and 0 <= v < g.n):
            return fail(ValidationReason.VERTEX_RANGE, e, "edge endpoint outside 0..n-1")
        if u == v:
            return fail(ValidationReason.SELF_LOOP, e, "self-loop")
        if e in seen:
            return fail(ValidationReason.PARALLEL_EDGE, e, "edge listed twice")
        seen.add(e)

    for v in sorted(inst.partial_vertices):
        if not 0 <= v < g.n:
            return fail(ValidationReason.H_NOT_SUBGRAPH, v, "H vertex not in G")
    for e in sorted(inst.partial_edges):
        if e not in g.edge_set:
            return fail(ValidationReason.H_NOT_SUBGRAPH, e, "H edge not in G")
        if e[0] not in inst.partial_vertices or e[1] not in inst.partial_vertices:
            return fail(ValidationReason.H_EDGE_ENDPOINT, e, "H edge endpoint not in V(H)")

    pos = inst.drawing.vertex_pos
    routes = inst.drawing.edge_routes
    if set(pos) != set(inst.partial_vertices):
        extra = sorted(set(pos) ^ set(inst.partial_vertices))
        return fail(ValidationReason.DRAWING_DOMAIN, extra[0], "positions do not match V(H)")
    if set(routes) != set(inst.partial_edges):
        extra = sorted(set(routes) ^ set(inst.partial_edges))
        return fail(ValidationReason.DRAWING_DOMAIN, extra[0], "routes do not match E(H)")

    for e in sorted(routes):
        problem = _route_shape_problem(routes[e], pos[e[0]], pos[e[1]])
        if problem is not None:
            message = "non-y-monotone polyline" if problem == ValidationReason.NOT_Y_MONOTONE \
                else "route endpoints differ from vertex positions"
            return fail(problem, e, message)

    conflict = find_drawing_conflict(pos, routes)
    if conflict is not None:
        kind, element = conflict
        if kind == "coincident":
            return fail(ValidationReason.COINCIDENT_VERTICES, element, "two H vertices share a point")
        return fail(ValidationReason.CROSSING, element, f"partial drawing is not planar ({kind})")

    if inst.embedding is not None:
        antiparallel = any((v, u) in g.edge_set for u, v in g.edges)
        try:
            inst.embedding.validate(g, planar=not antiparallel)
        except InstanceValidationError as exc:
            return fail(exc.reason, None, str(exc))

    return ValidationReport(True, size)


def _check_complete(graph: DirectedGraph, d: FullDrawing) -> None:
    for v in range(graph.n):
        if v not in d.vertex_pos:
            raise MalformedDrawingError(
                f"vertex {v} has no position",
                engine_type="core",
                reason=DrawingReason.MISSING_VERTEX,
                element=v,
            )
    for e in graph.edges:
        if e not in d.edge_routes:
            raise MalformedDrawingError(
                f"edge {e} has no route",
                engine_type="core",
                reason=DrawingReason.MISSING_EDGE,
                element=e,
            )
    extra = set(d.edge_routes) - graph.edge_set
    if extra:
        raise MalformedDrawingError(
            f"route for an edge not in G: {sorted(extra)[0]}",
            engine_type="core",
            reason=DrawingReason.MISSING_EDGE,
            element=sorted(extra)[0],
        )


def drawing_problem(inst: UpeInstance, d: FullDrawing) -> Optional[DrawingReason]:
    """
    First reason why ``d`` is not an upward planar extension, or None.

    Raises MalformedDrawingError when a vertex or an edge is missing.
    """
    g = inst.graph
    _check_complete(g, d)

    for (u, v) in g.edges:
        problem = _route_shape_problem(d.edge_routes[(u, v)], d.vertex_pos[u], d.vertex_pos[v])
        if problem == ValidationReason.ROUTE_ENDPOINTS:
            return DrawingReason.BAD_ENDPOINTS
        if problem is not None:
            return DrawingReason.NOT_UPWARD

    for v in inst.partial_vertices:
        if d.vertex_pos[v] != inst.drawing.vertex_pos[v]:
            return DrawingReason.NOT_EXTENDING
    for e in inst.partial_edges:
        if tuple(d.edge_routes[e]) != tuple(inst.drawing.edge_routes[e]):
            return DrawingReason.NOT_EXTENDING

    if find_drawing_conflict(d.vertex_pos, d.edge_routes) is not None:
        return DrawingReason.NOT_PLANAR

    if inst.embedding is not None:
        try:
            realized = extract_embedding(g, d)
        except MalformedDrawingError:
            return DrawingReason.TANGENT_TIE
        if realized != inst.embedding:
            return DrawingReason.WRONG_EMBEDDING
    return None


def verify_drawing(inst: UpeInstance, d: FullDrawing) -> bool:
    """
    True iff ``d`` is an upward planar drawing of G extending the partial
    drawing (and realizing the instance's embedding when one is given).

    Raises MalformedDrawingError when ``d`` lacks a vertex or an edge.
    """
    problem = drawing_problem(inst, d)
    if problem is not None:
        logger.debug(f"drawing rejected: {problem.name}")
    return problem is None


def extract_embedding(graph: DirectedGraph, d: FullDrawing) -> UpwardEmbedding:
    """
    Read the successor/predecessor lists off the tangent order at each vertex.

    Out-edges are ordered by the direction of their first segment, in-edges
    by the direction of their last segment seen from the head; both from
    left to right.
    """
    succ: Dict[int, List[int]] = {}
    pred: Dict[int, List[int]] = {}
    for v in range(graph.n):
        outs = [(slope_key(d.edge_routes[(v, w)][1] - d.edge_routes[(v, w)][0]), w)
                for w in graph.successors(v)]
        ins = [(slope_key(d.edge_routes[(u, v)][-2] - d.edge_routes[(u, v)][-1]), u)
               for u in graph.predecessors(v)]
        for keyed in (outs, ins):
            keyed.sort()
            for (k1, _), (k2, _) in zip(keyed, keyed[1:]):
                if k1 == k2:
                    raise MalformedDrawingError(
                        f"collinear first segments at vertex {v}",
                        engine_type="core",
                        reason=DrawingReason.TANGENT_TIE,
                        element=v,
                    )
        succ[v] = [w for _, w in outs]
        pred[v] = [u for _, u in ins]
    return UpwardEmbedding.from_lists(graph.n, succ, pred)
