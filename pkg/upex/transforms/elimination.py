"""
Elimination of the partial edges.

Every edge of H is replaced by a monotone path whose internal vertices are
pinned on the edge's route: one at each bend and one wherever the route
crosses an interesting line (the y of an H-vertex) either next to an
H-vertex on that line or one line away from an endpoint of the edge. The
resulting instance has an edgeless H and the same answer.

The per-line left-to-right orders are maintained by a sweep over the
interesting lines. The fast sweep derives each line from the previous one
by binary search; the slow sweep sorts every line from scratch.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Set, Tuple, Union

from ..config import TransformConfig
from ..core.geometry import Point, slope_key, x_at
from ..core.graph import DirectedGraph, Edge
from ..core.model import PartialDrawing, Route, UpeInstance
from ..exceptions import UpexError
from ..logging import get_logger
from .element_map import ElementMap, Origin, OriginKind, rewire_paths

logger = get_logger(__name__)


class Segment(NamedTuple):
    """A straight piece of an H-edge between two consecutive route points"""
    tail: int
    head: int
    edge: Edge


SweepItem = Union[int, Segment]


@dataclass(frozen=True)
class SweepState:
    """
    Orders computed by the sweep.

    Attributes:
        interesting_ys: Distinct y-coordinates of the H-vertices, increasing
        lines: Per interesting line, H-vertices on it and segments crossing
            it, left to right
        between: Per pair of consecutive lines, segments crossing the
            horizontal line halfway between them, left to right
    """
    interesting_ys: Tuple[Fraction, ...]
    lines: Tuple[Tuple[SweepItem, ...], ...]
    between: Tuple[Tuple[Segment, ...], ...]


def _x_on(item: SweepItem, y: Fraction, pos: Dict[int, Point]) -> Fraction:
    if isinstance(item, Segment):
        return x_at(pos[item.tail], pos[item.head], y)
    return pos[item].x


def sweep_lines(
    pos: Dict[int, Point],
    segments: List[Segment],
    fast: bool = True,
) -> SweepState:
    """
    Compute the per-line orders of a straight-line drawing.

    Args:
        pos: Positions of the vertices of the drawing
        segments: Straight y-increasing segments between those vertices
        fast: Use the binary-search sweep instead of sorting every line
    """
    ys = tuple(sorted({p.y for p in pos.values()}))
    on_line: Dict[Fraction, List[int]] = defaultdict(list)
    for v in sorted(pos, key=lambda v: (pos[v].y, pos[v].x)):
        on_line[pos[v].y].append(v)

    if fast:
        lines, between = _fast_sweep(ys, on_line, pos, segments)
    else:
        lines, between = _slow_sweep(ys, on_line, pos, segments)
    return SweepState(ys, tuple(lines), tuple(between))


def _fast_sweep(ys, on_line, pos, segments):
    leaving: Dict[int, List[Segment]] = defaultdict(list)
    for seg in segments:
        leaving[seg.tail].append(seg)
    for v, segs in leaving.items():
        segs.sort(key=lambda s: slope_key(pos[s.head] - pos[s.tail]))

    lines: List[Tuple[SweepItem, ...]] = []
    between: List[Tuple[Segment, ...]] = []
    if not ys:
        return lines, between
    current: List[SweepItem] = list(on_line[ys[0]])
    for i, y in enumerate(ys):
        lines.append(tuple(current))
        if i + 1 == len(ys):
            break
        crossing: List[Segment] = []
        for item in current:
            if isinstance(item, Segment):
                crossing.append(item)
            else:
                crossing.extend(leaving.get(item, ()))
        between.append(tuple(crossing))

        y_next = ys[i + 1]
        row: List[SweepItem] = list(crossing)
        for v in on_line[y_next]:
            x = pos[v].x
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if _x_on(row[mid], y_next, pos) < x:
                    lo = mid + 1
                else:
                    hi = mid
            # segments entering v are consecutive
            end = lo
            while end < len(row) and isinstance(row[end], Segment) and row[end].head == v:
                end += 1
            row[lo:end] = [v]
        current = row
    return lines, between


def _slow_sweep(ys, on_line, pos, segments):
    lines: List[Tuple[SweepItem, ...]] = []
    between: List[Tuple[Segment, ...]] = []
    for i, y in enumerate(ys):
        items: List[SweepItem] = list(on_line[y])
        items.extend(s for s in segments if pos[s.tail].y < y < pos[s.head].y)
        items.sort(key=lambda item: _x_on(item, y, pos))
        lines.append(tuple(items))
        if i + 1 < len(ys):
            mid = (y + ys[i + 1]) / 2
            spanning = [s for s in segments if pos[s.tail].y < mid < pos[s.head].y]
            spanning.sort(key=lambda s: x_at(pos[s.tail], pos[s.head], mid))
            between.append(tuple(spanning))
    return lines, between


def _postcondition(ok: bool, message: str) -> None:
    if not ok:
        raise UpexError(
            f"transform postcondition violated: {message}",
            engine_name="eliminate",
            engine_type="transforms",
        )




def subdivide_bends(inst: UpeInstance) -> Tuple[UpeInstance, ElementMap]:
    """
    Pin a new vertex at every bend of the partial drawing.

    Each polyline H-edge becomes a chain of straight H-edges through its
    bends, both in H and in G.
    """
    g = inst.graph
    n = g.n
    pos: Dict[int, Point] = dict(inst.drawing.vertex_pos)
    routes: Dict[Edge, Route] = {}
    paths: Dict[Edge, Tuple[int, ...]] = {}
    origins: Dict[int, Origin] = {}
    next_id = n
    for e in sorted(inst.partial_edges):
        route = inst.drawing.edge_routes[e]
        if len(route) == 2:
            routes[e] = tuple(route)
            continue
        chain = [e[0]]
        for k, p in enumerate(route[1:-1], start=1):
            pos[next_id] = p
            origins[next_id] = Origin(OriginKind.BEND, edge=e, segment=k)
            chain.append(next_id)
            next_id += 1
        chain.append(e[1])
        paths[e] = tuple(chain)
        for a, b in zip(chain, chain[1:]):
            routes[(a, b)] = (pos[a], pos[b])

    if not paths:
        return inst, ElementMap.identity(n)

    edges: List[Edge] = []
    for e in g.edges:
        p = paths.get(e)
        edges.extend(zip(p, p[1:]) if p is not None else [e])
    embedding = inst.embedding
    if embedding is not None:
        embedding = rewire_paths(embedding, next_id, paths)
    out = UpeInstance(
        graph=DirectedGraph(next_id, tuple(edges)),
        partial_vertices=frozenset(inst.partial_vertices) | frozenset(range(n, next_id)),
        partial_edges=frozenset(routes),
        drawing=PartialDrawing(pos, routes),
        embedding=embedding,
    )
    return out, ElementMap(n, next_id, paths, origins)


def eliminate_partial_edges(
    inst: UpeInstance,
    config: Optional[TransformConfig] = None,
) -> Tuple[UpeInstance, ElementMap]:
    """
    Replace every H-edge by a pinned monotone path.

    Args:
        inst: A valid instance
        config: Sweep selection and postcondition checks

    Returns:
        The equivalent instance with edgeless H, and the element map from
        ``inst`` to it
    """
    config = config or TransformConfig()
    if not inst.partial_edges:
        return inst, ElementMap.identity(inst.n)

    straight, bend_map = subdivide_bends(inst)
    g = straight.graph
    n = g.n
    pos: Dict[int, Point] = dict(straight.drawing.vertex_pos)
    segments = [Segment(u, v, (u, v)) for u, v in sorted(straight.partial_edges)]

    state = sweep_lines(pos, segments, fast=config.fast_sweep)
    line_index = {y: i for i, y in enumerate(state.interesting_ys)}

    # (segment, line) pairs that receive a vertex
    marked: Set[Tuple[Segment, int]] = set()
    for i, items in enumerate(state.lines):
        for k, item in enumerate(items):
            if isinstance(item, Segment):
                continue
            for j in (k - 1, k + 1):
                if 0 <= j < len(items) and isinstance(items[j], Segment):
                    marked.add((items[j], i))
    next_to_vertex = len(marked)
    for seg in segments:
        a, b = line_index[pos[seg.tail].y], line_index[pos[seg.head].y]
        if b - a >= 2:
            marked.add((seg, a + 1))
            marked.add((seg, b - 1))

    paths: Dict[Edge, Tuple[int, ...]] = {}
    origins: Dict[int, Origin] = {}
    next_id = n
    by_segment: Dict[Segment, List[int]] = defaultdict(list)
    for seg, i in sorted(marked, key=lambda m: (m[0].edge, m[1])):
        by_segment[seg].append(i)
    for seg in segments:
        lines = by_segment.get(seg)
        if not lines:
            continue
        path = [seg.tail]
        for k, i in enumerate(lines, start=1):
            y = state.interesting_ys[i]
            pos[next_id] = Point(x_at(pos[seg.tail], pos[seg.head], y), y)
            origins[next_id] = Origin(OriginKind.CROSSING, edge=seg.edge, segment=k)
            path.append(next_id)
            next_id += 1
        path.append(seg.head)
        paths[seg.edge] = tuple(path)

    new_edges: List[Edge] = []
    for e in g.edges:
        p = paths.get(e)
        new_edges.extend(zip(p, p[1:]) if p is not None else [e])

    embedding = straight.embedding
    if embedding is not None:
        embedding = rewire_paths(embedding, next_id, paths)

    out = UpeInstance(
        graph=DirectedGraph(next_id, tuple(new_edges)),
        partial_vertices=frozenset(straight.partial_vertices) | frozenset(range(n, next_id)),
        partial_edges=frozenset(),
        drawing=PartialDrawing(pos, {}),
        embedding=embedding,
    )
    emap = bend_map.compose(ElementMap(n, next_id, paths, origins))

    if config.check_postconditions:
        _postcondition(not out.partial_edges, "H' has edges")
        if inst.fully_pinned:
            _postcondition(out.fully_pinned, "V(H') != V(G')")
        if len(inst.graph.sources()) == 1 and len(inst.graph.sinks()) == 1:
            out_g = out.graph
            _postcondition(len(out_g.sources()) == 1 and len(out_g.sinks()) == 1, "st-graph lost")
        _postcondition(
            next_to_vertex <= 2 * len(straight.partial_vertices),
            "too many insertions next to vertices",
        )
        _postcondition(
            len(marked) - next_to_vertex <= 2 * len(segments),
            "too many insertions near endpoints",
        )

    logger.debug(
        f"eliminated {len(inst.partial_edges)} partial edges: {inst.n} -> {next_id} vertices, "
        f"size {inst.size} -> {out.size}"
    )
    return out, emap
