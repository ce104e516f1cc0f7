"""
Witness drawings for YES instances of embedded st-graphs.

The drawing is built on horizontal lines. Pinned vertices sharing a y
share a line at that y; every other vertex gets a line of its own,
above the highest pin among its ancestors and below the next pinned
line, in topological order. On each line the vertices and the edges
crossing it are pairwise incomparable once every edge is subdivided, so
their left-to-right order is the order of their dominance x-coordinates
in the subdivided graph. Pins on one line respect that order by the
second condition, and the lines are then drawn with the certificate
materializer.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..core.graph import DirectedGraph, Edge
from ..core.model import FullDrawing, Route, UpeInstance
from ..core.verify import verify_drawing
from ..exceptions import UpexError, WitnessLiftError
from ..logging import get_logger
from ..oracle.certificate import Element
from ..oracle.materialize import materialize_drawing
from ..oracle.search import Line
from ..transforms.element_map import ElementMap, rewire_paths
from .conditions import pinned_floor
from .dominance import DominanceIndex
from .stgraph import StGraph

logger = get_logger(__name__)


def line_classes(work: UpeInstance) -> List[Tuple[int, ...]]:
    """Vertex classes from the bottom line to the top one"""
    g = work.graph
    pos = work.drawing.vertex_pos
    floor = pinned_floor(work)
    free: Dict[Optional[Fraction], List[int]] = defaultdict(list)
    for v in g.topological_order() or []:
        if v not in work.partial_vertices:
            free[floor[v]].append(v)
    pinned: Dict[Fraction, List[int]] = defaultdict(list)
    for v in sorted(work.partial_vertices):
        pinned[pos[v].y].append(v)

    classes: List[Tuple[int, ...]] = [(v,) for v in free[None]]
    for y in sorted(pinned):
        classes.append(tuple(pinned[y]))
        classes.extend((v,) for v in free.get(y, ()))
    return classes


def subdivided_index(st: StGraph) -> Tuple[DominanceIndex, Dict[Edge, int]]:
    """Dominance index of the st-graph with one dummy vertex on every edge"""
    n = st.n
    dummy = {e: n + k for k, e in enumerate(st.graph.edges)}
    edges: List[Edge] = []
    for (u, v), d in dummy.items():
        edges.append((u, d))
        edges.append((d, v))
    total = n + len(dummy)
    embedding = rewire_paths(st.embedding, total, {e: (e[0], d, e[1]) for e, d in dummy.items()})
    sub = StGraph(DirectedGraph(total, tuple(edges)), st.s, st.t, embedding)
    return DominanceIndex.build(sub), dummy


def witness_lines(work: UpeInstance, st: StGraph) -> List[Line]:
    """
    Certificate lines of an edgeless-H instance that satisfies both
    conditions under ``st.embedding``.
    """
    classes = line_classes(work)
    label: Dict[int, int] = {}
    for i, cls in enumerate(classes):
        for v in cls:
            label[v] = i

    crossing: Dict[int, List[Edge]] = defaultdict(list)
    for u, v in work.graph.edges:
        for i in range(label[u] + 1, label[v]):
            crossing[i].append((u, v))

    idx, dummy = subdivided_index(st)

    def key(item: Element) -> int:
        return idx.dom_x[dummy[item]] if isinstance(item, tuple) else idx.dom_x[item]

    lines: List[Line] = []
    for i, cls in enumerate(classes):
        sigma = sorted(list(cls) + crossing[i], key=key)
        lines.append((cls, tuple(sigma)))
    logger.debug(f"witness uses {len(lines)} lines for {work.n} vertices")
    return lines


def partial_edge_guides(inst: UpeInstance, work: UpeInstance, emap: ElementMap) -> Dict[Edge, Route]:
    """Straight pieces of the H-edge routes between consecutive path vertices"""
    pos = work.drawing.vertex_pos
    guides: Dict[Edge, Route] = {}
    for e in inst.partial_edges:
        p = emap.path(e)
        for a, b in zip(p, p[1:]):
            guides[(a, b)] = (pos[a], pos[b])
    return guides


def witness_drawing(
    inst: UpeInstance,
    work: UpeInstance,
    emap: ElementMap,
    lines: List[Line],
    engine_name: str,
) -> FullDrawing:
    """
    Draw the lines, check the drawing and map it back to ``inst``.

    Raises:
        WitnessLiftError: the mapped drawing collides with an H-edge route
    """
    drawing = materialize_drawing(work, lines, guides=partial_edge_guides(inst, work, emap))
    if not verify_drawing(work, drawing):
        raise UpexError(
            "witness drawing failed verification",
            engine_name=engine_name,
            engine_type="stgraph",
        )
    if emap.is_identity:
        return drawing
    try:
        return emap.lift_drawing(drawing, inst, verify=True)
    except WitnessLiftError as exc:
        exc.engine_name = exc.engine_name or engine_name
        logger.warning(f"{engine_name}: witness does not lift to the input instance ({exc})")
        raise
