"""
Separation of pinned vertices that share a y-coordinate.

After the partial edges are eliminated, every pinned vertex on a line that
holds several pinned vertices is replaced by a short vertical H-edge
centred on its old point. The j-th vertex from the left gets a segment of
length j * h / (3 * k), where k is the number of vertices on the line and
h = min(1, gap / 2) with gap the distance to the nearest other line.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..config import TransformConfig
from ..core.geometry import Point
from ..core.graph import DirectedGraph, Edge, UpwardEmbedding
from ..core.model import PartialDrawing, Route, UpeInstance
from ..exceptions import UpexError
from ..logging import get_logger
from .element_map import ElementMap, Origin, OriginKind
from .elimination import eliminate_partial_edges

logger = get_logger(__name__)


def strip_height(ys: List[Fraction], i: int) -> Fraction:
    """Height of the strip around the i-th of the sorted distinct ys"""
    gaps = []
    if i > 0:
        gaps.append(ys[i] - ys[i - 1])
    if i + 1 < len(ys):
        gaps.append(ys[i + 1] - ys[i])
    if not gaps:
        return Fraction(1)
    return min(Fraction(1), min(gaps) / 2)


def split_vertices(inst: UpeInstance) -> Tuple[UpeInstance, ElementMap]:
    """
    Split the pinned vertices of shared lines; H must be edgeless.

    The lower half keeps the vertex id and its incoming edges, the upper half
    is a new vertex carrying the outgoing edges.
    """
    g = inst.graph
    n = g.n
    pos = inst.drawing.vertex_pos
    by_y: Dict[Fraction, List[int]] = {}
    for v in sorted(pos, key=lambda v: (pos[v].y, pos[v].x)):
        by_y.setdefault(pos[v].y, []).append(v)
    ys = sorted(by_y)

    new_pos: Dict[int, Point] = dict(pos)
    partner: Dict[int, int] = {}
    next_id = n
    for i, y in enumerate(ys):
        row = by_y[y]
        if len(row) < 2:
            continue
        h = strip_height(ys, i)
        for j, v in enumerate(row, start=1):
            half = j * h / (3 * len(row)) / 2
            x = pos[v].x
            new_pos[v] = Point(x, y - half)
            new_pos[next_id] = Point(x, y + half)
            partner[v] = next_id
            next_id += 1

    if not partner:
        return inst, ElementMap.identity(n)

    edges: List[Edge] = []
    paths: Dict[Edge, Tuple[int, ...]] = {}
    for u, w in g.edges:
        if u in partner:
            edges.append((partner[u], w))
            paths[(u, w)] = (partner[u], w)
        else:
            edges.append((u, w))
    split_edges = [(v, partner[v]) for v in sorted(partner)]
    edges.extend(split_edges)

    routes: Dict[Edge, Route] = {e: (new_pos[e[0]], new_pos[e[1]]) for e in split_edges}
    origins = {c: Origin(OriginKind.SPLIT, vertex=v) for v, c in partner.items()}

    embedding = inst.embedding
    if embedding is not None:
        embedding = _rewire_splits(embedding, next_id, partner)

    out = UpeInstance(
        graph=DirectedGraph(next_id, tuple(edges)),
        partial_vertices=frozenset(inst.partial_vertices) | frozenset(partner.values()),
        partial_edges=frozenset(split_edges),
        drawing=PartialDrawing(new_pos, routes),
        embedding=embedding,
    )
    return out, ElementMap(n, next_id, paths, origins)


def _rewire_splits(embedding: UpwardEmbedding, target_n: int, partner: Dict[int, int]) -> UpwardEmbedding:
    succ = {v: list(s) for v, s in enumerate(embedding.succ)}
    pred = {v: list(p) for v, p in enumerate(embedding.pred)}
    for v, v2 in partner.items():
        for w in embedding.succ[v]:
            pred[w][pred[w].index(v)] = v2
    for v, v2 in partner.items():
        succ[v2] = succ[v]
        succ[v] = [v2]
        pred[v2] = [v]
    return UpwardEmbedding.from_lists(target_n, succ, pred)


def make_distinct_y(
    inst: UpeInstance,
    config: Optional[TransformConfig] = None,
) -> Tuple[UpeInstance, ElementMap]:
    """
    Make the y-coordinates of the pinned vertices pairwise distinct.

    Runs the partial-edge elimination first, then splits the vertices of
    every shared line. Returns the equivalent instance and the composed
    element map.
    """
    config = config or TransformConfig()
    edgeless, first = eliminate_partial_edges(inst, config)
    out, second = split_vertices(edgeless)
    emap = first.compose(second)

    if config.check_postconditions:
        if not out.pinned_ys_distinct():
            raise UpexError(
                "transform postcondition violated: pinned y-coordinates repeat",
                engine_name="distinct-y",
                engine_type="transforms",
            )
        if inst.fully_pinned and not out.fully_pinned:
            raise UpexError(
                "transform postcondition violated: V(H') != V(G')",
                engine_name="distinct-y",
                engine_type="transforms",
            )

    logger.debug(
        f"distinct-y: {inst.n} -> {out.n} vertices, "
        f"{out.n - edgeless.n} split, size {inst.size} -> {out.size}"
    )
    return out, emap
