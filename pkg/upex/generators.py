"""
Random instance generation.

Every generator first builds a graph together with an upward planar
drawing of it, then pins a random subset of the vertices at their drawn
positions. Without ``adversarial`` the result is therefore extensible.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from .config import GeneratorConfig
from .core.graph import DirectedGraph, Edge, UpwardEmbedding
from .core.geometry import Point
from .core.model import FullDrawing, UpeInstance
from .core.verify import extract_embedding
from .logging import get_logger
from .stgraph import DominanceIndex, StGraph

logger = get_logger(__name__)

Positions = Dict[int, Tuple[int, int]]


def _pick(rng: np.random.Generator, items: List):
    return items[int(rng.integers(len(items)))]


def _insert_beside(order: List[int], anchor: int, item: int, left: bool) -> None:
    i = order.index(anchor)
    order.insert(i if left else i + 1, item)


class _EdgePool:
    """Edge list with O(1) random pick, insertion and removal"""

    def __init__(self, first: Edge):
        self.edges: List[Edge] = [first]
        self.slot: Dict[Edge, int] = {first: 0}

    def __contains__(self, edge: Edge) -> bool:
        return edge in self.slot

    def add(self, edge: Edge) -> None:
        self.slot[edge] = len(self.edges)
        self.edges.append(edge)

    def remove(self, edge: Edge) -> None:
        i = self.slot.pop(edge)
        last = self.edges.pop()
        if i < len(self.edges):
            self.edges[i] = last
            self.slot[last] = i

    def pick(self, rng: np.random.Generator) -> Edge:
        return _pick(rng, self.edges)


def random_embedded_st_graph(
    rng: np.random.Generator,
    n: int,
    chord_rate: float = 0.3,
) -> Tuple[DirectedGraph, UpwardEmbedding]:
    """
    Grow a planar st-graph with source 0 and sink 1 together with an
    upward embedding of it.

    Each step subdivides an edge or adds a path u, w, v of length two on a
    random side of an edge (u, v). With probability ``chord_rate`` a step
    instead picks a vertex w with one predecessor u and one successor v and
    adds the chord (u, v) along w, which keeps the graph acyclic and the
    embedding planar. Every step costs O(degree).
    """
    succ: List[List[int]] = [[] for _ in range(n)]
    pred: List[List[int]] = [[] for _ in range(n)]
    succ[0], pred[1] = [1], [0]
    pool = _EdgePool((0, 1))
    size = 2
    while size < n:
        if size > 3 and rng.random() < chord_rate:
            w = int(rng.integers(2, size))
            if len(pred[w]) == 1 and len(succ[w]) == 1:
                u, v = pred[w][0], succ[w][0]
                if (u, v) not in pool:
                    left = bool(rng.random() < 0.5)
                    _insert_beside(succ[u], w, v, left)
                    _insert_beside(pred[v], w, u, left)
                    pool.add((u, v))
            continue
        u, v = pool.pick(rng)
        w = size
        size += 1
        if rng.random() < 0.5:
            succ[u][succ[u].index(v)] = w
            pred[v][pred[v].index(u)] = w
            pool.remove((u, v))
        else:
            left = bool(rng.random() < 0.5)
            _insert_beside(succ[u], v, w, left)
            _insert_beside(pred[v], u, w, left)
        succ[w], pred[w] = [v], [u]
        pool.add((u, w))
        pool.add((w, v))
    graph = DirectedGraph.of(n, sorted(pool.edges))
    return graph, UpwardEmbedding(tuple(map(tuple, succ)), tuple(map(tuple, pred)))


def random_st_graph(rng: np.random.Generator, n: int, chord_rate: float = 0.3) -> DirectedGraph:
    """A random planar st-graph with source 0 and sink 1"""
    return random_embedded_st_graph(rng, n, chord_rate)[0]


def layered_positions(st: StGraph) -> Positions:
    """
    y is the longest-path layer, x the dominance x-rank.

    Pins taken from these positions satisfy both st-graph conditions:
    y grows along every edge, and same-layer vertices are ordered left to
    right as in the embedding.
    """
    layer = [0] * st.n
    for v in st.graph.topological_order():
        for w in st.graph.successors(v):
            layer[w] = max(layer[w], layer[v] + 1)
    dom = DominanceIndex.build(st)
    return {v: (dom.dom_x[v], layer[v]) for v in range(st.n)}


def zigzag_path(rng: np.random.Generator, n: int) -> Tuple[DirectedGraph, FullDrawing]:
    """A path drawn x-monotone with random heights, edges pointing up"""
    ranks = [int(r) for r in rng.permutation(n)]
    pos = {p: Point.of(p, 2 * ranks[p]) for p in range(n)}
    edges = [(p, p + 1) if ranks[p] < ranks[p + 1] else (p + 1, p) for p in range(n - 1)]
    routes = {e: (pos[e[0]], pos[e[1]]) for e in edges}
    return DirectedGraph.of(n, edges), FullDrawing(pos, routes)


def split_cycle(rng: np.random.Generator, n: int) -> Tuple[DirectedGraph, FullDrawing]:
    """
    A cycle drawn as two chains between its lowest and highest vertex.

    The right chain is an x-monotone zigzag; the left chain is monotone and
    runs up the line x = -1 with odd heights, so no height repeats.
    """
    left = int(rng.integers(0, n // 3 + 1))
    right = n - left
    inner = [int(r) for r in rng.permutation(np.arange(1, right - 1))]
    ranks = [0] + inner + [right - 1]
    pos: Dict[int, Point] = {p: Point.of(p, 2 * ranks[p]) for p in range(right)}
    edges: List[Edge] = [(p, p + 1) if ranks[p] < ranks[p + 1] else (p + 1, p) for p in range(right - 1)]
    routes = {e: (pos[e[0]], pos[e[1]]) for e in edges}

    heights = sorted(int(j) for j in rng.choice(max(right - 2, 1), size=max(left - 1, 0), replace=False))
    chain = [0]
    for k, j in enumerate(heights + ([right - 2] if left else [])):
        v = right + k
        pos[v] = Point.of(-1, 2 * j + 1)
        chain.append(v)
    chain.append(right - 1)
    for a, b in zip(chain, chain[1:]):
        edges.append((a, b))
        if a == 0 and b == right - 1:
            routes[(a, b)] = (pos[a], Point.of(-1, 1), Point.of(-1, 2 * right - 3), pos[b])
        else:
            routes[(a, b)] = (pos[a], pos[b])
    return DirectedGraph.of(n, edges), FullDrawing(pos, routes)


def _perturb(rng: np.random.Generator, positions: Positions, kind: str) -> Positions:
    out = dict(positions)
    pinned = sorted(out)
    if kind == "st" and rng.random() < 0.5:
        levels: Dict[int, List[int]] = defaultdict(list)
        for v in pinned:
            levels[out[v][1]].append(v)
        crowded = [vs for _, vs in sorted(levels.items()) if len(vs) > 1]
        if crowded:
            a, b = (int(v) for v in rng.choice(_pick(rng, crowded), size=2, replace=False))
            (xa, ya), (xb, yb) = out[a], out[b]
            out[a], out[b] = (xb, ya), (xa, yb)
            return out
    candidates = [(a, b) for a in pinned for b in pinned if a < b and out[a][1] != out[b][1]]
    if candidates:
        a, b = _pick(rng, candidates)
        (xa, ya), (xb, yb) = out[a], out[b]
        out[a], out[b] = (xa, yb), (xb, ya)
    return out


def generate_instance(config: GeneratorConfig) -> UpeInstance:
    """
    Generate a random instance.

    Example:
        >>> inst = generate_instance(GeneratorConfig(kind="path", n=8, seed=3))
    """
    rng = np.random.default_rng(config.seed)
    embedding: Optional[UpwardEmbedding]
    if config.kind == "st":
        graph, embedding = random_embedded_st_graph(rng, config.n, config.chord_rate)
        positions = layered_positions(StGraph(graph, 0, 1, embedding))
    else:
        build = zigzag_path if config.kind == "path" else split_cycle
        graph, drawing = build(rng, config.n)
        embedding = extract_embedding(graph, drawing)
        positions = {v: (int(p.x), int(p.y)) for v, p in drawing.vertex_pos.items()}

    keep: Set[int] = {v for v in range(graph.n) if rng.random() < config.pin_fraction}
    pins = {v: positions[v] for v in sorted(keep)}
    if config.adversarial:
        pins = _perturb(rng, pins, config.kind)
    logger.debug(f"generated {config.kind} instance: {graph.n} vertices, {len(pins)} pinned")
    return UpeInstance.build(
        graph.n,
        graph.edges,
        positions=pins,
        embedding=embedding if config.embedded else None,
    )


def grid_pins(rng: np.random.Generator, graph: DirectedGraph, grid: int = 7, fraction: float = 1.0) -> Dict[int, Tuple[Fraction, Fraction]]:
    """Random pins on a grid x grid lattice with pairwise distinct y, for oracle families"""
    chosen = [v for v in range(graph.n) if rng.random() < fraction]
    ys = rng.choice(grid, size=min(len(chosen), grid), replace=False)
    xs = rng.integers(0, grid, size=len(ys))
    return {v: (Fraction(int(x)), Fraction(int(y))) for v, x, y in zip(chosen, xs, ys)}
