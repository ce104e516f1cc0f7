"""
Traversal orders and monotone runs of directed paths and cycles.
"""

from dataclasses import dataclass
from typing import List, Tuple

from ..core.graph import DirectedGraph
from ..exceptions import PreconditionError, PreconditionReason


def _not_path_or_cycle(message: str) -> PreconditionError:
    return PreconditionError(message, engine_type="pathcycle", reason=PreconditionReason.NOT_PATH_OR_CYCLE)


def path_or_cycle_order(graph: DirectedGraph) -> Tuple[Tuple[int, ...], bool]:
    """
    Vertices in traversal order and whether the graph is a cycle.

    A path is read from its endpoint with the smaller id; a cycle from
    vertex 0 towards its smaller neighbour.

    Raises:
        PreconditionError: the underlying graph is neither a simple path
            nor a simple cycle
    """
    n = graph.n
    und = graph.undirected()
    if und.number_of_edges() != len(graph.edges):
        raise _not_path_or_cycle("graph has antiparallel edges")
    if n == 0 or any(d > 2 for _, d in und.degree()):
        raise _not_path_or_cycle("a vertex has more than two neighbours")
    m = len(graph.edges)
    if m == n - 1:
        ends = sorted(v for v, d in und.degree() if d <= 1)
        start, cyclic = ends[0], False
    elif m == n and n >= 3:
        start, cyclic = 0, True
    else:
        raise _not_path_or_cycle(f"{n} vertices and {m} edges form neither a path nor a cycle")

    order = [start]
    prev = None
    while len(order) < n:
        options = sorted(w for w in und.neighbors(order[-1]) if w != prev)
        if not options:
            raise _not_path_or_cycle("graph is disconnected")
        prev = order[-1]
        order.append(options[0])
    if cyclic and not und.has_edge(order[-1], order[0]):
        raise _not_path_or_cycle("graph is disconnected")
    return tuple(order), cyclic


@dataclass(frozen=True)
class MonotoneRunPartition:
    """
    Maximal monotone subpaths in traversal order.

    Attributes:
        order: Vertices along the path or cycle
        cyclic: Whether the graph is a cycle
        runs: Every run listed from its source to its sink; consecutive runs
            share one junction and alternate in direction
    """
    order: Tuple[int, ...]
    cyclic: bool
    runs: Tuple[Tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.runs)

    def to_dict(self):
        return {"order": list(self.order), "cyclic": self.cyclic, "runs": [list(r) for r in self.runs]}


def edge_directions(graph: DirectedGraph, order: Tuple[int, ...], cyclic: bool) -> List[bool]:
    """True where the k-th traversed edge points along the traversal"""
    hops = list(zip(order, order[1:]))
    if cyclic:
        hops.append((order[-1], order[0]))
    return [graph.has_edge(u, v) for u, v in hops]


def partition_monotone_runs(graph: DirectedGraph) -> MonotoneRunPartition:
    """
    Partition a path or cycle into maximal monotone runs.

    Raises:
        PreconditionError: not a path or cycle, or a directed cycle
    """
    order, cyclic = path_or_cycle_order(graph)
    forward = edge_directions(graph, order, cyclic)
    if cyclic:
        if all(forward) or not any(forward):
            raise _not_path_or_cycle("a directed cycle has no monotone runs")
        # start at a junction so no run wraps around
        shift = next(k for k in range(len(forward)) if forward[k] != forward[k - 1])
        order = order[shift:] + order[:shift]
        forward = forward[shift:] + forward[:shift]
        walk = order + order[:1]
    else:
        walk = order

    runs: List[Tuple[int, ...]] = []
    start = 0
    for k in range(1, len(forward) + 1):
        if k == len(forward) or forward[k] != forward[start]:
            piece = walk[start:k + 1]
            runs.append(tuple(piece) if forward[start] else tuple(reversed(piece)))
            start = k
    if not forward:
        runs.append(tuple(walk))
    return MonotoneRunPartition(tuple(walk[:len(order)]), cyclic, tuple(runs))
