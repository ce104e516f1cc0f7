"""
Engines for instances whose graph is a directed path or cycle and whose
partial drawing is a set of points with pairwise distinct y-coordinates.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..config import DpConfig
from ..core.graph import DirectedGraph, UpwardEmbedding
from ..core.model import Decision, UpeInstance
from ..exceptions import (
    CapExceededError,
    CapReason,
    InstanceValidationError,
    PreconditionError,
    PreconditionReason,
    ValidationReason,
)
from ..logging import get_logger
from .runs import edge_directions, partition_monotone_runs, path_or_cycle_order
from .table import DpTable

logger = get_logger(__name__)

PATH_FUE = "path-fue"
CYCLE_FUE = "cycle-fue"
PATH_UPE = "path-upe"

SHAPES = ("path", "cycle")


def _precondition(message: str, engine_name: str, reason: PreconditionReason) -> PreconditionError:
    return PreconditionError(message, engine_name=engine_name, engine_type="pathcycle", reason=reason)


@dataclass(frozen=True)
class JunctionChoice:
    """
    An upward embedding of a path or cycle.

    Only inner sources and sinks have two entries in a list, so the
    embedding is one bit per such junction: whether the neighbour preceding
    it in traversal order comes first.

    Attributes:
        order: Vertices in traversal order
        cyclic: Whether the graph is a cycle
        previous_first: The bit per junction vertex
    """
    order: Tuple[int, ...]
    cyclic: bool
    previous_first: Mapping[int, bool]

    @staticmethod
    def junctions(graph: DirectedGraph) -> List[int]:
        return [v for v in range(graph.n) if len(graph.successors(v)) == 2 or len(graph.predecessors(v)) == 2]

    def _neighbours(self, position: int) -> Tuple[int, int]:
        n = len(self.order)
        return self.order[position - 1], self.order[(position + 1) % n]

    @classmethod
    def from_embedding(cls, graph: DirectedGraph, embedding: UpwardEmbedding) -> "JunctionChoice":
        order, cyclic = path_or_cycle_order(graph)
        at = {v: k for k, v in enumerate(order)}
        bits: Dict[int, bool] = {}
        for v in cls.junctions(graph):
            before = order[at[v] - 1]
            listed = embedding.succ[v] if len(embedding.succ[v]) == 2 else embedding.pred[v]
            bits[v] = listed[0] == before
        return cls(order, cyclic, bits)

    @classmethod
    def enumerate(cls, graph: DirectedGraph) -> Iterator["JunctionChoice"]:
        """All embeddings of the graph"""
        order, cyclic = path_or_cycle_order(graph)
        junctions = cls.junctions(graph)
        for bits in product((True, False), repeat=len(junctions)):
            yield cls(order, cyclic, dict(zip(junctions, bits)))

    def to_embedding(self, graph: DirectedGraph) -> UpwardEmbedding:
        at = {v: k for k, v in enumerate(self.order)}
        succ = {v: list(graph.successors(v)) for v in range(graph.n)}
        pred = {v: list(graph.predecessors(v)) for v in range(graph.n)}
        for v, first in self.previous_first.items():
            before, after = self._neighbours(at[v])
            pair = [before, after] if first else [after, before]
            if len(succ[v]) == 2:
                succ[v] = pair
            else:
                pred[v] = pair
        return UpwardEmbedding.from_lists(graph.n, succ, pred)

    def orient(self) -> List[int]:
        """Per position: 1 or 0 for a junction's bit, -1 elsewhere"""
        return [int(self.previous_first[v]) if v in self.previous_first else -1 for v in self.order]


def _check_pins(inst: UpeInstance, engine_name: str):
    if inst.partial_edges:
        raise _precondition("H must be edgeless", engine_name, PreconditionReason.H_HAS_EDGES)
    if not inst.pinned_ys_distinct():
        raise _precondition("pinned y-coordinates must be distinct", engine_name, PreconditionReason.DUPLICATE_Y)


def _check_embedding(inst: UpeInstance, engine_name: str):
    if inst.embedding is None:
        raise _precondition(f"{engine_name} needs an embedding", engine_name, PreconditionReason.EMBEDDING_REQUIRED)
    problem = inst.embedding.mismatch(inst.graph)
    if problem is not None:
        raise InstanceValidationError(
            f"embedding does not match the graph: {problem}",
            engine_name=engine_name,
            engine_type="pathcycle",
            reason=ValidationReason.EMBEDDING_MISMATCH,
        )


def _check_cap(n: int, config: DpConfig, engine_name: str):
    if n > config.max_n:
        logger.warning(f"{engine_name}: refusing {n} vertices, cap is {config.max_n}")
        raise CapExceededError(
            f"dynamic program cap exceeded: {n} vertices > {config.max_n}",
            engine_name=engine_name,
            engine_type="pathcycle",
            reason=CapReason.DP_VERTICES,
            n=n,
            cap=config.max_n,
        )


def pin_ranks(inst: UpeInstance, order: Tuple[int, ...]) -> List[int]:
    """Rank of each pinned y along the order, -1 for unpinned vertices"""
    ys = sorted({p.y for p in inst.drawing.vertex_pos.values()})
    rank = {y: k for k, y in enumerate(ys)}
    return [rank[inst.pos(v).y] if inst.is_pinned(v) else -1 for v in order]


def path_table(inst: UpeInstance, choice: JunctionChoice) -> DpTable:
    """The filled table of an embedded path"""
    forward = edge_directions(inst.graph, choice.order, cyclic=False)
    return DpTable(pin_ranks(inst, choice.order), forward, choice.orient()).fill()


def cycle_table(inst: UpeInstance, choice: JunctionChoice) -> DpTable:
    """
    The filled table of the path going twice around an embedded cycle,
    restricted to subpaths with fewer than n edges.
    """
    n = len(choice.order)
    forward = edge_directions(inst.graph, choice.order, cyclic=True)
    ranks, orient = pin_ranks(inst, choice.order), choice.orient()
    return DpTable(
        [ranks[k % n] for k in range(2 * n - 1)],
        [forward[k % n] for k in range(2 * n - 2)],
        [orient[k % n] for k in range(2 * n - 1)],
        max_span=n - 1,
    ).fill()


def solve_path_fue(inst: UpeInstance, config: Optional[DpConfig] = None) -> Decision:
    """
    Decide extensibility of an embedded path with pinned points.

    On YES with ``keep_witness`` the decision's ``structure`` holds the
    traversal order, the chosen lowest and highest vertex and the table
    entries that decompose the answer.

    Raises:
        PreconditionError: H has edges, pinned y coincide, the graph is not
            a path or no embedding is given
        InstanceValidationError: the embedding does not fit the graph
        CapExceededError: the path is longer than ``config.max_n``
    """
    config = config or DpConfig()
    _check_pins(inst, PATH_FUE)
    _check_embedding(inst, PATH_FUE)
    if inst.n < 2:
        raise _precondition("the path needs an edge", PATH_FUE, PreconditionReason.TOO_SMALL)
    choice = JunctionChoice.from_embedding(inst.graph, inst.embedding)
    if choice.cyclic:
        raise _precondition("graph is a cycle", PATH_FUE, PreconditionReason.NOT_PATH_OR_CYCLE)
    _check_cap(inst.n, config, PATH_FUE)

    table = path_table(inst, choice)
    hits = table.true_entries(0, inst.n - 1)
    logger.debug(f"{PATH_FUE}: {inst.n} vertices, {len(hits)} extreme pairs")
    if not hits:
        return Decision(False, PATH_FUE, notes=["no choice of lowest and highest vertex admits a drawing"])

    structure = None
    if config.keep_witness:
        m, M = hits[0]
        structure = {
            "order": list(choice.order),
            "extremes": [choice.order[m], choice.order[M]],
            "witness": table.explain(0, inst.n - 1, m, M),
        }
    return Decision(True, PATH_FUE, embedding=inst.embedding, structure=structure)


def cycle_extremes(table: DpTable, orient: List[int]) -> Iterator[Tuple[int, int, Tuple[int, int, int, int], Tuple[int, int, int, int]]]:
    """
    Positions (m, M) of a lowest and highest vertex for which a drawing of
    the cycle exists, with the two table entries covering its two arcs.
    """
    n = len(orient)
    for m in range(n):
        for M in range(n):
            if m == M or orient[m] < 0 or orient[M] < 0 or orient[m] == orient[M]:
                continue
            if m < M:
                arcs = ((m, M, m, M), (M, n + m, n + m, M))
            else:
                arcs = ((M, m, m, M), (m, n + M, m, n + M))
            if all(table.entry(*arc) for arc in arcs):
                yield m, M, arcs[0], arcs[1]


def solve_cycle_fue(inst: UpeInstance, config: Optional[DpConfig] = None) -> Decision:
    """
    Decide extensibility of an embedded cycle with pinned points.

    A drawing splits the cycle at its lowest and highest vertex into two
    arcs. Both arcs are looked up in the table of the path going twice
    around the cycle, and the embedding must put the arcs on opposite sides
    at both extremes.

    Raises:
        PreconditionError: H has edges, pinned y coincide, the graph is not
            a cycle or no embedding is given
        InstanceValidationError: the embedding does not fit the graph
        CapExceededError: the cycle is longer than ``config.max_n``
    """
    config = config or DpConfig()
    _check_pins(inst, CYCLE_FUE)
    _check_embedding(inst, CYCLE_FUE)
    choice = JunctionChoice.from_embedding(inst.graph, inst.embedding)
    if not choice.cyclic:
        raise _precondition("graph is a path", CYCLE_FUE, PreconditionReason.NOT_PATH_OR_CYCLE)
    _check_cap(inst.n, config, CYCLE_FUE)
    if not inst.graph.is_acyclic():
        return Decision(False, CYCLE_FUE, notes=["the cycle is directed"])

    table = cycle_table(inst, choice)
    found = next(cycle_extremes(table, choice.orient()), None)
    logger.debug(f"{CYCLE_FUE}: {inst.n} vertices -> {'yes' if found else 'no'}")
    if found is None:
        return Decision(False, CYCLE_FUE, notes=["no choice of lowest and highest vertex admits a drawing"])

    structure = None
    if config.keep_witness:
        m, M, left, right = found
        doubled = choice.order + choice.order[:-1]
        structure = {
            "order": list(doubled),
            "extremes": [choice.order[m], choice.order[M]],
            "witness": [table.explain(*left), table.explain(*right)],
        }
    return Decision(True, CYCLE_FUE, embedding=inst.embedding, structure=structure)


def solve_path_or_cycle_upe(inst: UpeInstance, shape: Optional[str] = None) -> Decision:
    """
    Decide extensibility of a path or cycle with pinned points when the
    embedding is free.

    The answer is YES iff along every maximal monotone run the pinned
    vertices appear with increasing y.

    Args:
        inst: The instance
        shape: "path" or "cycle" to insist on one of them; detected if None

    Raises:
        PreconditionError: H has edges, pinned y coincide, an embedding is
            given, or the graph is not of the requested shape
    """
    _check_pins(inst, PATH_UPE)
    if inst.embedding is not None:
        raise _precondition("the embedding is chosen by the engine", PATH_UPE, PreconditionReason.EMBEDDING_FORBIDDEN)
    if shape is not None and shape not in SHAPES:
        raise ValueError(f"shape must be one of {SHAPES}")
    order, cyclic = path_or_cycle_order(inst.graph)
    found_shape = "cycle" if cyclic else "path"
    if shape is not None and shape != found_shape:
        raise _precondition(f"graph is a {found_shape}", PATH_UPE, PreconditionReason.NOT_PATH_OR_CYCLE)
    if inst.n < 2:
        raise _precondition("the path needs an edge", PATH_UPE, PreconditionReason.TOO_SMALL)
    if cyclic and not inst.graph.is_acyclic():
        return Decision(False, PATH_UPE, notes=["the cycle is directed"])

    partition = partition_monotone_runs(inst.graph)
    for run in partition.runs:
        ys = [inst.pos(v).y for v in run if inst.is_pinned(v)]
        if any(a >= b for a, b in zip(ys, ys[1:])):
            logger.debug(f"{PATH_UPE}: pins decrease along run {run}")
            return Decision(False, PATH_UPE, notes=[f"pins decrease along the monotone run {list(run)}"])
    return Decision(True, PATH_UPE, structure={"shape": found_shape, **partition.to_dict()})
