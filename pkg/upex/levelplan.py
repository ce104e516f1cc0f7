"""
Level planarity for graphs with one vertex per level.

The sweep visits the levels bottom-up and keeps the left-to-right sequence
of open edges as a sequence of blocks. A block holds open edges leaving
one vertex whose relative order has not been decided yet; it is refined
only when a later vertex needs some of its edges at one end. At a level,
the incoming edges of the vertex must occupy consecutive positions and
collapse into it; a vertex without incoming edges may enter between two
blocks or split a block in two. Its outgoing edges then open as a fresh
block. The sweep backtracks over these choices and memoizes dead states.

Solving an edgeless instance with pairwise distinct pinned y reduces to
this test: levels are the y ranks and the x-coordinates are irrelevant
once every line holds a single vertex.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Set, Tuple, Union

import networkx as nx

from .core.graph import DirectedGraph, Edge
from .core.model import Decision, UpeInstance
from .core.verify import verify_drawing
from .exceptions import PreconditionError, PreconditionReason, UpexError
from .logging import get_logger
from .oracle.certificate import Certificate
from .oracle.materialize import materialize_drawing
from .transforms.olp import OrderedLevelGraph, upe_to_olp

logger = get_logger(__name__)

ENGINE_NAME = "olp"

Block = FrozenSet[Edge]
Item = Union[Block, int]


def _precondition(message: str, reason: PreconditionReason) -> PreconditionError:
    return PreconditionError(message, engine_name=ENGINE_NAME, engine_type="levelplan", reason=reason)


@dataclass(frozen=True)
class LevelGraphSingleton:
    """
    A directed graph with a distinct level per vertex.

    Attributes:
        graph: The directed graph
        level: Level of every vertex; injective, increasing along edges
    """
    graph: DirectedGraph
    level: Tuple[int, ...]

    def __post_init__(self):
        if len(self.level) != self.graph.n:
            raise _precondition("every vertex needs a level", PreconditionReason.NOT_LEVELED)
        if len(set(self.level)) != len(self.level):
            raise _precondition("levels must be pairwise distinct", PreconditionReason.NOT_LEVELED)
        for u, v in self.graph.edges:
            if not self.level[u] < self.level[v]:
                raise _precondition(f"edge {(u, v)} does not go up a level", PreconditionReason.NOT_LEVELED)

    @property
    def order(self) -> Tuple[int, ...]:
        """Vertices from the lowest level to the highest"""
        return tuple(sorted(range(self.graph.n), key=lambda v: self.level[v]))

    @classmethod
    def from_ordered(cls, olg: OrderedLevelGraph) -> "LevelGraphSingleton":
        return cls(olg.graph, tuple(olg.level))

    @classmethod
    def from_instance(cls, inst: UpeInstance) -> "LevelGraphSingleton":
        """Levels are the ranks of the pinned y-coordinates of a fully pinned instance"""
        return cls.from_ordered(upe_to_olp(inst))


def _present(*blocks: Block) -> Tuple[Block, ...]:
    return tuple(b for b in blocks if b)


def _tail(block: Block) -> int:
    return next(iter(block))[0]


class LevelSweep:
    """Backtracking sweep over the levels of a LevelGraphSingleton"""

    def __init__(self, lg: LevelGraphSingleton):
        self.lg = lg
        self.graph = lg.graph
        self.order = lg.order
        self.failed: Set[Tuple[int, Tuple[Block, ...]]] = set()
        self.explored = 0

    def run(self) -> Optional[List[Tuple[Item, ...]]]:
        """Per level, the arranged sequence (blocks around the vertex), or None"""
        n = len(self.order)
        if n == 0:
            return []
        trace: List[Tuple[Item, ...]] = []
        # explicit stack of (level index, open blocks, pending arrangements)
        stack: List[Tuple[int, Tuple[Block, ...], Iterator[Tuple[Item, ...]]]] = [
            (0, (), self._arrangements((), self.order[0]))
        ]
        while stack:
            level, seq, pending = stack[-1]
            arranged = next(pending, None)
            del trace[level:]
            if arranged is None:
                self.failed.add((level, seq))
                stack.pop()
                continue
            trace.append(arranged)
            opened = self._opened(arranged, self.order[level])
            if level + 1 == n:
                if not opened:
                    logger.debug(f"level sweep explored {self.explored} states")
                    return trace
                continue
            if (level + 1, opened) in self.failed:
                continue
            self.explored += 1
            stack.append((level + 1, opened, self._arrangements(opened, self.order[level + 1])))
        logger.debug(f"level sweep explored {self.explored} states, no order")
        return None

    def _opened(self, arranged: Tuple[Item, ...], v: int) -> Tuple[Block, ...]:
        out = frozenset((v, w) for w in self.graph.successors(v))
        blocks: List[Block] = []
        for item in arranged:
            if isinstance(item, int):
                if out:
                    blocks.append(out)
            else:
                blocks.append(item)
        return tuple(blocks)

    def _arrangements(self, seq: Tuple[Block, ...], v: int) -> Iterator[Tuple[Item, ...]]:
        """Ways to place v on its level, as blocks with v in between"""
        incoming = frozenset((u, v) for u in self.graph.predecessors(v))
        if not incoming:
            for gap in range(len(seq) + 1):
                yield seq[:gap] + (v,) + seq[gap:]
            for k, block in enumerate(seq):
                members = sorted(block)
                for size in range(1, len(members)):
                    for left in combinations(members, size):
                        left_block = frozenset(left)
                        yield seq[:k] + (left_block, v, block - left_block) + seq[k + 1:]
            return

        touched = [k for k, block in enumerate(seq) if block & incoming]
        if not touched:
            return
        a, b = touched[0], touched[-1]
        if touched != list(range(a, b + 1)):
            return
        if sum(len(seq[k] & incoming) for k in touched) != len(incoming):
            return
        if any(not seq[k] <= incoming for k in range(a + 1, b)):
            return

        if a == b:
            rest = sorted(seq[a] - incoming)
            for size in range(len(rest) + 1):
                for left in combinations(rest, size):
                    left_block = frozenset(left)
                    right_block = frozenset(rest) - left_block
                    yield seq[:a] + _present(left_block) + (v,) + _present(right_block) + seq[a + 1:]
            return
        # one edge into v per tail, so the boundary blocks give up exactly one edge
        yield seq[:a] + _present(seq[a] - incoming) + (v,) + _present(seq[b] - incoming) + seq[b + 1:]


def _resolve_orders(graph: DirectedGraph, trace: List[Tuple[Item, ...]], order: Tuple[int, ...]) -> Dict[Edge, int]:
    """
    Rank every edge among the out-edges of its tail, consistently with all
    block sequences of the sweep.
    """
    before = nx.DiGraph()
    before.add_nodes_from(graph.edges)
    for arranged, v in zip(trace, order):
        blocks: List[Block] = []
        for item in arranged:
            if isinstance(item, int):
                # edges collapsing into v sit where v is
                blocks.extend(frozenset([(u, v)]) for u in graph.predecessors(v))
            else:
                blocks.append(item)
        # only blocks sharing a tail constrain each other
        last_seen: Dict[int, Block] = {}
        for block in blocks:
            u = _tail(block)
            if u in last_seen:
                for e in last_seen[u]:
                    for f in block:
                        before.add_edge(e, f)
            last_seen[u] = block

    rank: Dict[Edge, int] = {}
    for position, e in enumerate(nx.lexicographical_topological_sort(before)):
        rank[e] = position
    return rank


def witness_lines(lg: LevelGraphSingleton, trace: List[Tuple[Item, ...]]) -> List[Tuple[Tuple[int, ...], Tuple[Any, ...]]]:
    """Concrete (vertex, left-to-right order) lines from a successful sweep"""
    rank = _resolve_orders(lg.graph, trace, lg.order)
    lines = []
    for arranged, v in zip(trace, lg.order):
        sigma: List[Any] = []
        for item in arranged:
            if isinstance(item, int):
                sigma.append(item)
            else:
                sigma.extend(sorted(item, key=rank.__getitem__))
        lines.append(((v,), tuple(sigma)))
    return lines


def is_level_planar_singleton(lg: LevelGraphSingleton) -> Decision:
    """
    Decide level planarity of a graph with one vertex per level.

    On YES the decision's ``structure`` lists, per level from the bottom,
    the vertex and the left-to-right order of it and the edges crossing its
    line.
    """
    trace = LevelSweep(lg).run()
    if trace is None:
        return Decision(False, ENGINE_NAME)
    lines = witness_lines(lg, trace)
    structure = {
        "levels": [
            {"vertex": cls[0], "order": [list(x) if isinstance(x, tuple) else x for x in sigma]}
            for cls, sigma in lines
        ]
    }
    return Decision(True, ENGINE_NAME, certificate=Certificate.from_lines(lines), structure=structure)


def solve_upe_edgeless_distinct_y(inst: UpeInstance, materialize: bool = True) -> Decision:
    """
    Decide a fully pinned instance with edgeless H and distinct pinned y.

    Args:
        inst: The instance
        materialize: Draw the YES witness along the sweep orders and check it

    Raises:
        PreconditionError: H has edges, a vertex is unpinned, two pinned y
            coincide, or an embedding is prescribed
    """
    if inst.partial_edges:
        raise _precondition("H must be edgeless", PreconditionReason.H_HAS_EDGES)
    if not inst.fully_pinned:
        raise _precondition("every vertex must be pinned", PreconditionReason.NOT_FULLY_PINNED)
    if not inst.pinned_ys_distinct():
        raise _precondition("pinned y-coordinates must be distinct", PreconditionReason.DUPLICATE_Y)
    if inst.embedding is not None:
        raise _precondition("the level sweep has no fixed embedding", PreconditionReason.EMBEDDING_FORBIDDEN)

    olg = upe_to_olp(inst)
    downward = olg.downward_edges()
    if downward:
        logger.debug(f"olp: edge {downward[0]} points downward")
        return Decision(False, ENGINE_NAME, notes=[f"edge {downward[0]} points downward"])

    decision = is_level_planar_singleton(LevelGraphSingleton.from_ordered(olg))
    if decision.answer and materialize:
        drawing = materialize_drawing(inst, decision.certificate.lines())
        if not verify_drawing(inst, drawing):
            raise UpexError(
                "level sweep witness failed verification",
                engine_name=ENGINE_NAME,
                engine_type="levelplan",
            )
        decision.drawing = drawing
    logger.debug(f"olp: {inst.n} vertices -> {decision.label}")
    return decision
