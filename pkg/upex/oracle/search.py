"""
Exhaustive certificate search.

The search builds the certificate line by line from the bottom. Its state
is the set of placed vertices plus the left-to-right sequence of open
edges (tail placed, head not) just above the topmost line. A step places
one class on a new line: every open edge ending in the class must form one
contiguous block per head, the block collapses to its head, class vertices
without incoming edges may enter anywhere, and the outgoing edges of the
new vertices open in every possible order (or in successor-list order when
the embedding is fixed).

Classes are canonical. An unpinned vertex always gets a line of its own;
nudging a free vertex off a shared line never breaks a drawing. All
unplaced pinned vertices of the lowest remaining pinned y form one class
placed at once, and pinned lines are placed in increasing y.
"""

from itertools import permutations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from ..core.geometry import route_x_at
from ..core.graph import Edge
from ..core.model import UpeInstance
from ..logging import get_logger
from .certificate import Element

logger = get_logger(__name__)

Frontier = Tuple[Edge, ...]
Line = Tuple[Tuple[int, ...], Tuple[Element, ...]]


def _insertions(base: Sequence[Element], extra: Sequence[int]) -> Iterator[List[Element]]:
    """Every arrangement of ``base`` (order kept) with ``extra`` inserted anywhere"""
    if not extra:
        yield list(base)
        return
    head, rest = extra[0], extra[1:]
    for arranged in _insertions(base, rest):
        for i in range(len(arranged) + 1):
            yield arranged[:i] + [head] + arranged[i:]


class CertificateSearch:
    """
    Depth-first search for a certificate of a straight-edged instance.

    The instance must have straight H-edges (bends subdivided); the
    oracle takes care of that before searching.
    """

    def __init__(self, inst: UpeInstance):
        self.inst = inst
        self.graph = inst.graph
        self.pos = inst.drawing.vertex_pos
        self.routes = inst.drawing.edge_routes
        self.embedding = inst.embedding

        by_y: Dict = {}
        for v in sorted(inst.partial_vertices):
            by_y.setdefault(self.pos[v].y, []).append(v)
        self.pinned_lines: List[Tuple[int, ...]] = [tuple(by_y[y]) for y in sorted(by_y)]
        self.free = [v for v in range(self.graph.n) if v not in inst.partial_vertices]

        self.failed: Set[Tuple[FrozenSet[int], Frontier]] = set()
        self.explored = 0

    def run(self) -> Optional[List[Line]]:
        """Lines (class, sigma) from bottom to top, or None when no certificate exists"""
        lines: List[Line] = []
        found = self._extend(frozenset(), (), 0, lines)
        logger.debug(f"certificate search explored {self.explored} states, found={found}")
        return lines if found else None

    def _available(self, v: int, placed: FrozenSet[int]) -> bool:
        return all(u in placed for u in self.graph.predecessors(v))

    def _extend(self, placed: FrozenSet[int], frontier: Frontier, next_pinned: int, lines: List[Line]) -> bool:
        if len(placed) == self.graph.n:
            return not frontier
        key = (placed, frontier)
        if key in self.failed:
            return False
        self.explored += 1

        classes: List[Tuple[Tuple[int, ...], bool]] = []
        if next_pinned < len(self.pinned_lines):
            pinned_class = self.pinned_lines[next_pinned]
            if all(self._available(v, placed) for v in pinned_class):
                classes.append((pinned_class, True))
        for v in self.free:
            if v not in placed and self._available(v, placed):
                classes.append(((v,), False))

        for cls, is_pinned in classes:
            now_placed = placed | frozenset(cls)
            step = next_pinned + 1 if is_pinned else next_pinned
            for sigma in self._lines_for(frontier, cls, is_pinned):
                for opened in self._open_edges(sigma, cls):
                    lines.append((cls, tuple(sigma)))
                    if self._extend(now_placed, opened, step, lines):
                        return True
                    lines.pop()

        self.failed.add(key)
        return False

    def _lines_for(self, frontier: Frontier, cls: Tuple[int, ...], is_pinned: bool) -> Iterator[List[Element]]:
        members = set(cls)
        blocks: Dict[int, List[int]] = {}
        for idx, e in enumerate(frontier):
            w = e[1]
            if w not in members:
                continue
            block = blocks.setdefault(w, [])
            if block and block[-1] != idx - 1:
                return
            block.append(idx)

        for w, block in blocks.items():
            if len(block) != len(self.graph.predecessors(w)):
                return
            if self.embedding is not None:
                tails = tuple(frontier[i][0] for i in block)
                if tails != self.embedding.pred[w]:
                    return

        base: List[Element] = []
        for idx, e in enumerate(frontier):
            w = e[1]
            if w in blocks:
                if blocks[w][0] == idx:
                    base.append(w)
            else:
                base.append(e)
        sources = [w for w in cls if w not in blocks]

        for arranged in _insertions(base, sources):
            if is_pinned and not self._anchors_ordered(arranged, self.pos[cls[0]].y):
                continue
            yield arranged

    def _anchors_ordered(self, arranged: Sequence[Element], y) -> bool:
        last = None
        for item in arranged:
            if isinstance(item, tuple):
                if item not in self.routes:
                    continue
                x = route_x_at(self.routes[item], y)
            else:
                x = self.pos[item].x
            if last is not None and not last < x:
                return False
            last = x
        return True

    def _open_edges(self, sigma: Sequence[Element], cls: Tuple[int, ...]) -> Iterator[Frontier]:
        """Frontiers above the new line, one per choice of outgoing edge orders"""
        choices: List[List[Tuple[Edge, ...]]] = []
        for item in sigma:
            if isinstance(item, tuple):
                choices.append([(item,)])
                continue
            if self.embedding is not None:
                outs = self.embedding.succ[item]
                choices.append([tuple((item, w) for w in outs)])
            else:
                outs = self.graph.successors(item)
                choices.append([tuple((item, w) for w in p) for p in permutations(outs)])
        for picked in product(*choices):
            yield tuple(e for group in picked for e in group)
