"""
SPQR-trees of st-graphs, rooted at the edge (s, t).

The pertinent graph of every node is an st-graph between the node's poles
and is split by the first case that applies:

* a single edge is a Q-node
* a graph with cut vertices is an S-node; its skeleton is the chain of
  poles and cut vertices
* a graph split by its poles is a P-node with one child per split
  component
* otherwise it is an R-node: split pairs other than the poles are
  collapsed into virtual edges until the skeleton is triconnected

Skeleton edges point from the source to the sink of the child's pertinent
graph. The reference edge (s, t) is added for the decomposition whether or
not G has it. Its Q-node is kept as ``SpqrTree.reference``, attached to the
root but outside ``nodes`` and outside the root's skeleton, so skeletons
and P-node child orders only list the pertinent parts of G.
"""

from collections import defaultdict, deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from ..core.graph import Edge
from ..exceptions import PreconditionError, PreconditionReason
from ..logging import get_logger
from .stgraph import StGraph

logger = get_logger(__name__)


class NodeKind(Enum):
    """Kind of an SPQR-tree node"""
    S = "S"
    P = "P"
    Q = "Q"
    R = "R"


@dataclass
class SkeletonEdge:
    """A virtual edge of a skeleton, standing for the child's pertinent graph"""
    tail: int
    head: int
    child: int = -1


@dataclass
class SpqrNode:
    """
    Attributes:
        index: Position in SpqrTree.nodes
        kind: S, P, Q or R
        poles: Source and sink of the pertinent graph
        parent: Index of the parent node, None at the root
        vertices: Skeleton vertices (graph ids)
        skeleton: Skeleton edges other than the one towards the parent
        edge: The graph edge of a Q-node
        size: Number of graph edges in the pertinent graph
    """
    index: int
    kind: NodeKind
    poles: Tuple[int, int]
    parent: Optional[int]
    vertices: Tuple[int, ...]
    skeleton: List[SkeletonEdge] = field(default_factory=list)
    edge: Optional[Edge] = None
    size: int = 1

    @property
    def children(self) -> List[int]:
        return [e.child for e in self.skeleton]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "kind": self.kind.value,
            "poles": list(self.poles),
            "parent": self.parent,
            "vertices": list(self.vertices),
            "skeleton": [[e.tail, e.head, e.child] for e in self.skeleton],
            "edge": list(self.edge) if self.edge is not None else None,
        }


def _orient(part: List[Edge], x: int, y: int) -> Tuple[int, int]:
    """Poles of a split part as (source, sink)"""
    if any(head == x for _, head in part):
        return y, x
    return x, y


def _series_chain(part: List[Edge], a: int, b: int) -> Optional[List[int]]:
    """Poles and cut vertices in path order, or None when there are none"""
    und = nx.Graph(part)
    cuts = set(nx.articulation_points(und))
    if not cuts:
        return None
    order = {v: i for i, v in enumerate(nx.topological_sort(nx.DiGraph(part)))}
    return [a] + sorted(cuts, key=order.__getitem__) + [b]


def _chain_segments(part: List[Edge], chain: List[int]) -> List[List[Edge]]:
    position = {v: i for i, v in enumerate(chain)}
    inner = nx.Graph()
    for u, v in part:
        if u not in position and v not in position:
            inner.add_edge(u, v)
        else:
            for w in (u, v):
                if w not in position:
                    inner.add_node(w)
    component_of: Dict[int, int] = {}
    for k, comp in enumerate(nx.connected_components(inner)):
        for v in comp:
            component_of[v] = k
    touched: Dict[int, int] = {}
    for u, v in part:
        for x, y in ((u, v), (v, u)):
            if x in component_of and y in position:
                k = component_of[x]
                touched[k] = min(touched.get(k, len(chain)), position[y])
    segments: List[List[Edge]] = [[] for _ in range(len(chain) - 1)]
    for u, v in part:
        if u in position and v in position:
            segments[min(position[u], position[v])].append((u, v))
        else:
            w = u if u in component_of else v
            segments[touched[component_of[w]]].append((u, v))
    return segments


def _split_components(part: List[Edge], a: int, b: int) -> List[List[Edge]]:
    """Split components of the pole pair"""
    rest = nx.Graph()
    direct: List[List[Edge]] = []
    for u, v in part:
        if {u, v} == {a, b}:
            direct.append([(u, v)])
            continue
        for w in (u, v):
            if w not in (a, b):
                rest.add_node(w)
        if u not in (a, b) and v not in (a, b):
            rest.add_edge(u, v)
    component_of: Dict[int, int] = {}
    comps = list(nx.connected_components(rest))
    for k, comp in enumerate(comps):
        for v in comp:
            component_of[v] = k
    grouped: List[List[Edge]] = [[] for _ in comps]
    for u, v in part:
        if {u, v} == {a, b}:
            continue
        w = u if u in component_of else v
        grouped[component_of[w]].append((u, v))
    return direct + grouped


class _RigidCollapse:
    """Collapse split pairs of a biconnected pertinent graph into virtual edges"""

    def __init__(self, part: List[Edge], a: int, b: int):
        self.a, self.b = a, b
        self.pieces: Dict[int, Tuple[int, int, List[Edge]]] = {k: (u, v, [(u, v)]) for k, (u, v) in enumerate(part)}
        self.next_key = len(part)

    def run(self) -> List[Tuple[int, int, List[Edge]]]:
        while True:
            self._merge_parallel()
            found = self._separation()
            if found is None:
                break
            x, y, keys = found
            self._collapse(x, y, keys)
        return [self.pieces[k] for k in sorted(self.pieces)]

    def _collapse(self, x: int, y: int, keys: Set[int]) -> None:
        edges = [e for k in sorted(keys) for e in self.pieces.pop(k)[2]]
        tail, head = _orient(edges, x, y)
        self.pieces[self.next_key] = (tail, head, edges)
        self.next_key += 1

    def _merge_parallel(self) -> None:
        by_pair: Dict[FrozenSet[int], List[int]] = defaultdict(list)
        for k, (u, v, _) in self.pieces.items():
            by_pair[frozenset((u, v))].append(k)
        for pair, keys in by_pair.items():
            if len(keys) > 1:
                u, v, _ = self.pieces[keys[0]]
                self._collapse(u, v, set(keys))

    def _separation(self) -> Optional[Tuple[int, int, Set[int]]]:
        h = nx.Graph()
        for u, v, _ in self.pieces.values():
            h.add_edge(u, v)
        h.add_edge(self.a, self.b)
        for x in sorted(h.nodes):
            without = h.copy()
            without.remove_node(x)
            for y in sorted(nx.articulation_points(without)):
                keys = self._outside(h, x, y)
                if keys:
                    return x, y, keys
        return None

    def _outside(self, h: nx.Graph, x: int, y: int) -> Set[int]:
        """Pieces on the far side of {x, y} from the reference edge"""
        cut = h.copy()
        cut.remove_nodes_from((x, y))
        anchors = {self.a, self.b} - {x, y}
        far: Set[int] = set()
        for comp in nx.connected_components(cut):
            if not comp & anchors:
                far |= comp
        if not far:
            return set()
        keys = set()
        for k, (u, v, _) in self.pieces.items():
            if u in far or v in far or {u, v} == {x, y}:
                keys.add(k)
        return keys


@dataclass
class SpqrTree:
    """
    SPQR-tree of an st-graph rooted at the reference edge (s, t).

    Attributes:
        nodes: All nodes; parents precede their children
        root: Index of the root node
        s, t: Poles of the whole graph
        reference_is_real: Whether (s, t) is an edge of the graph
        reference: Q-node of the reference edge (s, t), a neighbour of the
            root with index -1; None when the whole graph is that edge
        lr: Per P-node, required left-to-right relations between its
            skeleton edges (filled by the variable-embedding engine)
        preserve, flip: R-nodes whose skeleton must keep or mirror its
            embedding (filled by the variable-embedding engine)
    """
    nodes: List[SpqrNode]
    root: int
    s: int
    t: int
    reference_is_real: bool
    lr: Dict[int, nx.DiGraph] = field(default_factory=dict)
    preserve: Set[int] = field(default_factory=set)
    flip: Set[int] = field(default_factory=set)
    reference: Optional[SpqrNode] = field(init=False, default=None)

    def __post_init__(self):
        if self.nodes[self.root].edge != (self.s, self.t):
            self.reference = SpqrNode(-1, NodeKind.Q, (self.s, self.t), self.root, (self.s, self.t), edge=(self.s, self.t))
        self._depth: List[int] = [0] * len(self.nodes)
        for node in self.nodes:
            if node.parent is not None:
                self._depth[node.index] = self._depth[node.parent] + 1
        self._allocation: Dict[int, int] = {}
        for node in self.nodes:
            for v in node.vertices:
                self._allocation.setdefault(v, node.index)
        self._build_lca()
        self._build_lifting()

    # lowest common ancestors: Euler tour and sparse table over depths
    def _build_lca(self) -> None:
        euler: List[int] = []
        first: Dict[int, int] = {}
        stack: List[Tuple[int, int]] = [(self.root, 0)]
        while stack:
            node, i = stack.pop()
            if i == 0:
                first[node] = len(euler)
            euler.append(node)
            children = self.nodes[node].children
            if i < len(children):
                stack.append((node, i + 1))
                stack.append((children[i], 0))
        self._first = first
        table = [euler]
        span = 1
        while 2 * span <= len(euler):
            prev = table[-1]
            row = []
            for i in range(len(euler) - 2 * span + 1):
                p, q = prev[i], prev[i + span]
                row.append(p if self._depth[p] <= self._depth[q] else q)
            table.append(row)
            span *= 2
        self._table = table

    def _build_lifting(self) -> None:
        up = [[node.parent if node.parent is not None else node.index for node in self.nodes]]
        while (1 << len(up)) < len(self.nodes):
            prev = up[-1]
            up.append([prev[prev[i]] for i in range(len(self.nodes))])
        self._up = up

    @property
    def size(self) -> int:
        return len(self.nodes)

    def depth(self, node: int) -> int:
        return self._depth[node]

    def proper_allocation(self, v: int) -> int:
        """Highest node whose skeleton contains v"""
        return self._allocation[v]

    def lca(self, a: int, b: int) -> int:
        i, j = sorted((self._first[a], self._first[b]))
        k = (j - i + 1).bit_length() - 1
        p, q = self._table[k][i], self._table[k][j - (1 << k) + 1]
        return p if self._depth[p] <= self._depth[q] else q

    def ancestor(self, node: int, depth: int) -> int:
        """Ancestor of ``node`` at the given depth"""
        lift = self._depth[node] - depth
        k = 0
        while lift:
            if lift & 1:
                node = self._up[k][node]
            lift >>= 1
            k += 1
        return node

    def representative(self, node: int, v: int) -> Tuple[str, int]:
        """
        How v shows up in the skeleton of ``node``: ``("vertex", v)`` or
        ``("edge", i)`` for the skeleton edge whose pertinent graph holds v.
        """
        if v in self.nodes[node].vertices:
            return "vertex", v
        child = self.ancestor(self._allocation[v], self._depth[node] + 1)
        for i, e in enumerate(self.nodes[node].skeleton):
            if e.child == child:
                return "edge", i
        raise ValueError(f"vertex {v} is not in the pertinent graph of node {node}")

    def pertinent_vertices(self, node: int) -> Set[int]:
        out: Set[int] = set()
        queue = deque([node])
        while queue:
            mu = self.nodes[queue.popleft()]
            out.update(mu.vertices)
            queue.extend(mu.children)
        return out

    def kind_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = defaultdict(int)
        for node in self.nodes:
            counts[node.kind.value] += 1
        return dict(counts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "root": self.root,
            "reference_is_real": self.reference_is_real,
            "reference": self.reference.to_dict() if self.reference is not None else None,
            "nodes": [node.to_dict() for node in self.nodes],
        }


def build_spqr_tree(st: StGraph) -> SpqrTree:
    """
    Decompose an st-graph with at least one edge.

    Raises:
        PreconditionError: the graph has fewer than two vertices
    """
    if st.n < 2:
        raise PreconditionError(
            "SPQR-trees need at least two vertices",
            engine_type="stgraph",
            reason=PreconditionReason.TOO_SMALL,
        )
    s, t = st.s, st.t
    real = st.graph.has_edge(s, t)
    body = [e for e in st.graph.edges if e != (s, t)]
    nodes: List[SpqrNode] = []
    if not body:
        nodes.append(SpqrNode(0, NodeKind.Q, (s, t), None, (s, t), edge=(s, t)))
        return SpqrTree(nodes, 0, s, t, real)

    # (part, poles, parent, skeleton slot)
    tasks = deque([(body, (s, t), None, -1)])
    while tasks:
        part, (a, b), parent, slot = tasks.popleft()
        index = len(nodes)
        if parent is not None:
            nodes[parent].skeleton[slot].child = index
        if len(part) == 1:
            nodes.append(SpqrNode(index, NodeKind.Q, (a, b), parent, (a, b), edge=part[0]))
            continue

        chain = _series_chain(part, a, b)
        if chain is not None:
            pieces = [(chain[i], chain[i + 1], seg) for i, seg in enumerate(_chain_segments(part, chain))]
            node = SpqrNode(index, NodeKind.S, (a, b), parent, tuple(chain))
        else:
            comps = _split_components(part, a, b)
            if len(comps) >= 2:
                pieces = [(a, b, comp) for comp in comps]
                node = SpqrNode(index, NodeKind.P, (a, b), parent, (a, b))
            else:
                pieces = _RigidCollapse(part, a, b).run()
                vertices = sorted({v for u, w, _ in pieces for v in (u, w)})
                node = SpqrNode(index, NodeKind.R, (a, b), parent, tuple(vertices))
        node.size = len(part)
        nodes.append(node)
        for k, (u, w, piece) in enumerate(pieces):
            node.skeleton.append(SkeletonEdge(u, w))
            tasks.append((piece, (u, w), index, k))

    tree = SpqrTree(nodes, 0, s, t, real)
    logger.debug(f"SPQR-tree with {tree.size} nodes {tree.kind_counts()}")
    return tree
