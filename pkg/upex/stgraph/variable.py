"""
Variable-embedding engine for upward planar st-graphs.

Every upward embedding of an st-graph is obtained from its SPQR-tree by
permuting the children of P-nodes and mirroring R-node skeletons. Each
pair of consecutive same-y pins (u left of v) constrains one node, the
lowest common ancestor of their proper allocation nodes:

* at an S-node, or when u or v is a pole of the graph, u and v are
  comparable and the instance is rejected
* at a P-node, the child holding u must precede the child holding v
* at an R-node, the skeleton either already puts u left of v (preserve)
  or does so once mirrored (flip)

The instance is extensible iff Condition 1 holds, every P-node's
constraint digraph is acyclic and no R-node must be both preserved and
flipped. The embedding assembled from these choices is checked again with
the fixed-embedding engine.
"""

from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..config import StConfig
from ..core.graph import DirectedGraph, Edge, UpwardEmbedding
from ..core.model import Decision, UpeInstance
from ..exceptions import PreconditionError, PreconditionReason, UpexError
from ..logging import get_logger
from .conditions import check_condition1, pinned_groups
from .dominance import DominanceIndex
from .fixed import eliminated_st, solve_st_fue
from .spqr import NodeKind, SpqrTree, build_spqr_tree
from .stgraph import StGraph, st_embedding

logger = get_logger(__name__)

ENGINE_NAME = "st-upe"


class RigidSkeleton:
    """
    An R-node skeleton with a dummy vertex on every skeleton edge, embedded
    once and indexed for left/right queries.
    """

    def __init__(self, tree: SpqrTree, node: int):
        mu = tree.nodes[node]
        self.local = {v: i for i, v in enumerate(mu.vertices)}
        base = len(mu.vertices)
        self.dummy = [base + k for k in range(len(mu.skeleton))]
        edges: List[Edge] = []
        for e, d in zip(mu.skeleton, self.dummy):
            edges.append((self.local[e.tail], d))
            edges.append((d, self.local[e.head]))
        graph = DirectedGraph(base + len(self.dummy), tuple(edges))
        s, t = self.local[mu.poles[0]], self.local[mu.poles[1]]
        self.embedding = st_embedding(graph, s, t)
        self.index = DominanceIndex.build(StGraph(graph, s, t, self.embedding))

    def element(self, rep: Tuple[str, int]) -> int:
        kind, value = rep
        return self.local[value] if kind == "vertex" else self.dummy[value]


class EmbeddingConstraints:
    """Collects the P-node orders and R-node orientations the pins demand"""

    def __init__(self, tree: SpqrTree):
        self.tree = tree
        self.rigid: Dict[int, RigidSkeleton] = {}
        self.reason: Optional[str] = None

    def skeleton(self, node: int) -> RigidSkeleton:
        if node not in self.rigid:
            self.rigid[node] = RigidSkeleton(self.tree, node)
        return self.rigid[node]

    def add(self, u: int, v: int) -> bool:
        """Require u left of v; False when this is impossible"""
        tree = self.tree
        if {u, v} & {tree.s, tree.t}:
            self.reason = f"vertex {u if u in (tree.s, tree.t) else v} is a pole of the graph"
            return False
        node = tree.lca(tree.proper_allocation(u), tree.proper_allocation(v))
        kind = tree.nodes[node].kind
        ru, rv = tree.representative(node, u), tree.representative(node, v)

        if kind is NodeKind.P and ru[0] == "edge" and rv[0] == "edge":
            lr = tree.lr.setdefault(node, nx.DiGraph())
            lr.add_edge(ru[1], rv[1])
            return True
        if kind is NodeKind.R:
            sk = self.skeleton(node)
            if sk.index.is_left_of(sk.element(ru), sk.element(rv)):
                tree.preserve.add(node)
            elif sk.index.is_left_of(sk.element(rv), sk.element(ru)):
                tree.flip.add(node)
            else:
                self.reason = f"vertices {u} and {v} are comparable"
                return False
            if node in tree.preserve and node in tree.flip:
                self.reason = f"R-node {node} must be both kept and mirrored"
                return False
            return True
        self.reason = f"vertices {u} and {v} are comparable"
        return False

    def consistent(self) -> bool:
        for node, lr in self.tree.lr.items():
            if not nx.is_directed_acyclic_graph(lr):
                self.reason = f"P-node {node} has cyclic order constraints"
                return False
        return True


def assemble_embedding(tree: SpqrTree, constraints: EmbeddingConstraints, n: int) -> UpwardEmbedding:
    """Embedding of the whole graph from the chosen child orders and mirrors"""
    out_at: Dict[int, List[Edge]] = {}
    in_at: Dict[int, List[Edge]] = {}
    succ: Dict[int, List[Edge]] = {}
    pred: Dict[int, List[Edge]] = {}

    for node in reversed(tree.nodes):
        i = node.index
        children = node.children
        if node.kind is NodeKind.Q:
            out_at[i], in_at[i] = [node.edge], [node.edge]
        elif node.kind is NodeKind.S:
            out_at[i], in_at[i] = out_at[children[0]], in_at[children[-1]]
            for k in range(1, len(node.vertices) - 1):
                succ[node.vertices[k]] = out_at[children[k]]
                pred[node.vertices[k]] = in_at[children[k - 1]]
        elif node.kind is NodeKind.P:
            lr = tree.lr.get(i, nx.DiGraph())
            lr.add_nodes_from(range(len(children)))
            order = list(nx.lexicographical_topological_sort(lr))
            out_at[i] = [e for k in order for e in out_at[children[k]]]
            in_at[i] = [e for k in order for e in in_at[children[k]]]
        else:
            sk = constraints.skeleton(i)
            emb = sk.embedding.mirrored() if i in tree.flip else sk.embedding
            slot = {d: k for k, d in enumerate(sk.dummy)}
            for v, lv in sk.local.items():
                outs = [e for d in emb.succ[lv] for e in out_at[children[slot[d]]]]
                ins = [e for d in emb.pred[lv] for e in in_at[children[slot[d]]]]
                if v == node.poles[0]:
                    out_at[i] = outs
                elif v == node.poles[1]:
                    in_at[i] = ins
                else:
                    succ[v], pred[v] = outs, ins

    root = tree.root
    s, t = tree.s, tree.t
    succ[s] = list(out_at[root])
    pred[t] = list(in_at[root])
    if tree.reference_is_real and tree.nodes[root].edge != (s, t):
        succ[s].insert(0, (s, t))
        pred[t].insert(0, (s, t))
    return UpwardEmbedding.from_lists(
        n,
        {v: [e[1] for e in es] for v, es in succ.items()},
        {v: [e[0] for e in es] for v, es in pred.items()},
    )


def solve_st_upe(inst: UpeInstance, config: Optional[StConfig] = None, witness: bool = True) -> Decision:
    """
    Decide extensibility of an st-graph instance over all upward embeddings.

    On YES the decision carries the embedding found and, with ``witness``,
    the drawing the fixed-embedding engine builds for it.

    Raises:
        PreconditionError: the graph is not an st-graph, or an embedding is
            prescribed
    """
    config = config or StConfig()
    if inst.embedding is not None:
        raise PreconditionError(
            "the variable-embedding engine chooses the embedding itself",
            engine_name=ENGINE_NAME,
            engine_type="stgraph",
            reason=PreconditionReason.EMBEDDING_FORBIDDEN,
        )
    st, work, emap = eliminated_st(inst, config, ENGINE_NAME)

    if not check_condition1(work):
        return Decision(False, ENGINE_NAME, notes=["a directed path runs against the pinned y order"])

    if work.n < 2:
        embedding = UpwardEmbedding.from_lists(work.n, {}, {})
        tree = None
    else:
        tree = build_spqr_tree(st)
        constraints = EmbeddingConstraints(tree)
        for group in pinned_groups(work):
            for u, v in zip(group, group[1:]):
                if not constraints.add(u, v):
                    logger.debug(f"{ENGINE_NAME}: rejected, {constraints.reason}")
                    return Decision(False, ENGINE_NAME, notes=[constraints.reason])
        if not constraints.consistent():
            logger.debug(f"{ENGINE_NAME}: rejected, {constraints.reason}")
            return Decision(False, ENGINE_NAME, notes=[constraints.reason])
        embedding = assemble_embedding(tree, constraints, work.n)

    if not emap.is_identity:
        embedding = emap.contract_embedding(embedding)
    check = solve_st_fue(inst.with_embedding(embedding), config, witness=witness)
    if not check.answer:
        raise UpexError(
            "assembled embedding does not admit an extension",
            engine_name=ENGINE_NAME,
            engine_type="stgraph",
            notes=check.notes,
        )
    structure = None
    if tree is not None:
        structure = {
            "spqr": tree.kind_counts(),
            "flipped": sorted(tree.flip),
            "p_orders": {str(k): sorted(lr.edges) for k, lr in tree.lr.items()},
        }
    logger.debug(f"{ENGINE_NAME}: {inst.n} vertices -> yes")
    return Decision(
        True,
        ENGINE_NAME,
        drawing=check.drawing,
        embedding=embedding,
        structure=structure,
        notes=list(check.notes),
    )
