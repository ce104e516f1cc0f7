"""
Unit tests for st-graph validation, dominance coordinates and the two conditions
"""

from fractions import Fraction
from itertools import permutations, product
from math import prod

import numpy as np
import pytest

from upex import (
    DirectedGraph,
    InstanceValidationError,
    PreconditionError,
    PreconditionReason,
    UpeInstance,
    UpwardEmbedding,
    ValidationReason,
)
from upex.core.graph import rotation_is_planar
from upex.generators import random_embedded_st_graph, random_st_graph
from upex.stgraph import (
    AuxGraph,
    DominanceIndex,
    Relation,
    StGraph,
    check_condition1,
    check_condition2_fixed,
    condition2_violation,
    line_classes,
    pinned_floor,
    pinned_groups,
    st_embedding,
    transitive_edges,
    transitive_reduction,
)

TRIANGLE_EDGES = [(0, 1), (1, 2), (0, 2)]


@pytest.fixture
def triangle_st():
    emb = UpwardEmbedding.from_lists(3, {0: [1, 2], 1: [2]}, {1: [0], 2: [1, 0]})
    return StGraph.build(DirectedGraph.of(3, TRIANGLE_EDGES), emb)


def extreme_path(emb, v, leftmost):
    """The leftmost (or rightmost) incoming path of v followed by its outgoing one, s to t"""
    k = 0 if leftmost else -1
    down = [v]
    while emb.pred[down[-1]]:
        down.append(emb.pred[down[-1]][k])
    up = [v]
    while emb.succ[up[-1]]:
        up.append(emb.succ[up[-1]][k])
    return down[::-1] + up[1:]


def side_of(graph, emb, path, left):
    """Vertices off the monotone path that lie on its left (or right) side"""
    on = set(path)
    seeds = []
    for k, w in enumerate(path):
        for lists, other in ((emb.succ[w], path[k + 1] if k + 1 < len(path) else None),
                             (emb.pred[w], path[k - 1] if k > 0 else None)):
            if other is None:
                continue
            i = lists.index(other)
            seeds.extend(lists[:i] if left else lists[i + 1:])
    found = {x for x in seeds if x not in on}
    stack = list(found)
    while stack:
        x = stack.pop()
        for y in graph.successors(x) + graph.predecessors(x):
            if y not in on and y not in found:
                found.add(y)
                stack.append(y)
    return found


def relations_from_paths(st):
    """Relation of every ordered pair, computed from reachability and extreme paths"""
    g, emb = st.graph, st.embedding
    reach = [g.reachable_from(v) for v in range(g.n)]
    table = {}
    for u in range(g.n):
        left = side_of(g, emb, extreme_path(emb, u, leftmost=True), left=True)
        right = side_of(g, emb, extreme_path(emb, u, leftmost=False), left=False)
        for v in range(g.n):
            if v == u:
                continue
            found = [
                kind for kind, holds in (
                    (Relation.SUCCESSOR, v in reach[u]),
                    (Relation.PREDECESSOR, u in reach[v]),
                    (Relation.LEFT, v in left),
                    (Relation.RIGHT, v in right),
                ) if holds
            ]
            assert len(found) == 1, (u, v, found)
            table[(u, v)] = found[0]
    return table


def small_embeddings(graph, limit=5000):
    """Every upward embedding with poles 0 and 1, when there are few list orders"""
    choices = [
        list(product(permutations(graph.successors(v)), permutations(graph.predecessors(v))))
        for v in range(graph.n)
    ]
    if prod(len(c) for c in choices) > limit:
        return
    for combo in product(*choices):
        emb = UpwardEmbedding(tuple(c[0] for c in combo), tuple(c[1] for c in combo))
        try:
            emb.validate(graph, poles=(0, 1))
        except InstanceValidationError:
            continue
        yield emb


class TestStGraph:
    """Test st-graph validation"""

    def test_diamond(self, diamond, diamond_embedding):
        """One source, one sink, planar lists"""
        st = StGraph.build(diamond, diamond_embedding(1))
        assert (st.s, st.t) == (0, 3)
        assert st.n == 4

    def test_two_sources(self):
        """Several sources are rejected"""
        with pytest.raises(PreconditionError) as exc_info:
            StGraph.build(DirectedGraph.of(3, [(0, 2), (1, 2)]))
        assert exc_info.value.reason == PreconditionReason.NOT_ST_GRAPH

    def test_cycle(self):
        """A directed cycle between the poles is rejected"""
        g = DirectedGraph.of(4, [(0, 1), (1, 2), (2, 1), (2, 3)])
        with pytest.raises(PreconditionError) as exc_info:
            StGraph.build(g)
        assert exc_info.value.reason == PreconditionReason.NOT_ST_GRAPH

    def test_embedding_mismatch(self, diamond):
        """Lists must name the edges"""
        emb = UpwardEmbedding.from_lists(4, {0: [1], 1: [3], 2: [3]}, {1: [0], 2: [0], 3: [1, 2]})
        with pytest.raises(InstanceValidationError) as exc_info:
            StGraph.build(diamond, emb)
        assert exc_info.value.reason == ValidationReason.EMBEDDING_MISMATCH

    def test_poles_off_the_outer_face(self, diamond):
        """Successors and predecessors listed inconsistently are not upward"""
        emb = UpwardEmbedding.from_lists(4, {0: [1, 2], 1: [3], 2: [3]}, {1: [0], 2: [0], 3: [2, 1]})
        with pytest.raises(InstanceValidationError) as exc_info:
            StGraph.build(diamond, emb)
        assert exc_info.value.reason == ValidationReason.EMBEDDING_NOT_PLANAR
        assert StGraph.build(diamond, emb, check_embedding=False).embedding == emb

    def test_default_embedding(self, diamond):
        """networkx's planar embedding is cut into upward lists"""
        emb = st_embedding(diamond, 0, 3)
        assert emb.mismatch(diamond) is None
        assert rotation_is_planar(diamond, emb, poles=(0, 3))
        assert StGraph.build(diamond).with_default_embedding().embedding == emb

    def test_real_st_edge_is_rightmost(self):
        """An existing edge (s, t) bounds the outer face on the right"""
        g = DirectedGraph.of(3, TRIANGLE_EDGES)
        emb = st_embedding(g, 0, 2)
        assert emb.succ[0][-1] == 2
        assert emb.pred[2][-1] == 0


class TestDominance:
    """Test dominance coordinates and the left/right relation"""

    def test_transitive_edges(self, triangle_st):
        """The shortcut beside a path is transitive"""
        assert transitive_edges(triangle_st) == [(0, 2)]
        reduced = transitive_reduction(triangle_st)
        assert reduced.graph.edges == ((0, 1), (1, 2))
        assert reduced.embedding.succ[0] == (1,)

    def test_no_transitive_edges(self, diamond, diamond_embedding):
        """Reduction leaves a reduced graph alone"""
        st = StGraph.build(diamond, diamond_embedding(1))
        assert transitive_edges(st) == []
        assert transitive_reduction(st) is st

    def test_coordinates(self, diamond, diamond_embedding):
        """Reverse postorders from opposite sides"""
        idx = DominanceIndex.build(StGraph.build(diamond, diamond_embedding(1)))
        assert idx.dom_x == (0, 1, 2, 3)
        assert idx.dom_y == (0, 2, 1, 3)
        mirrored = DominanceIndex.build(StGraph.build(diamond, diamond_embedding(2)))
        assert mirrored.dom_x == (0, 2, 1, 3)
        assert mirrored.dom_y == (0, 1, 2, 3)

    def test_relations(self, diamond, diamond_embedding):
        """Paths dominate, incomparable pairs split left and right"""
        idx = DominanceIndex.build(StGraph.build(diamond, diamond_embedding(1)))
        assert idx.relation(0, 3) == Relation.SUCCESSOR
        assert idx.relation(3, 1) == Relation.PREDECESSOR
        assert idx.relation(2, 1) == Relation.LEFT
        assert idx.relation(1, 2) == Relation.RIGHT
        assert idx.is_left_of(1, 2)
        assert not idx.is_left_of(2, 1)
        assert not idx.is_left_of(0, 3)

    def test_transitive_edge_ignored(self, triangle_st):
        """Shortcut edges do not change relations"""
        idx = DominanceIndex.build(triangle_st)
        assert idx.relation(0, 1) == Relation.SUCCESSOR
        assert idx.relation(1, 2) == Relation.SUCCESSOR

    def test_embedding_required(self, diamond):
        """Coordinates come from an embedding"""
        with pytest.raises(PreconditionError) as exc_info:
            DominanceIndex.build(StGraph.build(diamond))
        assert exc_info.value.reason == PreconditionReason.EMBEDDING_REQUIRED

    @pytest.mark.parametrize("seed", range(40))
    def test_relation_matches_extreme_paths(self, seed):
        """Every ordered pair gets exactly the relation its leftmost and rightmost paths give"""
        rng = np.random.default_rng(seed)
        graph, emb = random_embedded_st_graph(rng, int(rng.integers(3, 9)), chord_rate=0.5)
        st = StGraph.build(graph, emb)
        idx = DominanceIndex.build(st)
        for (u, v), expected in relations_from_paths(st).items():
            assert idx.relation(u, v) == expected, (u, v)

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_relation_under_every_embedding(self, n):
        """Relations agree with the path definition under every upward embedding of small graphs"""
        checked = 0
        for seed in range(10):
            graph = random_st_graph(np.random.default_rng(100 * n + seed), n, chord_rate=0.5)
            for emb in small_embeddings(graph):
                st = StGraph.build(graph, emb)
                idx = DominanceIndex.build(st)
                assert all(idx.relation(u, v) == rel for (u, v), rel in relations_from_paths(st).items())
                checked += 1
        assert checked >= 5

    def test_relation_antisymmetric(self):
        """Swapping the pair swaps successor with predecessor and left with right"""
        graph, emb = random_embedded_st_graph(np.random.default_rng(5), 8, chord_rate=0.5)
        idx = DominanceIndex.build(StGraph.build(graph, emb))
        flip = {
            Relation.SUCCESSOR: Relation.PREDECESSOR,
            Relation.PREDECESSOR: Relation.SUCCESSOR,
            Relation.LEFT: Relation.RIGHT,
            Relation.RIGHT: Relation.LEFT,
        }
        for u in range(8):
            for v in range(8):
                if u != v:
                    assert idx.relation(v, u) == flip[idx.relation(u, v)]


class TestConditions:
    """Test the path condition and the left-to-right condition"""

    def test_groups_and_connectors(self, diamond_instance):
        """Same-y pins group by x, consecutive groups get a connector"""
        inst = diamond_instance({0: (0, 0), 2: (0, 1), 1: (1, 1)})
        assert pinned_groups(inst) == [(0,), (2, 1)]
        aux = AuxGraph.build(inst)
        assert aux.connector_count == 1
        assert set(aux.graph.edges) - set(inst.graph.edges) == {(0, 4), (4, 2), (4, 1)}
        assert aux.cycle() is None

    def test_condition1_holds(self, diamond_instance):
        """Pins increasing along paths"""
        assert check_condition1(diamond_instance({1: (0, 1), 2: (1, 1)}))

    def test_condition1_fails(self, diamond_instance):
        """The source pinned above the sink closes a cycle"""
        inst = diamond_instance({0: (0, 5), 3: (0, 1)})
        assert not check_condition1(inst)
        assert AuxGraph.build(inst).cycle() is not None

    def test_condition1_equal_y_on_path(self):
        """A path between same-y pins is a violation too"""
        inst = UpeInstance.build(3, [(0, 1), (1, 2)], positions={0: (0, 0), 2: (1, 0), 1: (0, 1)})
        assert not check_condition1(inst)

    def test_condition2(self, diamond, diamond_embedding, diamond_instance):
        """Pins read left to right must be left to right in the embedding"""
        idx = DominanceIndex.build(StGraph.build(diamond, diamond_embedding(1)))
        good = diamond_instance({1: (0, 1), 2: (1, 1)})
        bad = diamond_instance({1: (1, 1), 2: (0, 1)})
        assert condition2_violation(good, idx) is None
        assert check_condition2_fixed(good, idx)
        assert condition2_violation(bad, idx) == (2, 1)
        assert not check_condition2_fixed(bad, idx)

    def test_edges_not_allowed(self, diamond, diamond_embedding):
        """Both conditions are stated for an edgeless H"""
        inst = UpeInstance.build(
            4, [(0, 1), (0, 2), (1, 3), (2, 3)],
            positions={0: (0, 0), 1: (0, 1)},
            routes={(0, 1): []},
        )
        with pytest.raises(PreconditionError) as exc_info:
            check_condition1(inst)
        assert exc_info.value.reason == PreconditionReason.H_HAS_EDGES
        idx = DominanceIndex.build(StGraph.build(diamond, diamond_embedding(1)))
        with pytest.raises(PreconditionError):
            condition2_violation(inst, idx)

    def test_pinned_floor(self, diamond_instance):
        """Highest pin among strict ancestors"""
        inst = diamond_instance({0: (0, 0), 1: (0, 2)})
        assert pinned_floor(inst) == [None, 0, 0, 2]

    def test_line_classes(self, diamond_instance):
        """Free vertices sit just above their highest pinned ancestor"""
        inst = diamond_instance({1: (0, 1), 2: (1, 1)})
        assert line_classes(inst) == [(0,), (1, 2), (3,)]

    def test_floor_is_fraction(self, diamond_instance):
        """Floors keep the exact pinned heights"""
        inst = diamond_instance({0: (0, "1/3")})
        assert pinned_floor(inst)[3] == Fraction(1, 3)
