"""
Integration tests: transforms keep the oracle's answer
"""

from fractions import Fraction

import numpy as np
import pytest

from upex import (
    DirectedGraph,
    GeneratorConfig,
    OracleConfig,
    TransformConfig,
    UpeInstance,
    brute_force_decide,
    eliminate_partial_edges,
    generate_instance,
    make_distinct_y,
    solve_st_fue,
    validate_instance,
    verify_drawing,
)

pytestmark = pytest.mark.integration

SOURCE_ORACLE = OracleConfig(max_vertices=6, materialize=False)
TARGET_ORACLE = OracleConfig(max_vertices=14, materialize=False)


def with_partial_edge(rng, inst, drawing, lattice_pins):
    """
    Promote one edge of a witness drawing to H, then maybe move the other
    pins. Returns None when the result is not a valid instance.
    """
    short = [e for e in inst.graph.edges if len(drawing.edge_routes[e]) <= 3]
    if not short:
        return None
    u, v = short[int(rng.integers(len(short)))]
    positions = {w: (p.x, p.y) for w, p in inst.drawing.vertex_pos.items()}
    positions[u] = (drawing.vertex_pos[u].x, drawing.vertex_pos[u].y)
    positions[v] = (drawing.vertex_pos[v].x, drawing.vertex_pos[v].y)
    if rng.random() < 0.5:
        for w, xy in lattice_pins(rng, inst.n, grid=4).items():
            if w not in (u, v):
                positions[w] = xy
    route = [(p.x, p.y) for p in drawing.edge_routes[(u, v)]]
    candidate = UpeInstance.build(inst.n, inst.graph.edges, positions=positions, routes={(u, v): route})
    return candidate if validate_instance(candidate).ok else None


def random_digraph(rng, n):
    edges = [(u, v) if rng.random() < 0.7 else (v, u) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    return DirectedGraph.of(n, edges)


def bent_route(rng, tail, head, bends):
    """A y-monotone route from tail to head with ``bends`` interior points"""
    (xa, ya), (xb, yb) = tail, head
    steps = sorted(int(k) for k in rng.choice(3, size=bends, replace=False) + 1)
    inner = [(Fraction(int(rng.integers(-2, 7)), 2), ya + (yb - ya) * Fraction(k, 4)) for k in steps]
    return [(xa, ya)] + inner + [(xb, yb)]


def h_edge_instances(rng, lattice_pins):
    """
    Valid instances on three or four vertices with one or two H-edges.

    Pins come from a 3 x 3 lattice, so lines are often shared, and most
    H-edges bend once or twice.
    """
    while True:
        n = int(rng.integers(3, 5))
        graph = random_digraph(rng, n)
        positions = lattice_pins(rng, n, grid=3, fraction=1.0)
        upward = [(u, v) for u, v in graph.edges if positions[u][1] < positions[v][1]]
        if not upward:
            continue
        order = rng.permutation(len(upward))[:int(rng.integers(1, 3))]
        chosen = [upward[int(k)] for k in order]
        routes = {(u, v): bent_route(rng, positions[u], positions[v], int(rng.integers(0, 3))) for u, v in chosen}
        ends = {w for e in chosen for w in e}
        for w in range(n):
            if w not in ends and rng.random() < 0.3:
                del positions[w]
        inst = UpeInstance.build(n, graph.edges, positions=positions, routes=routes)
        if validate_instance(inst).ok:
            yield inst


def check_transforms(rng, lattice_pins, target):
    """Count instances whose oracle answer survives both transforms"""
    checked = bent = 0
    for inst in h_edge_instances(rng, lattice_pins):
        expected = brute_force_decide(inst, SOURCE_ORACLE).answer

        edgeless, _ = eliminate_partial_edges(inst)
        assert not edgeless.partial_edges
        assert edgeless.size <= 8 * inst.size
        distinct, _ = make_distinct_y(inst)
        assert distinct.pinned_ys_distinct()
        if max(edgeless.n, distinct.n) > TARGET_ORACLE.max_vertices:
            continue
        assert brute_force_decide(edgeless, TARGET_ORACLE).answer == expected, inst
        assert brute_force_decide(distinct, TARGET_ORACLE).answer == expected, inst
        checked += 1
        bent += any(len(route) > 2 for route in inst.drawing.edge_routes.values())
        if checked == target:
            return checked, bent


class TestPartialEdgeElimination:
    """Replacing H-edges by pinned paths"""

    def test_bent_edges_on_shared_lines(self, lattice_pins):
        """Bent H-edges between pins on shared lines keep their answer"""
        checked, bent = check_transforms(np.random.default_rng(7), lattice_pins, 60)
        assert checked == 60
        assert bent >= 15

    @pytest.mark.slow
    @pytest.mark.timeout(3600)
    def test_bent_edge_families(self, lattice_pins):
        """A thousand H-edge instances keep their answer through both transforms"""
        checked, bent = check_transforms(np.random.default_rng(8), lattice_pins, 1000)
        assert checked == 1000
        assert bent >= 250

    def test_answers_kept(self, lattice_pins):
        """The oracle answers the same before and after"""
        checked = 0
        for seed in range(40):
            rng = np.random.default_rng(seed)
            base = generate_instance(GeneratorConfig(kind="st", n=4, seed=seed, pin_fraction=0.5))
            drawing = solve_st_fue(base).drawing
            inst = with_partial_edge(rng, base, drawing, lattice_pins)
            if inst is None:
                continue
            out, _ = eliminate_partial_edges(inst)
            assert not out.partial_edges
            assert out.size <= 8 * inst.size
            expected = brute_force_decide(inst, SOURCE_ORACLE).answer
            assert brute_force_decide(out, TARGET_ORACLE).answer == expected, inst
            checked += 1
        assert checked >= 5

    @pytest.mark.parametrize("fast", [True, False])
    def test_witness_lifts(self, fast):
        """A drawing of the eliminated instance lifts to the original"""
        inst = UpeInstance.build(
            3, [(0, 1), (1, 2), (0, 2)],
            positions={0: (0, 0), 1: (-2, 2), 2: (0, 4)},
            routes={(0, 2): [(0, 0), (1, 2), (0, 4)]},
        )
        out, emap = eliminate_partial_edges(inst, TransformConfig(fast_sweep=fast))
        decision = brute_force_decide(out, OracleConfig(max_vertices=8))
        assert decision.answer
        assert verify_drawing(inst, emap.lift_drawing(decision.drawing, inst))


class TestDistinctY:
    """Splitting shared lines"""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_answers_kept(self, n, lattice_pins):
        """Random edgeless instances with repeated y keep their answer"""
        rng = np.random.default_rng(50 + n)
        for _ in range(12):
            graph = random_digraph(rng, n)
            inst = UpeInstance.build(n, graph.edges, positions=lattice_pins(rng, n, grid=3))
            out, _ = make_distinct_y(inst)
            assert out.pinned_ys_distinct()
            assert out.size <= 8 * inst.size
            expected = brute_force_decide(inst, SOURCE_ORACLE).answer
            assert brute_force_decide(out, TARGET_ORACLE).answer == expected, inst

    def test_sweeps_agree(self):
        """Fast and slow sweeps give the same instance"""
        inst = UpeInstance.build(
            4, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 2)],
            positions={0: (0, 0), 1: (-2, 2), 3: (2, 2), 2: (0, 4)},
            routes={(0, 2): []},
        )
        fast, _ = make_distinct_y(inst, TransformConfig(fast_sweep=True))
        slow, _ = make_distinct_y(inst, TransformConfig(fast_sweep=False))
        assert fast == slow
