"""
Unit tests for random instance generation
"""

import numpy as np
import pytest

from upex import (
    GeneratorConfig,
    StConfig,
    generate_instance,
    solve_cycle_fue,
    solve_path_fue,
    solve_st_fue,
    validate_instance,
)
from upex.core.io import dumps, instance_to_dict
from upex.generators import (
    grid_pins,
    layered_positions,
    random_embedded_st_graph,
    random_st_graph,
    split_cycle,
    zigzag_path,
)
from upex.pathcycle import path_or_cycle_order
from upex.stgraph import StGraph


class TestGraphs:
    """Test the graph builders"""

    @pytest.mark.parametrize("seed", range(5))
    def test_random_st_graph(self, seed):
        """Source 0, sink 1, planar with the closing edge"""
        g = random_st_graph(np.random.default_rng(seed), 15, chord_rate=0.5)
        assert g.n == 15
        assert g.sources() == [0]
        assert g.sinks() == [1]
        assert g.is_acyclic()
        StGraph.build(g)

    @pytest.mark.parametrize("seed", range(8))
    def test_random_embedded_st_graph(self, seed):
        """The grown lists are an upward planar embedding of the grown graph"""
        g, emb = random_embedded_st_graph(np.random.default_rng(seed), 40, chord_rate=0.6)
        assert g.n == 40
        assert g.sources() == [0]
        assert g.sinks() == [1]
        emb.validate(g, poles=(0, 1))
        assert StGraph.build(g, emb).embedding is emb

    def test_chords_add_edges(self):
        """Chords add edges on top of the grown paths"""
        plain, _ = random_embedded_st_graph(np.random.default_rng(3), 200, chord_rate=0.0)
        dense, _ = random_embedded_st_graph(np.random.default_rng(3), 200, chord_rate=0.6)
        assert len(dense.edges) > len(plain.edges)

    def test_large_graph_is_simple(self):
        """No repeated edges at a size where repeats would be likely"""
        g, emb = random_embedded_st_graph(np.random.default_rng(11), 5_000, chord_rate=0.5)
        assert len(g.edge_set) == len(g.edges)
        assert emb.mismatch(g) is None

    def test_layered_positions(self, rng):
        """Heights grow along edges, same-height vertices have distinct x"""
        g, emb = random_embedded_st_graph(rng, 20)
        pos = layered_positions(StGraph.build(g, emb))
        assert all(pos[u][1] < pos[v][1] for u, v in g.edges)
        assert len(set(pos.values())) == g.n

    def test_zigzag_path(self, rng):
        """A path with one height per vertex"""
        g, drawing = zigzag_path(rng, 9)
        order, cyclic = path_or_cycle_order(g)
        assert not cyclic
        assert order == tuple(range(9))
        assert len({p.y for p in drawing.vertex_pos.values()}) == 9

    @pytest.mark.parametrize("n", [3, 4, 7, 12])
    def test_split_cycle(self, rng, n):
        """A cycle with distinct heights"""
        g, drawing = split_cycle(rng, n)
        _, cyclic = path_or_cycle_order(g)
        assert cyclic
        assert g.is_acyclic()
        assert len({p.y for p in drawing.vertex_pos.values()}) == n

    def test_grid_pins(self, rng):
        """Pins on the lattice never share a height"""
        g = random_st_graph(rng, 6)
        pins = grid_pins(rng, g, grid=7)
        ys = [y for _, y in pins.values()]
        assert len(ys) == len(set(ys))
        assert all(0 <= y < 7 for y in ys)


class TestGenerateInstance:
    """Test generated instances"""

    @pytest.mark.parametrize("kind", ["st", "path", "cycle"])
    def test_deterministic(self, kind):
        """Equal seeds give identical documents"""
        config = GeneratorConfig(kind=kind, n=11, seed=42, pin_fraction=0.6)
        first = dumps(instance_to_dict(generate_instance(config)))
        second = dumps(instance_to_dict(generate_instance(config)))
        assert first == second

    @pytest.mark.parametrize("kind", ["st", "path", "cycle"])
    def test_valid(self, kind):
        """Generated instances satisfy every invariant"""
        for seed in range(4):
            inst = generate_instance(GeneratorConfig(kind=kind, n=10, seed=seed))
            assert validate_instance(inst).ok

    @pytest.mark.parametrize("seed", range(6))
    def test_st_extensible(self, seed):
        """Honest st instances are YES"""
        inst = generate_instance(GeneratorConfig(kind="st", n=14, seed=seed))
        assert solve_st_fue(inst, StConfig(), witness=False).answer

    @pytest.mark.parametrize("seed", range(6))
    def test_path_extensible(self, seed):
        """Honest path instances are YES"""
        assert solve_path_fue(generate_instance(GeneratorConfig(kind="path", n=9, seed=seed))).answer

    @pytest.mark.parametrize("seed", range(6))
    def test_cycle_extensible(self, seed):
        """Honest cycle instances are YES"""
        assert solve_cycle_fue(generate_instance(GeneratorConfig(kind="cycle", n=9, seed=seed))).answer

    def test_pin_fraction_zero(self):
        """Nothing pinned"""
        inst = generate_instance(GeneratorConfig(kind="path", n=6, pin_fraction=0.0))
        assert not inst.partial_vertices

    def test_unembedded(self):
        """The embedding can be left out"""
        inst = generate_instance(GeneratorConfig(kind="st", n=6, embedded=False))
        assert inst.embedding is None
        assert inst.fully_pinned

    def test_adversarial_moves_pins(self):
        """Perturbation changes the pins of an otherwise equal instance"""
        honest = generate_instance(GeneratorConfig(kind="path", n=8, seed=5))
        perturbed = generate_instance(GeneratorConfig(kind="path", n=8, seed=5, adversarial=True))
        assert honest.graph == perturbed.graph
        assert honest.drawing.vertex_pos != perturbed.drawing.vertex_pos
        assert sorted(p.y for p in honest.drawing.vertex_pos.values()) == sorted(
            p.y for p in perturbed.drawing.vertex_pos.values()
        )
