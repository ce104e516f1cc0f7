"""
Pytest configuration and fixtures for upex tests
"""
from itertools import product

import numpy as np
import pytest

from upex import DirectedGraph, OracleConfig, UpeInstance, UpwardEmbedding, disable_logging

# s=0, a=1, b=2, t=3
DIAMOND_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3)]

# u1 -> u2 <- u3 -> u4
ZIGZAG_EDGES = [(0, 1), (2, 1), (2, 3)]

# sources 0 and 2, sinks 1 and 3
FOUR_CYCLE_EDGES = [(0, 1), (2, 1), (2, 3), (0, 3)]


@pytest.fixture(autouse=True)
def quiet_logging():
    """Reset logging state around every test"""
    disable_logging()
    yield
    disable_logging()


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def oracle_config():
    return OracleConfig(max_vertices=7)


@pytest.fixture
def diamond():
    return DirectedGraph.of(4, DIAMOND_EDGES)


@pytest.fixture
def diamond_embedding():
    """Factory: upward embedding of the diamond with ``left`` as the left middle vertex"""
    def build(left=1):
        right = 3 - left
        return UpwardEmbedding.from_lists(
            4,
            {0: [left, right], 1: [3], 2: [3]},
            {1: [0], 2: [0], 3: [left, right]},
        )
    return build


@pytest.fixture
def diamond_instance(diamond_embedding):
    """Factory: diamond instance with the given pins, embedded unless told otherwise"""
    def build(positions=None, left=1, embedded=True, routes=None):
        return UpeInstance.build(
            4,
            DIAMOND_EDGES,
            positions=positions or {},
            routes=routes,
            embedding=diamond_embedding(left) if embedded else None,
        )
    return build


@pytest.fixture
def zigzag_embedding():
    """Factory: embedding of u1 -> u2 <- u3 -> u4 given P(u2) and S(u3)"""
    def build(pred_u2=(0, 2), succ_u3=(1, 3)):
        return UpwardEmbedding.from_lists(
            4,
            {0: [1], 2: list(succ_u3)},
            {1: list(pred_u2), 3: [2]},
        )
    return build


@pytest.fixture
def zigzag_drawing_pins():
    """A straight-line upward planar drawing of the zigzag path"""
    return {0: (0, 0), 1: (1, 2), 2: (2, 1), 3: (3, 3)}


@pytest.fixture
def four_cycle_embedding():
    """Factory: embedding of the alternating 4-cycle"""
    def build(succ_0=(1, 3), pred_1=(0, 2), succ_2=(1, 3), pred_3=(2, 0)):
        return UpwardEmbedding.from_lists(
            4,
            {0: list(succ_0), 2: list(succ_2)},
            {1: list(pred_1), 3: list(pred_3)},
        )
    return build


@pytest.fixture
def four_cycle_drawing_pins():
    """Straight-line drawing realizing the default four_cycle_embedding"""
    return {0: (1, 0), 1: (0, 3), 2: (1, 1), 3: (2, 2)}


def _oriented(n, cyclic):
    pairs = [(i, i + 1) for i in range(n - 1)] + ([(n - 1, 0)] if cyclic else [])
    for bits in product((True, False), repeat=len(pairs)):
        if cyclic and len(set(bits)) == 1:
            continue
        yield DirectedGraph.of(n, [(u, v) if forward else (v, u) for (u, v), forward in zip(pairs, bits)])


@pytest.fixture
def oriented_paths():
    """Factory: every orientation of the path on n vertices"""
    return lambda n: list(_oriented(n, cyclic=False))


@pytest.fixture
def oriented_cycles():
    """Factory: every acyclic orientation of the cycle on n vertices"""
    return lambda n: list(_oriented(n, cyclic=True))


@pytest.fixture
def lattice_pins():
    """Factory: random distinct points on a small lattice, y may repeat"""
    def build(rng, n, grid=3, fraction=0.8):
        chosen = [v for v in range(n) if rng.random() < fraction]
        cells = rng.choice(grid * grid, size=min(len(chosen), grid * grid), replace=False)
        return {v: (int(c) % grid, int(c) // grid) for v, c in zip(chosen, cells)}
    return build
