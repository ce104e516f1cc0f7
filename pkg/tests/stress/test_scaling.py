"""
Stress tests for engine running times on large generated instances
"""

import time

import pytest

from upex import CapExceededError, DpConfig, GeneratorConfig, generate_instance, solve_path_fue, solve_st_fue


def timed(solve, inst):
    start = time.perf_counter()
    decision = solve(inst)
    return time.perf_counter() - start, decision


def solve_st(inst):
    return solve_st_fue(inst, witness=False)


def solve_path(inst):
    return solve_path_fue(inst, DpConfig(keep_witness=False))


@pytest.fixture(scope="module")
def st_instances():
    return {
        n: generate_instance(GeneratorConfig(kind="st", n=n, seed=1, pin_fraction=0.3))
        for n in (10_000, 100_000)
    }


@pytest.mark.slow
class TestScaling:
    """Test growth of running time with instance size"""

    @pytest.mark.timeout(600)
    def test_st_fixed_embedding_near_linear(self, st_instances):
        """Ten times the vertices costs at most fifteen times the time"""
        small, large = st_instances[10_000], st_instances[100_000]
        solve_st(small)
        t_small, d_small = timed(solve_st, small)
        t_large, d_large = timed(solve_st, large)
        assert d_small.answer and d_large.answer
        assert t_large < 5
        assert t_large / max(t_small, 1e-3) <= 15

    @pytest.mark.timeout(300)
    def test_path_table_quartic(self):
        """Doubling the path costs between 8 and 48 times the time"""
        short = generate_instance(GeneratorConfig(kind="path", n=60, seed=2, pin_fraction=0.5))
        long = generate_instance(GeneratorConfig(kind="path", n=120, seed=2, pin_fraction=0.5))
        solve_path(short)
        t_short, d_short = timed(solve_path, short)
        t_long, d_long = timed(solve_path, long)
        assert d_short.answer and d_long.answer
        assert t_short < 10
        assert 8 <= t_long / max(t_short, 1e-3) <= 48

    @pytest.mark.timeout(120)
    def test_cap_refuses_quickly(self):
        """Paths over the cap are refused before any table is built"""
        inst = generate_instance(GeneratorConfig(kind="path", n=400, seed=3, pin_fraction=0.2))
        start = time.perf_counter()
        with pytest.raises(CapExceededError, match="cap exceeded"):
            solve_path_fue(inst)
        assert time.perf_counter() - start < 5


@pytest.mark.slow
class TestEngineBenchmarks:
    """Record engine timings with pytest-benchmark"""

    @pytest.mark.timeout(600)
    def test_st_fixed_embedding(self, benchmark, st_instances):
        """st-fue on 100000 vertices"""
        decision = benchmark.pedantic(solve_st, args=(st_instances[100_000],), rounds=3, iterations=1)
        assert decision.answer

    @pytest.mark.timeout(300)
    @pytest.mark.parametrize("n", [30, 60])
    def test_path_table(self, benchmark, n):
        """path-fue on paths of acceptance size"""
        inst = generate_instance(GeneratorConfig(kind="path", n=n, seed=2, pin_fraction=0.5))
        decision = benchmark.pedantic(solve_path, args=(inst,), rounds=3, iterations=1)
        assert decision.answer
