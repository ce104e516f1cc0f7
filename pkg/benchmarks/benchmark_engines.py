#!/usr/bin/env python3
"""
Engine Scaling Benchmark for upex

Times each engine on generated instances of growing size and reports how
the running time grows from one size to the next.

Usage:
    python benchmark_engines.py
    python benchmark_engines.py --engines st-fue,path-fue --runs 5
    python benchmark_engines.py --st-sizes 1000 10000 100000

The RSS column needs psutil (pip install upex[system]).
"""

import argparse
import statistics
import time
from typing import Callable, Dict, List

try:
    import psutil
    _has_psutil = True
except ImportError:
    _has_psutil = False
    psutil = None

from upex import (
    DpConfig,
    GeneratorConfig,
    OracleConfig,
    UpeInstance,
    brute_force_decide,
    generate_instance,
    solve_cycle_fue,
    solve_path_fue,
    solve_path_or_cycle_upe,
    solve_st_fue,
    solve_st_upe,
)


DEFAULT_RUNS = 3
DEFAULT_ST_SIZES = [1_000, 4_000, 16_000]
DEFAULT_DP_SIZES = [15, 30, 60]
DEFAULT_ORACLE_SIZES = [4, 5, 6]

# engine name -> (generator kind, embedded, solver)
ENGINES: Dict[str, tuple] = {
    "st-fue": ("st", True, lambda inst: solve_st_fue(inst, witness=False)),
    "st-upe": ("st", False, lambda inst: solve_st_upe(inst, witness=False)),
    "path-fue": ("path", True, lambda inst: solve_path_fue(inst, DpConfig(keep_witness=False))),
    "cycle-fue": ("cycle", True, lambda inst: solve_cycle_fue(inst, DpConfig(keep_witness=False))),
    "path-upe": ("path", False, solve_path_or_cycle_upe),
    "oracle": ("st", False, lambda inst: brute_force_decide(inst, OracleConfig(max_vertices=7, materialize=False))),
}


def sizes_for(engine: str, args: argparse.Namespace) -> List[int]:
    if engine.startswith("st"):
        return args.st_sizes
    if engine == "oracle":
        return DEFAULT_ORACLE_SIZES
    return args.dp_sizes


def rss_mb() -> str:
    """Resident memory of this process, or a dash without psutil"""
    if not _has_psutil:
        return "-"
    return f"{psutil.Process().memory_info().rss / 2**20:.0f}"


def run_engine_benchmark(
    solve: Callable[[UpeInstance], object],
    inst: UpeInstance,
    runs: int
) -> dict:
    """Run the engine repeatedly on one instance and collect statistics"""
    times = []
    answer = None

    for _ in range(runs):
        start = time.perf_counter()
        answer = solve(inst).answer
        times.append(time.perf_counter() - start)

    return {
        'mean': statistics.mean(times),
        'stddev': statistics.stdev(times) if len(times) > 1 else 0,
        'min': min(times),
        'answer': 'yes' if answer else 'no',
    }


def main():
    parser = argparse.ArgumentParser(description='Engine scaling benchmark for upex')
    parser.add_argument('--engines', default=','.join(ENGINES),
                        help='Comma-separated engine names')
    parser.add_argument('--runs', type=int, default=DEFAULT_RUNS,
                        help='Number of runs for statistics')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--pin-fraction', type=float, default=0.4)
    parser.add_argument('--st-sizes', type=int, nargs='+', default=DEFAULT_ST_SIZES)
    parser.add_argument('--dp-sizes', type=int, nargs='+', default=DEFAULT_DP_SIZES)

    args = parser.parse_args()
    engines = [name.strip() for name in args.engines.split(',') if name.strip()]
    unknown = [name for name in engines if name not in ENGINES]
    if unknown:
        parser.error(f"unknown engines: {', '.join(unknown)}")

    print(f"\nupex Engine Scaling Benchmark")
    print(f"{'='*100}")
    print(f"Runs per size: {args.runs}")
    print(f"Seed: {args.seed}, pin fraction: {args.pin_fraction}")

    print(f"\n{'Engine':<12} {'n':>8} {'Size':>10} {'Mean (ms)':>12} {'Stddev (ms)':>12} {'Growth':>8} {'Answer':>8} {'RSS (MB)':>9}")
    print(f"{'='*100}")

    for engine in engines:
        kind, embedded, solve = ENGINES[engine]
        previous = None
        for n in sizes_for(engine, args):
            config = GeneratorConfig(
                kind=kind,
                n=n,
                seed=args.seed,
                pin_fraction=args.pin_fraction,
                embedded=embedded,
            )
            inst = generate_instance(config)
            result = run_engine_benchmark(solve, inst, args.runs)
            growth = f"{result['mean'] / previous:>7.1f}x" if previous else f"{'-':>8}"
            previous = max(result['mean'], 1e-9)
            print(
                f"{engine:<12} {n:>8} {inst.size:>10} "
                f"{result['mean']*1000:>12.2f} "
                f"{result['stddev']*1000:>12.2f} "
                f"{growth} "
                f"{result['answer']:>8} "
                f"{rss_mb():>9}"
            )
        print(f"{'-'*100}")

    print("\nGrowth is the mean time divided by the mean time at the previous size.")
    print("st-fue should stay near the size ratio; the path and cycle tables grow")
    print("with the fourth power of n.\n")


if __name__ == "__main__":
    main()
