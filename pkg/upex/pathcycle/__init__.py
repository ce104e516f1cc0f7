"""
Engines for directed paths and cycles with pinned points.
"""

from .runs import MonotoneRunPartition, edge_directions, partition_monotone_runs, path_or_cycle_order
from .solvers import (
    CYCLE_FUE,
    PATH_FUE,
    PATH_UPE,
    JunctionChoice,
    cycle_table,
    path_table,
    solve_cycle_fue,
    solve_path_fue,
    solve_path_or_cycle_upe,
)
from .table import DpTable

__all__ = [
    "MonotoneRunPartition",
    "edge_directions",
    "partition_monotone_runs",
    "path_or_cycle_order",
    "CYCLE_FUE",
    "PATH_FUE",
    "PATH_UPE",
    "JunctionChoice",
    "cycle_table",
    "path_table",
    "solve_cycle_fue",
    "solve_path_fue",
    "solve_path_or_cycle_upe",
    "DpTable",
]
