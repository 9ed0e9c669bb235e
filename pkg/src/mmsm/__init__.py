"""Relocating sensors onto a line barrier while keeping the largest move small."""

from .dmmsm import BarrierGraph, transfer
from .factor2 import decide_1d, factor2_solve, solve_1d
from .greedy import decide_greedy
from .lp_round import decide_lp, round_solution
from .matching import decide_matching
from .model import (
    EPS,
    Feasible,
    Infeasible,
    Instance,
    ReachRange,
    SearchResult,
    Sensor,
    Solution,
    certificate_check,
    lambda_cov,
    max_barrier_distance,
    reach_range,
    sigma_cov,
    verify_solution,
)
from .search import solve, solve_best

__all__ = [
    "EPS",
    "BarrierGraph",
    "Feasible",
    "Infeasible",
    "Instance",
    "ReachRange",
    "SearchResult",
    "Sensor",
    "Solution",
    "certificate_check",
    "decide_1d",
    "decide_greedy",
    "decide_lp",
    "decide_matching",
    "factor2_solve",
    "lambda_cov",
    "max_barrier_distance",
    "reach_range",
    "round_solution",
    "sigma_cov",
    "solve",
    "solve_1d",
    "solve_best",
    "transfer",
    "verify_solution",
]
