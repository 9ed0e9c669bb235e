"""Bisection over the movement bound with a pluggable decision procedure."""

from __future__ import annotations

import logging
from typing import Callable

from .factor2 import MAX_1D_SENSORS, factor2_solve
from .greedy import decide_greedy
from .lp_round import round_solution
from .matching import decide_matching
from .model import EPS, Infeasible, Instance, SearchResult, max_barrier_distance

log = logging.getLogger(__name__)

KINDS = ("greedy", "lp", "matching")


def decision(kind: str, scale: int = 1) -> Callable:
    if kind == "greedy":
        return decide_greedy
    if kind == "lp":
        return round_solution
    if kind == "matching":
        return lambda inst, D: decide_matching(inst, D, scale)
    raise ValueError(f"unknown decision kind {kind!r}")


def slack_for(kind: str, inst: Instance) -> float:
    return 2 * inst.r_max if kind == "greedy" else inst.r_max


def solve(inst: Instance, kind: str = "lp", resolution: float = 1.0, scale: int = 1) -> SearchResult | Infeasible:
    """Smallest bound (to within `resolution`) the chosen decision accepts.

    The returned placement is the decision's own at that bound, so its
    realized movement is at most base_D + slack.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    if inst.capacity < inst.barrier_length - EPS:
        return Infeasible(f"total capacity {inst.capacity:.6g} < barrier length {inst.barrier_length:.6g}")
    decide = decision(kind, scale)
    seen: list[tuple[float, bool]] = []

    def probe(D: float):
        out = decide(inst, D)
        seen.append((D, bool(out)))
        return out

    upper = max_barrier_distance(inst)
    best = probe(upper)
    if not best:
        return Infeasible(f"{kind} decision rejects d_max = {upper:.6g}: {best.reason}")
    lower = 0.0
    at_zero = probe(0.0)
    if at_zero:
        upper, best = 0.0, at_zero
    while upper - lower > resolution:
        mid = (lower + upper) / 2
        out = probe(mid)
        if out:
            upper, best = mid, out
        else:
            lower = mid
    feasible_at = [D for D, ok in seen if ok]
    non_monotone = any(D > min(feasible_at) for D, ok in seen if not ok)
    if non_monotone:
        log.warning("%s decision is not monotone in D on this instance: %s", kind, sorted(seen))
    return SearchResult(
        base_D=upper,
        slack=slack_for(kind, inst),
        solution=best.solution,
        kind=kind,
        info={"lower": lower, "probes": seen, "non_monotone": non_monotone},
    )


def solve_best(inst: Instance, resolution: float = 1.0, kind: str = "lp") -> SearchResult | Infeasible:
    """Better of the search with `kind` and the factor-2 algorithm, judged by
    realized max movement."""
    results = []
    primary = solve(inst, kind, resolution)
    if isinstance(primary, SearchResult):
        results.append(primary)
    if inst.n <= MAX_1D_SENSORS:
        f2 = factor2_solve(inst, min(resolution, 1e-6))
        if f2 is not None:
            results.append(f2)
    if not results:
        return primary if isinstance(primary, Infeasible) else Infeasible("no branch produced a cover")
    return min(results, key=lambda r: r.max_move)
