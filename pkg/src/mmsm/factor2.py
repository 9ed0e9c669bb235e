"""Factor-2 approximation: drop a prefix of sensors (ordered by distance to
the barrier line) straight onto the line, then solve the 1D problem exactly.
"""

from __future__ import annotations

import logging
import math
from typing import Optional, Sequence

from .model import EPS, Instance, SearchResult, Sensor, Solution

log = logging.getLogger(__name__)

MAX_1D_SENSORS = 20


def _plan_1d(sensors: Sequence[Sensor], M: float, D: float) -> Optional[list[Optional[float]]]:
    """Centers covering [0, M] with every |x' - x| <= D, or None.

    Search over (used set, covered prefix [0, p]) keeping only the largest
    p per set: a longer covered prefix is never worse for the sensors still
    unused.
    """
    n = len(sensors)
    if n > MAX_1D_SENSORS:
        raise ValueError(f"exact 1D decision limited to {MAX_1D_SENSORS} sensors, got {n}")
    if sum(2 * s.r for s in sensors) < M - EPS:
        return None
    useful = [k for k, s in enumerate(sensors) if s.x + D + s.r > 0 and s.x - D - s.r < M]
    # mask -> (frontier, parent mask, sensor, center)
    best: dict[int, tuple[float, int, int, float]] = {0: (0.0, -1, -1, 0.0)}
    layer = [0]
    goal = None
    while layer and goal is None:
        nxt: dict[int, float] = {}
        for mask in layer:
            p = best[mask][0]
            for k in useful:
                if mask >> k & 1:
                    continue
                s = sensors[k]
                if s.x - D > p + s.r + EPS:
                    continue
                c = min(s.x + D, p + s.r)
                q = c + s.r
                if q <= p + EPS:
                    continue
                m2 = mask | 1 << k
                if m2 not in best or best[m2][0] < q:
                    best[m2] = (q, mask, k, c)
                    nxt[m2] = q
                    if q >= M - EPS:
                        goal = m2
                        break
            if goal is not None:
                break
        layer = list(nxt)
    if goal is None:
        return None
    positions: list[Optional[float]] = [None] * n
    mask = goal
    while mask:
        _, parent, k, c = best[mask]
        positions[k] = c
        mask = parent
    return positions


def decide_1d(sensors: Sequence[Sensor], M: float, D: float) -> bool:
    if any(s.y != 0 for s in sensors):
        raise ValueError("1D decision needs sensors on the barrier line")
    return _plan_1d(sensors, M, D) is not None


def _solve_1d_plan(sensors: Sequence[Sensor], M: float, precision: float):
    if not sensors or sum(2 * s.r for s in sensors) < M - EPS:
        return math.inf, None
    plan = _plan_1d(sensors, M, 0.0)
    if plan is not None:
        return 0.0, plan
    lo, hi = 0.0, max(max(abs(s.x), abs(s.x - M)) for s in sensors)
    plan = _plan_1d(sensors, M, hi)
    if plan is None:
        raise RuntimeError("1D instance with enough capacity infeasible at full reach")
    while hi - lo > precision:
        mid = (lo + hi) / 2
        trial = _plan_1d(sensors, M, mid)
        if trial is None:
            lo = mid
        else:
            hi, plan = mid, trial
    return hi, plan


def solve_1d(sensors: Sequence[Sensor], M: float, precision: float = 1e-6) -> float:
    """Smallest max movement (within `precision`, from above) covering [0, M];
    inf when the sensors are too few."""
    if any(s.y != 0 for s in sensors):
        raise ValueError("1D solver needs sensors on the barrier line")
    return _solve_1d_plan(sensors, M, precision)[0]


def factor2_solve(inst: Instance, precision: float = 1e-6) -> SearchResult | None:
    """Returns None when even the full sensor set cannot cover the barrier."""
    M = inst.barrier_length
    order = sorted(range(inst.n), key=lambda i: (abs(inst.sensors[i].y), i))
    # index 0 is the virtual radius-0 sensor on the line
    d_p = [0.0] + [abs(inst.sensors[i].y) for i in order]
    n = inst.n
    memo: dict[int, tuple[float, Optional[list]]] = {0: (math.inf, None)}

    def horizontal(j: int) -> float:
        if j not in memo:
            prefix = [Sensor(inst.sensors[i].x, 0.0, inst.sensors[i].r) for i in order[:j]]
            memo[j] = _solve_1d_plan(prefix, M, precision)
        return memo[j][0]

    def below(j: int) -> bool:
        # infinite horizontal cost counts as "prefix too small"
        return horizontal(j) < d_p[j]

    if math.isinf(horizontal(n)):
        return None
    if not below(n):
        i_alt = n
        candidates = [n]
    else:
        lwr, upp = 0, n
        while upp - lwr > 1:
            j = (lwr + upp) // 2
            if below(j):
                upp = j
            else:
                lwr = j
        i_alt = upp
        candidates = [i_alt - 1, i_alt]
    scored = [(d_p[j] + horizontal(j), j) for j in candidates if not math.isinf(horizontal(j))]
    value, j = min(scored)
    evaluated = sorted(memo.items())
    trace = [(k, v[0]) for k, v in evaluated]
    for (k1, h1), (k2, h2) in zip(trace, trace[1:]):
        if h2 > h1 + precision:
            log.warning("horizontal cost rose from prefix %d (%.6g) to %d (%.6g)", k1, h1, k2, h2)
    plan = memo[j][1]
    positions: list[Optional[float]] = [None] * n
    for rank, i in enumerate(order[:j]):
        positions[i] = plan[rank]
    return SearchResult(
        base_D=value,
        slack=0.0,
        solution=Solution.build(inst, positions),
        kind="factor2",
        info={"i_alt": i_alt, "prefix": j, "order": order, "prefix_costs": trace},
    )
