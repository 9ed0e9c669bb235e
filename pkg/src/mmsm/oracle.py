"""Brute-force ground truth for small instances.

Some optimal relocation covers the barrier with a left-to-right sequence of
sensor intervals, and for a fixed sequence pushing each sensor as far right
as the current frontier allows is optimal. Enumerating ordered subsets of
sensors therefore decides feasibility exactly.
"""

from __future__ import annotations

from typing import Sequence

from .model import EPS, Instance, Sensor, max_barrier_distance, reach_range

MAX_ORACLE_SENSORS = 8


def feasible_fixed_order(inst: Instance, order: Sequence[int], D: float) -> bool:
    M = inst.barrier_length
    p = 0.0
    for k in order:
        s = inst.sensors[k]
        rr = reach_range(s, D)
        if rr is None:
            continue
        if rr.c_min > p + s.r + EPS:
            return False
        c = min(rr.c_max, p + s.r)
        p = max(p, c + s.r)
    return p >= M - EPS


def _feasible_any_order(sensors: Sequence[Sensor], M: float, D: float) -> bool:
    reach = []
    for s in sensors:
        rr = reach_range(s, D)
        if rr is not None:
            reach.append((rr.c_min, rr.c_max, s.r))
    if sum(2 * r for _, _, r in reach) < M - EPS:
        return False
    used = [False] * len(reach)

    def extend(p: float) -> bool:
        if p >= M - EPS:
            return True
        for k, (c_min, c_max, r) in enumerate(reach):
            if used[k] or c_min > p + r + EPS:
                continue
            q = min(c_max, p + r) + r
            if q <= p + EPS:
                # adds nothing at this frontier
                continue
            used[k] = True
            ok = extend(q)
            used[k] = False
            if ok:
                return True
        return False

    return extend(0.0)


def _bisect(sensors: Sequence[Sensor], M: float, hi: float, precision: float) -> float:
    if _feasible_any_order(sensors, M, 0.0):
        return 0.0
    lo = 0.0
    for _ in range(200):
        if hi - lo <= precision:
            break
        mid = (lo + hi) / 2
        if _feasible_any_order(sensors, M, mid):
            hi = mid
        else:
            lo = mid
    return hi


def exact_2d(inst: Instance, precision: float = 1e-6) -> float | None:
    """Optimal max movement up to `precision` (a feasible upper value), or
    None when total capacity is short of the barrier length."""
    if inst.n > MAX_ORACLE_SENSORS:
        raise ValueError(f"oracle limited to {MAX_ORACLE_SENSORS} sensors, got {inst.n}")
    if inst.capacity < inst.barrier_length - EPS:
        return None
    return _bisect(inst.sensors, inst.barrier_length, max_barrier_distance(inst), precision)


def feasible_1d(sensors: Sequence[Sensor], M: float, D: float) -> bool:
    if any(s.y != 0 for s in sensors):
        raise ValueError("1D oracle needs sensors on the barrier line")
    if len(sensors) > MAX_ORACLE_SENSORS:
        raise ValueError(f"oracle limited to {MAX_ORACLE_SENSORS} sensors")
    return _feasible_any_order(sensors, M, D)


def exact_1d(sensors: Sequence[Sensor], M: float, precision: float = 1e-6) -> float | None:
    if any(s.y != 0 for s in sensors):
        raise ValueError("1D oracle needs sensors on the barrier line")
    return exact_2d(Instance(M, tuple(sensors)), precision)
