"""Left-to-right greedy decision with a D + 2*r_max movement guarantee."""

from __future__ import annotations

import heapq

from .model import EPS, Feasible, Infeasible, Instance, Solution, reach_range


def decide_greedy(inst: Instance, D: float) -> Feasible | Infeasible:
    """Cover [0, M] from the left, always using the eligible sensor with the
    smallest right reach g.

    A sensor is eligible at frontier s when l - 2*r_max <= s <= g. Ties on g
    go to the smallest sensor index.
    """
    M = inst.barrier_length
    slack = 2 * inst.r_max
    ranges = [reach_range(s, D) for s in inst.sensors]
    # sensors ordered by their admission threshold l - 2 r_max
    pending = sorted(
        (rr.l - slack, i) for i, rr in enumerate(ranges) if rr is not None
    )
    heap: list[tuple[float, int]] = []
    k = 0
    positions: list[float | None] = [None] * inst.n
    s = 0.0
    while s < M - EPS:
        while k < len(pending) and pending[k][0] <= s + EPS:
            i = pending[k][1]
            heapq.heappush(heap, (ranges[i].g, i))
            k += 1
        # sensors whose reach ends before the frontier can never become eligible again
        while heap and heap[0][0] < s - EPS:
            heapq.heappop(heap)
        if not heap:
            return Infeasible(f"frontier stuck at {s:.6g}")
        g, i = heapq.heappop(heap)
        r = inst.sensors[i].r
        s = min(s + 2 * r, g)
        positions[i] = s - r
    return Feasible(Solution.build(inst, positions))
