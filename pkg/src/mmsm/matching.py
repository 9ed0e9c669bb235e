"""Pseudo-polynomial decision via unit edges and bipartite matching.

The barrier [0, M] is cut into M unit edges, each sensor offers 2r slots, and
a unit edge may take a slot of any sensor whose reach window contains it. A
perfect matching of the unit edges is rounded with the same swap/exchange
phases as the fractional cover.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .lp_round import SubEdge, merge_adjacent, round_pieces
from .model import EPS, Feasible, Infeasible, Instance, reach_range


@dataclass(frozen=True)
class UnitCoverGraph:
    n_units: int
    slot_owner: tuple[int, ...]  # slot index -> sensor index
    windows: tuple[tuple[int, int] | None, ...]  # unit range [start, stop) per sensor
    scale: int = 1

    @property
    def n_slots(self) -> int:
        return len(self.slot_owner)

    def adjacency(self) -> list[list[int]]:
        """Slots adjacent to each unit edge."""
        adj: list[list[int]] = [[] for _ in range(self.n_units)]
        for v, i in enumerate(self.slot_owner):
            w = self.windows[i]
            if w is None:
                continue
            for j in range(*w):
                adj[j].append(v)
        return adj

    def unit_sets(self) -> list[set[int]]:
        return [set() if w is None else set(range(*w)) for w in self.windows]


def _as_int(value: float, what: str) -> int:
    k = round(value)
    if abs(value - k) > 1e-9 * max(1.0, abs(value)) or k <= 0:
        raise ValueError(f"{what} must be a positive integer after scaling, got {value}")
    return int(k)


def build_h(inst: Instance, D: float, scale: int = 1) -> UnitCoverGraph:
    """Unit-edge graph of `inst` at bound D, all lengths multiplied by `scale`."""
    M = _as_int(inst.barrier_length * scale, "barrier length")
    slot_owner = []
    windows = []
    for i, s in enumerate(inst.sensors):
        slot_owner += [i] * _as_int(2 * s.r * scale, f"diameter of sensor {i}")
        rr = reach_range(s, D)
        if rr is None:
            windows.append(None)
            continue
        lo = max(0, math.ceil(rr.l * scale - EPS))
        hi = min(M, math.floor(rr.g * scale + EPS))
        windows.append((lo, hi) if hi > lo else None)
    return UnitCoverGraph(M, tuple(slot_owner), tuple(windows), scale)


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]  # (unit edge, slot)

    def __len__(self) -> int:
        return len(self.pairs)


def max_matching(h: UnitCoverGraph) -> Matching:
    """Hopcroft-Karp: BFS layers from free units, then vertex-disjoint
    shortest augmenting paths by DFS."""
    adj = h.adjacency()
    nu, nv = h.n_units, h.n_slots
    match_u = [-1] * nu
    match_v = [-1] * nv
    inf = nu + nv + 1

    def bfs() -> tuple[bool, list[int]]:
        dist = [inf] * nu
        q = deque()
        for u in range(nu):
            if match_u[u] < 0:
                dist[u] = 0
                q.append(u)
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_v[v]
                if w < 0:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found, dist

    def dfs(u: int, dist: list[int], it: list[int]) -> bool:
        # iterative to keep long augmenting paths off the call stack
        stack = [u]
        path = []
        while stack:
            x = stack[-1]
            advanced = False
            while it[x] < len(adj[x]):
                v = adj[x][it[x]]
                it[x] += 1
                w = match_v[v]
                if w < 0:
                    path.append((x, v))
                    for a, b in path:
                        match_u[a], match_v[b] = b, a
                    return True
                if dist[w] == dist[x] + 1:
                    path.append((x, v))
                    stack.append(w)
                    advanced = True
                    break
            if not advanced:
                dist[x] = inf
                stack.pop()
                if path:
                    path.pop()
        return False

    while True:
        found, dist = bfs()
        if not found:
            break
        it = [0] * nu
        for u in range(nu):
            if match_u[u] < 0:
                dfs(u, dist, it)
    return Matching(tuple((u, v) for u, v in enumerate(match_u) if v >= 0))


def matched_pieces(h: UnitCoverGraph, y: Matching) -> list[SubEdge]:
    """Matched unit edges as owned pieces, in barrier coordinates."""
    owner = {u: h.slot_owner[v] for u, v in y.pairs}
    k = h.scale
    return merge_adjacent([SubEdge(u / k, (u + 1) / k, owner[u]) for u in sorted(owner)])


def decide_matching(inst: Instance, D: float, scale: int = 1) -> Feasible | Infeasible:
    h = build_h(inst, D, scale)
    y = max_matching(h)
    if len(y) < h.n_units:
        return Infeasible(f"matching covers {len(y)} of {h.n_units} unit edges")
    return round_pieces(inst, D, matched_pieces(h, y))
