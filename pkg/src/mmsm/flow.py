"""Dinic maximum flow on real capacities."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, n: int, eps: float = 1e-12):
        self.n = n
        self.eps = eps
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[float] = []

    def add_edge(self, u: int, v: int, cap: float) -> int:
        """Add arc u->v; returns the arc id whose flow can be read later."""
        k = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0.0]
        self.head[u].append(k)
        self.head[v].append(k + 1)
        return k

    def flow_on(self, arc: int) -> float:
        return self.cap[arc + 1]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for k in self.head[u]:
                v = self.to[k]
                if level[v] < 0 and self.cap[k] > self.eps:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> float:
        total = 0.0
        while (level := self._levels(s, t)) is not None:
            it = [0] * self.n

            def push(u: int, f: float) -> float:
                if u == t:
                    return f
                arcs = self.head[u]
                while it[u] < len(arcs):
                    k = arcs[it[u]]
                    v = self.to[k]
                    if self.cap[k] > self.eps and level[v] == level[u] + 1:
                        d = push(v, min(f, self.cap[k]))
                        if d > 0:
                            self.cap[k] -= d
                            self.cap[k ^ 1] += d
                            return d
                    it[u] += 1
                return 0.0

            while (f := push(s, float("inf"))) > 0:
                total += f
        return total
