"""Discretize the barrier at movement bound D into breakpoint edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .model import EPS, Instance, reach_range


@dataclass(frozen=True)
class BarrierGraph:
    vertices: tuple[float, ...]
    # per sensor: half-open edge index range [start, stop), None if unreachable
    windows: tuple[Optional[tuple[int, int]], ...]

    @property
    def n_edges(self) -> int:
        return len(self.vertices) - 1

    def edge(self, j: int) -> tuple[float, float]:
        return self.vertices[j], self.vertices[j + 1]

    def length(self, j: int) -> float:
        return self.vertices[j + 1] - self.vertices[j]

    def window_edges(self, i: int) -> range:
        w = self.windows[i]
        return range(0) if w is None else range(*w)


def _snap(vertices: list[float], x: float) -> int:
    """Index of the vertex nearest to x."""
    lo, hi = 0, len(vertices) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if vertices[mid] < x - EPS:
            lo = mid + 1
        else:
            hi = mid
    return lo


def transfer(inst: Instance, D: float) -> BarrierGraph:
    M = inst.barrier_length
    clipped = []
    points = [0.0, M]
    for s in inst.sensors:
        rr = reach_range(s, D)
        if rr is None:
            clipped.append(None)
            continue
        a, b = min(max(rr.l, 0.0), M), min(max(rr.g, 0.0), M)
        clipped.append((a, b))
        points += [a, b]
    vertices: list[float] = []
    for p in sorted(points):
        if not vertices or p > vertices[-1] + EPS:
            vertices.append(p)
    # keep the barrier ends exact
    vertices[0], vertices[-1] = 0.0, M
    windows = []
    for w in clipped:
        if w is None:
            windows.append(None)
            continue
        start, stop = _snap(vertices, w[0]), _snap(vertices, w[1])
        windows.append((start, stop) if stop > start else None)
    return BarrierGraph(tuple(vertices), tuple(windows))
