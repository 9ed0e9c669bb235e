"""Instances, reach geometry, solution checking and coverage certificates."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence

EPS = float(os.environ.get("BARRIER_COVER_EPS", "1e-9"))


@dataclass(frozen=True)
class Sensor:
    x: float
    y: float
    r: float

    def __post_init__(self):
        for name in ("x", "y", "r"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.r)):
            raise ValueError(f"non-finite sensor {self}")
        if self.r <= 0:
            raise ValueError(f"sensing radius must be positive, got {self.r}")


@dataclass(frozen=True)
class Instance:
    barrier_length: float
    sensors: tuple[Sensor, ...]

    def __post_init__(self):
        if not self.barrier_length > 0:
            raise ValueError("barrier length must be positive")
        object.__setattr__(self, "barrier_length", float(self.barrier_length))
        object.__setattr__(self, "sensors", tuple(self.sensors))

    @classmethod
    def from_tuples(cls, barrier_length: float, sensors: Sequence[tuple[float, float, float]]) -> "Instance":
        return cls(barrier_length, tuple(Sensor(*s) for s in sensors))

    @property
    def n(self) -> int:
        return len(self.sensors)

    @property
    def r_max(self) -> float:
        return max(s.r for s in self.sensors)

    @property
    def capacity(self) -> float:
        """Total coverable length, sum of sensor diameters."""
        return sum(2 * s.r for s in self.sensors)


@dataclass(frozen=True)
class ReachRange:
    l: float
    g: float
    c_min: float
    c_max: float


def reach_range(s: Sensor, D: float) -> Optional[ReachRange]:
    """Barrier points sensor `s` can cover after moving at most `D`.

    Returns None when the sensor cannot touch the barrier line at all.
    Values are not clipped to the barrier.
    """
    if D < 0:
        raise ValueError("movement bound must be non-negative")
    if D < abs(s.y):
        return None
    h = math.sqrt(D * D - s.y * s.y)
    c_min, c_max = s.x - h, s.x + h
    return ReachRange(c_min - s.r, c_max + s.r, c_min, c_max)


def max_barrier_distance(inst: Instance) -> float:
    # distance to a point is convex along the segment, so endpoints suffice
    if not inst.sensors:
        raise ValueError("instance has no sensors")
    M = inst.barrier_length
    return max(max(math.hypot(s.x, s.y), math.hypot(s.x - M, s.y)) for s in inst.sensors)


@dataclass(frozen=True)
class Solution:
    """Relocated centers on the barrier line; None marks an unused sensor."""

    positions: tuple[Optional[float], ...]
    moves: tuple[Optional[float], ...] = field(default=(), compare=False)

    @classmethod
    def build(cls, inst: Instance, positions: Sequence[Optional[float]]) -> "Solution":
        if len(positions) != inst.n:
            raise ValueError("one position per sensor required")
        positions = [None if p is None else float(p) for p in positions]
        moves = tuple(
            None if p is None else math.hypot(s.x - p, s.y)
            for s, p in zip(inst.sensors, positions)
        )
        return cls(tuple(positions), moves)

    @property
    def max_move(self) -> float:
        used = [m for m in self.moves if m is not None]
        return max(used) if used else 0.0


@dataclass(frozen=True)
class Verification:
    covered: bool
    max_move: float
    gaps: list[tuple[float, float]]


def covered_union(intervals: Sequence[tuple[float, float]], eps: float = EPS) -> list[tuple[float, float]]:
    """Merge closed intervals, treating gaps up to `eps` as touching."""
    merged: list[list[float]] = []
    for a, b in sorted(intervals):
        if merged and a <= merged[-1][1] + eps:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    return [(a, b) for a, b in merged]


def verify_solution(inst: Instance, sol: Solution, eps: float = EPS) -> Verification:
    if len(sol.positions) != inst.n:
        raise ValueError("solution does not match instance size")
    M = inst.barrier_length
    moves = []
    spans = []
    for s, p in zip(inst.sensors, sol.positions):
        if p is None:
            continue
        if not math.isfinite(p):
            raise ValueError("non-finite position")
        moves.append(math.hypot(s.x - p, s.y))
        spans.append((p - s.r, p + s.r))
    gaps = []
    cursor = 0.0
    for a, b in covered_union(spans, eps):
        if b < 0:
            continue
        if a > cursor + eps:
            gaps.append((cursor, min(a, M)))
        cursor = max(cursor, b)
        if cursor >= M:
            break
    if cursor < M - eps:
        gaps.append((cursor, M))
    gaps = [(a, b) for a, b in gaps if a < M]
    return Verification(not gaps, max(moves, default=0.0), gaps)


def lambda_cov(s: Sensor, D: float, x: float, x2: float) -> float:
    """Largest part of segment [x, x2] the sensor can cover within movement D."""
    if not x < x2:
        raise ValueError("segment must have x < x2")
    rr = reach_range(s, D)
    if rr is None or rr.g <= x or rr.l >= x2:
        return 0.0
    return min(2 * s.r, min(x2, rr.g) - max(x, rr.l))


def sigma_cov(s: Sensor, D: float, segments: Sequence[tuple[float, float]]) -> float:
    return min(2 * s.r, sum(lambda_cov(s, D, a, b) for a, b in segments))


def check_segments(segments: Sequence[tuple[float, float]]) -> None:
    prev = -math.inf
    for a, b in segments:
        if not a < b or a < prev:
            raise ValueError(f"segments must be sorted, disjoint and non-degenerate: {segments}")
        prev = b


def certificate_check(inst: Instance, D: float, segments: Sequence[tuple[float, float]]) -> bool:
    """Necessary condition for feasibility at D.

    False proves no relocation with max movement D covers the barrier;
    True proves nothing.
    """
    check_segments(segments)
    supply = sum(sigma_cov(s, D, segments) for s in inst.sensors)
    demand = sum(b - a for a, b in segments)
    return supply >= demand - EPS


@dataclass(frozen=True)
class Feasible:
    solution: Solution

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Infeasible:
    reason: str = ""

    def __bool__(self):
        return False


DecisionOutcome = Feasible | Infeasible


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a movement-bound search.

    `reported_D` is the proven bound base_D + slack; `solution.max_move` is
    what the returned placement actually needs and is often much smaller.
    """

    base_D: float
    slack: float
    solution: Solution
    kind: str
    info: dict = field(default_factory=dict, compare=False)

    @property
    def reported_D(self) -> float:
        return self.base_D + self.slack

    @property
    def max_move(self) -> float:
        return self.solution.max_move
