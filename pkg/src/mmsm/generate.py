"""Seeded random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .model import Instance, Sensor


@dataclass(frozen=True)
class GeneratorConfig:
    n: int = 6
    barrier: float = 20.0
    radius_min: float = 1.0
    radius_max: float = 4.0
    spread: float = 5.0
    integer: bool = False
    seed: int = 0


def generate(cfg: GeneratorConfig) -> Instance:
    """Positions uniform in [-spread, M + spread] x [-spread, spread]."""
    if cfg.n < 1 or cfg.barrier <= 0 or not 0 < cfg.radius_min <= cfg.radius_max:
        raise ValueError(f"bad generator config {cfg}")
    rng = random.Random(cfg.seed)
    M, s = cfg.barrier, cfg.spread
    sensors = []
    for _ in range(cfg.n):
        if cfg.integer:
            x = rng.randint(int(-s), int(M + s))
            y = rng.randint(int(-s), int(s))
            r = rng.randint(int(cfg.radius_min), int(cfg.radius_max))
        else:
            x = rng.uniform(-s, M + s)
            y = rng.uniform(-s, s)
            r = rng.uniform(cfg.radius_min, cfg.radius_max)
        sensors.append(Sensor(x, y, r))
    return Instance(M, tuple(sensors))
