"""JSON instance and solution files."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Optional

from .model import Instance, Sensor, Solution


class InputError(ValueError):
    pass


def _num(v: float) -> float:
    return float(f"{v:.12g}")


def instance_to_dict(inst: Instance) -> dict:
    return {
        "barrier_length": _num(inst.barrier_length),
        "sensors": [{"x": _num(s.x), "y": _num(s.y), "r": _num(s.r)} for s in inst.sensors],
    }


def instance_from_dict(data: dict) -> Instance:
    try:
        M = float(data["barrier_length"])
        sensors = tuple(Sensor(float(s["x"]), float(s["y"]), float(s["r"])) for s in data["sensors"])
        return Instance(M, sensors)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed instance: {exc}") from exc


def load_instance(path: str | Path) -> Instance:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read instance {path}: {exc}") from exc
    return instance_from_dict(data)


def dump_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(json.dumps(instance_to_dict(inst), indent=2) + "\n")


def rounded_solution(inst: Instance, sol: Solution) -> Solution:
    """Solution with positions at 12 significant digits, so that what is
    written to disk is exactly what gets verified."""
    return Solution.build(inst, [None if p is None else _num(p) for p in sol.positions])


def solution_to_dict(sol: Solution, base_D: float, reported_D: float) -> dict:
    return {
        "base_D": _num(base_D),
        "reported_D": _num(reported_D),
        "max_move": _num(sol.max_move),
        "positions": list(sol.positions),
    }


def dump_solution(inst: Instance, sol: Solution, base_D: float, reported_D: float, path: str | Path) -> Solution:
    sol = rounded_solution(inst, sol)
    Path(path).write_text(json.dumps(solution_to_dict(sol, base_D, reported_D), indent=2) + "\n")
    return sol


def load_solution(inst: Instance, path: str | Path) -> tuple[Solution, dict]:
    try:
        data = json.loads(Path(path).read_text())
        positions: list[Optional[float]] = [None if p is None else float(p) for p in data["positions"]]
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed solution {path}: {exc}") from exc
    if len(positions) != inst.n or any(p is not None and not math.isfinite(p) for p in positions):
        raise InputError("solution positions do not match the instance")
    return Solution.build(inst, positions), data
