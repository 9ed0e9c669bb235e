import math
import random

from mmsm.model import Instance, Sensor


def tight_greedy():
    # r1 = 1, r2 = 4: barrier [0, 2r1 + 2r2], sensors at (2r2 + r1, 0), (2r1 + r2, 0)
    return Instance.from_tuples(10, [(9, 0, 1), (6, 0, 4)])


def lp_gap():
    # both sensors at (r1 + r2, 0)
    return Instance.from_tuples(10, [(5, 0, 1), (5, 0, 4)])


def ori():
    return Instance.from_tuples(6, [(3, 0, 1), (3, -1.2, 1), (3, 2, 1)])


def random_integer_instance(rng, n_range=(2, 6), coord=(0, 20), radius=(1, 4), barrier=(5, 20)):
    """Integer instance with enough total capacity to cover the barrier."""
    while True:
        n = rng.randint(*n_range)
        M = rng.randint(*barrier)
        sensors = [
            (rng.randint(*coord), rng.randint(*coord), rng.randint(*radius)) for _ in range(n)
        ]
        inst = Instance.from_tuples(M, sensors)
        if inst.capacity >= M:
            return inst


def random_real_instance(rng, n_range=(2, 6)):
    while True:
        n = rng.randint(*n_range)
        M = rng.uniform(3, 15)
        sensors = [
            (rng.uniform(-3, M + 3), rng.uniform(-5, 5), rng.uniform(0.5, 3)) for _ in range(n)
        ]
        inst = Instance.from_tuples(M, sensors)
        if inst.capacity >= M:
            return inst


def random_line_sensors(rng, n_max=7):
    n = rng.randint(1, n_max)
    M = rng.randint(2, 12)
    sensors = [Sensor(rng.randint(-2, M + 2), 0, rng.choice([0.5, 1, 1.5, 2, 3])) for _ in range(n)]
    return sensors, M


def suite(seed, count, make=random_integer_instance):
    rng = random.Random(seed)
    return [make(rng) for _ in range(count)]


def d_sweep(inst, steps=10):
    from mmsm.model import max_barrier_distance

    top = max_barrier_distance(inst)
    return [top * k / (steps - 1) for k in range(steps)]


def integer_d_values(inst, count=8):
    from mmsm.model import max_barrier_distance

    top = math.ceil(max_barrier_distance(inst))
    step = max(1, math.ceil(top / count))
    return list(range(0, top + 1, step))
