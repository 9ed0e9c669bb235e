import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmsm.model import (
    Instance,
    Sensor,
    Solution,
    certificate_check,
    lambda_cov,
    max_barrier_distance,
    reach_range,
    sigma_cov,
    verify_solution,
)
from mmsm.oracle import exact_2d

coords = st.floats(-20, 20, allow_nan=False)
radii = st.floats(0.1, 5)
bounds = st.floats(0, 30)


def brute_lambda(s, D, x, x2, samples=4001):
    """Best overlap of a placed sensor interval with [x, x2], scanning centers."""
    if D < abs(s.y):
        return 0.0
    h = math.sqrt(D * D - s.y * s.y)
    best = 0.0
    for k in range(samples):
        c = s.x - h + 2 * h * k / (samples - 1)
        best = max(best, min(x2, c + s.r) - max(x, c - s.r))
    return max(best, 0.0)


def test_reach_range_examples():
    rr = reach_range(Sensor(5, 0, 2), 3)
    assert (rr.l, rr.g) == (0, 10)
    rr = reach_range(Sensor(3, -1.2, 1), 2)
    assert rr.l == pytest.approx(0.4) and rr.g == pytest.approx(5.6)
    assert reach_range(Sensor(3, 2, 1), 1.5) is None


def test_sensor_validation():
    with pytest.raises(ValueError):
        Sensor(0, 0, 0)
    with pytest.raises(ValueError):
        Sensor(math.nan, 0, 1)
    with pytest.raises(ValueError):
        Instance(0, (Sensor(0, 0, 1),))


@given(coords, coords, radii, bounds)
def test_reach_width(x, y, r, D):
    rr = reach_range(Sensor(x, y, r), D)
    if D < abs(y):
        assert rr is None
    else:
        assert rr.g - rr.l == pytest.approx(2 * math.sqrt(D * D - y * y) + 2 * r, abs=1e-9)
        assert rr.l == pytest.approx(rr.c_min - r) and rr.g == pytest.approx(rr.c_max + r)


@given(coords, coords, radii, bounds, st.floats(0, 10))
def test_reach_monotone_in_d(x, y, r, D, extra):
    s = Sensor(x, y, r)
    a, b = reach_range(s, D), reach_range(s, D + extra)
    if a is not None:
        assert b.l <= a.l + 1e-12 and b.g >= a.g - 1e-12


def test_max_barrier_distance_examples(ori_inst):
    assert max_barrier_distance(Instance.from_tuples(10, [(5, 0, 1)])) == 5
    assert max_barrier_distance(ori_inst) == pytest.approx(math.sqrt(13))
    assert max_barrier_distance(Instance.from_tuples(2, [(1, 0, 1)])) == 1
    with pytest.raises(ValueError):
        max_barrier_distance(Instance(1, ()))


def test_max_barrier_distance_matches_sampling(ori_inst):
    M = ori_inst.barrier_length
    sampled = max(
        math.hypot(s.x - M * k / 1000, s.y) for s in ori_inst.sensors for k in range(1001)
    )
    assert max_barrier_distance(ori_inst) == pytest.approx(sampled, abs=1e-12)


def test_verify_examples():
    inst = Instance.from_tuples(2, [(1, 0, 1)])
    v = verify_solution(inst, Solution.build(inst, [1.0]))
    assert v.covered and v.max_move == 0 and v.gaps == []

    inst = Instance.from_tuples(10, [(9, 0, 1), (6, 0, 4)])
    v = verify_solution(inst, Solution.build(inst, [1.0, 6.0]))
    assert v.covered and v.max_move == 8

    v = verify_solution(inst, Solution.build(inst, [None, 6.0]))
    assert not v.covered and v.gaps == [(0.0, 2.0)]


@settings(max_examples=200)
@given(
    st.floats(1, 20),
    st.lists(st.tuples(st.floats(-5, 25), st.floats(0.1, 4), st.booleans()), min_size=1, max_size=6),
)
def test_verify_gap_accounting(M, placed):
    inst = Instance.from_tuples(M, [(c, 0, r) for c, r, _ in placed])
    positions = [c if used else None for c, _, used in placed]
    v = verify_solution(inst, Solution.build(inst, positions))
    covered = 0.0
    # covered length by fine sampling is the independent side
    n = 20000
    for k in range(n):
        t = M * (k + 0.5) / n
        if any(p is not None and abs(t - p) <= r for (_, r, _), p in zip(placed, positions)):
            covered += M / n
    gap_total = sum(b - a for a, b in v.gaps)
    assert gap_total == pytest.approx(M - covered, abs=M * 2e-4 + 1e-6)
    for (a, b), (c, d) in zip(v.gaps, v.gaps[1:]):
        assert b <= c
    assert v.covered == (not v.gaps)


def test_lambda_examples():
    # range [0, 6] with r = 1: sensor at (3, 0) with D = 2
    s = Sensor(3, 0, 1)
    assert lambda_cov(s, 2, 1, 5) == 2
    assert lambda_cov(s, 2, 7, 9) == 0
    s2 = Sensor(3, -1.2, 1)
    assert lambda_cov(s2, 2, 5, 6) == pytest.approx(0.6)
    assert brute_lambda(s2, 2, 5, 6) == pytest.approx(0.6, abs=1e-3)


@settings(max_examples=150)
@given(coords, st.floats(-5, 5), radii, bounds, st.floats(-20, 20), st.floats(0.01, 10))
def test_lambda_against_center_scan(x, y, r, D, a, length):
    s = Sensor(x, y, r)
    lam = lambda_cov(s, D, a, a + length)
    assert 0 <= lam <= min(2 * r, length) + 1e-9
    assert lam == pytest.approx(brute_lambda(s, D, a, a + length), abs=0.02 * (1 + D))


def test_sigma_examples():
    s = Sensor(3, 0, 1)
    assert sigma_cov(s, 2, [(0, 0.5), (5, 6)]) == pytest.approx(1.5)
    assert sigma_cov(s, 2, []) == 0
    assert sigma_cov(Sensor(3, -1.2, 1), 2, [(0, 0.4), (5.6, 6)]) == pytest.approx(0, abs=1e-9)


def test_certificate_examples(ori_inst):
    assert certificate_check(ori_inst, 2, [(0, 6)])
    two = Instance.from_tuples(6, [(0, 0, 1), (6, 0, 1)])
    assert not certificate_check(two, 1, [(0, 6)])
    assert certificate_check(two, 1, [])
    with pytest.raises(ValueError):
        certificate_check(two, 1, [(3, 4), (0, 1)])


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 10), st.integers(-4, 4), st.integers(1, 3)), min_size=1, max_size=4),
    st.integers(2, 10),
    st.floats(0, 8),
    st.lists(st.floats(0, 1), min_size=2, max_size=6),
)
def test_failed_certificate_implies_infeasible(sensors, M, D, cuts):
    inst = Instance.from_tuples(M, sensors)
    pts = sorted({round(c * M, 6) for c in cuts})
    segs = [(a, b) for a, b in zip(pts[::2], pts[1::2]) if b > a]
    if certificate_check(inst, D, segs):
        return
    opt = exact_2d(inst, 1e-6)
    assert opt is None or opt > D - 1e-6
