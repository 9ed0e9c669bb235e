import itertools
import random

import pytest

from helpers import integer_d_values, random_integer_instance
from mmsm.lp_round import decide_lp
from mmsm.matching import build_h, decide_matching, matched_pieces, max_matching
from mmsm.model import Instance, verify_solution


def brute_max_matching(h):
    """Largest set of unit edges assignable to distinct slots, by exhaustion."""
    units = h.unit_sets()
    per_sensor = [h.slot_owner.count(i) for i in range(len(units))]
    best = 0
    for k in range(h.n_units, 0, -1):
        for chosen in itertools.combinations(range(h.n_units), k):
            # greedy by earliest window end is exact for interval windows
            left = list(per_sensor)
            ok = True
            for u in chosen:
                cands = [i for i, s in enumerate(units) if u in s and left[i] > 0]
                if not cands:
                    ok = False
                    break
                i = min(cands, key=lambda i: max(units[i]))
                left[i] -= 1
            if ok:
                return k
    return best


def test_build_h_examples(fig1):
    h = build_h(Instance.from_tuples(4, [(1, 0, 1), (3, 0, 1)]), 0)
    assert h.windows == ((0, 2), (2, 4)) and h.n_units == 4 and h.n_slots == 4
    h = build_h(Instance.from_tuples(4, [(2, 0, 1), (2, 0, 1)]), 1)
    assert h.windows == ((0, 4), (0, 4))
    h = build_h(fig1, 2)
    assert h.unit_sets()[0] == {6, 7, 8, 9}
    assert h.unit_sets()[1] == set(range(10))
    assert h.n_slots == 10


def test_build_h_rejects_fractional():
    with pytest.raises(ValueError):
        build_h(Instance.from_tuples(4.5, [(1, 0, 1)]), 1)
    with pytest.raises(ValueError):
        build_h(Instance.from_tuples(4, [(1, 0, 0.75)]), 1)
    h = build_h(Instance.from_tuples(4.5, [(1, 0, 0.75)]), 2, scale=2)
    assert h.n_units == 9 and h.n_slots == 3


def test_matching_sizes(fig1):
    assert len(max_matching(build_h(Instance.from_tuples(4, [(1, 0, 1), (3, 0, 1)]), 0))) == 4
    assert len(max_matching(build_h(Instance.from_tuples(4, [(2, 0, 1)]), 5))) == 2
    assert len(max_matching(build_h(fig1, 2))) == 10


def test_matching_is_valid_and_maximum():
    rng = random.Random(51)
    for _ in range(60):
        inst = random_integer_instance(rng, n_range=(1, 4), coord=(0, 8), radius=(1, 2), barrier=(2, 7))
        D = rng.randint(0, 6)
        h = build_h(inst, D)
        y = max_matching(h)
        units = [u for u, _ in y.pairs]
        slots = [v for _, v in y.pairs]
        assert len(set(units)) == len(units) and len(set(slots)) == len(slots)
        sets = h.unit_sets()
        assert all(u in sets[h.slot_owner[v]] for u, v in y.pairs)
        assert len(y) == brute_max_matching(h)


def test_decide_examples():
    out = decide_matching(Instance.from_tuples(4, [(2, 0, 1), (2, 0, 1)]), 1)
    assert out and sorted(out.solution.positions) == [1.0, 3.0] and out.solution.moves == (1.0, 1.0)
    out = decide_matching(Instance.from_tuples(4, [(1, 0, 1), (3, 0, 1)]), 0)
    assert out and out.solution.moves == (0.0, 0.0)
    two = Instance.from_tuples(6, [(0, 0, 1), (6, 0, 1)])
    assert not any(decide_matching(two, D) for D in (0, 3, 50))


def test_matched_units_respect_slots():
    rng = random.Random(52)
    for _ in range(50):
        inst = random_integer_instance(rng)
        h = build_h(inst, rng.randint(0, 15))
        pieces = matched_pieces(h, max_matching(h))
        for i, s in enumerate(inst.sensors):
            assert sum(p.length for p in pieces if p.owner == i) <= 2 * s.r


def test_agrees_with_lp_and_monotone():
    rng = random.Random(53)
    for _ in range(40):
        inst = random_integer_instance(rng)
        flags = []
        for D in integer_d_values(inst):
            m = decide_matching(inst, D)
            assert bool(m) == decide_lp(inst, D)
            flags.append(bool(m))
            if m:
                v = verify_solution(inst, m.solution)
                assert v.covered and v.max_move <= D + inst.r_max + 1e-6
        assert flags == sorted(flags)
