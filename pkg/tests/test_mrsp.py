import random

import pytest
from hypothesis import given, settings, strategies as st

from kpeaked.election import InputError
from kpeaked.generate import random_mrsp
from kpeaked.mrsp import (
    MrspInstance,
    brute_mrsp,
    greedy_maximal_packing,
    is_valid_packing,
    solve_mrsp,
)


def unit(sets, r, target, cap=None):
    universe = tuple(sorted({c for s in sets for c in s}))
    cap = cap or {c: 1 for c in universe}
    return MrspInstance(universe, cap, tuple(map(frozenset, sets)), target, r)


def check(inst):
    got = solve_mrsp(inst)
    want = brute_mrsp(inst)
    assert got.answer == want.answer
    if got.answer:
        assert len(got.witness) == inst.target == len(set(got.witness))
        assert is_valid_packing(inst, [inst.sets[i] for i in got.witness])
    R, r = inst.target, inst.r
    assert got.max_branch <= 2 * r * R
    assert got.max_depth <= max(0, (r - 1) * R)
    return got


def test_last_open_partial_must_still_branch():
    inst = unit([{0, 1}, {0, 2}, {0, 3}, {1, 2}], r=2, target=2)
    assert brute_mrsp(inst).answer
    assert check(inst).answer
    assert not solve_mrsp(inst, literal=True).answer


def test_greedy_choice_is_not_enough():
    # greedy keeps {0,1}, which blocks both other sets; the answer uses those two
    inst = unit([{0, 1}, {0, 2}, {1, 3}], r=2, target=2)
    assert greedy_maximal_packing(inst) == [0]
    assert check(inst).witness == [1, 2]


@pytest.mark.parametrize(
    "sets,r,target,cap,expect",
    [
        ([{0, 1}] * 3, 2, 2, {0: 2, 1: 2}, True),
        ([{0, 1}] * 3, 2, 3, {0: 2, 1: 2}, False),
        ([{0}, {1}], 1, 0, None, True),
        ([{0}, {1}], 1, 3, None, False),
        ([frozenset()] * 2, 0, 2, {}, True),
        ([{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {1, 3, 5}], 3, 2, None, False),
        ([{0, 1, 2}, {2, 3, 4}, {1, 3, 5}, {3, 4, 5}], 3, 2, None, True),
        ([{0, 1, 2}, {2, 3, 4}, {4, 5, 0}], 3, 2, None, False),
    ],
)
def test_small_cases(sets, r, target, cap, expect):
    sets = [frozenset(s) for s in sets]
    universe = tuple(sorted({c for s in sets for c in s}))
    inst = MrspInstance(universe, cap or {c: 1 for c in universe}, tuple(sets), target, r)
    assert check(inst).answer is expect


def test_instance_validation():
    with pytest.raises(InputError):
        MrspInstance((0, 1), {0: 1, 1: 1}, (frozenset({0}),), 1, 2)
    with pytest.raises(InputError):
        MrspInstance((0, 1), {0: 0, 1: 1}, (frozenset({0, 1}),), 1, 2)
    with pytest.raises(InputError):
        MrspInstance((0,), {0: 1}, (frozenset({0, 5}),), 1, 2)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**30))
def test_matches_brute_force(seed):
    rng = random.Random(seed)
    r = rng.randint(1, 3)
    n = rng.randint(r, 9)
    inst = random_mrsp(rng, n, rng.randint(0, 9), r, rng.randint(0, 4), max_cap=rng.choice([1, 2, 3]))
    check(inst)
