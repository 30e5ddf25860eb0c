import random

import pytest
from hypothesis import given, settings, strategies as st

from kpeaked.av2dp import filter_p_approving, solve_av2, split_one_block
from kpeaked.control import AvInstance, verify_witness
from kpeaked.election import Election, InputError, VoteMultiset, is_submultiset
from kpeaked.generate import names, random_av
from kpeaked.oracles import brute_av
from kpeaked.peaks import approved_blocks


def agree(inst):
    dp = solve_av2(inst)
    bf = brute_av(inst)
    assert dp.answer == bf.answer
    if dp.answer:
        assert verify_witness(inst, dp.witness)
        assert is_submultiset(dp.witness, inst.unregistered)
    return dp.answer


def test_split_keeps_each_copy():
    axis = tuple(range(6))
    p = 2
    one_a, one_b = (2, 3, 1, 0, 4, 5), (3, 2, 4, 1, 0, 5)
    two = (2, 5, 1, 3, 4, 0)
    votes = VoteMultiset(((one_a, 2), (one_b, 1), (two, 3), ((5, 4, 3, 2, 1, 0), 1)))
    useful = filter_p_approving(votes, 2, p)
    assert len(useful) == 6
    one, twos = split_one_block(useful, 2, axis, p)
    assert one == {2: [one_a, one_a, one_b]}
    assert len(twos) == 3 and twos[0].p_block == (2, 2) and twos[0].other_block == (5, 5)


def test_rejects_other_peak_bounds_and_wide_r():
    rng = random.Random(0)
    inst = random_av(rng, 6, 2, 3, 3, 1, k=3)
    with pytest.raises(InputError):
        solve_av2(inst)
    inst = random_av(rng, 9, 7, 3, 3, 1, k=2)
    with pytest.raises(InputError):
        solve_av2(inst, max_r=6)


def test_empty_pool_and_zero_budget():
    rng = random.Random(1)
    inst = random_av(rng, 6, 3, 4, 0, 0)
    assert agree(inst) == brute_av(inst).answer
    inst = random_av(rng, 6, 3, 4, 4, 0)
    agree(inst)


def test_needs_two_block_votes_to_win():
    # axis 0..6, p=3; rivals 1, 2, 4, 5 lead and every p-block vote would feed one of them
    axis = tuple(range(7))
    reg = VoteMultiset((((1, 2, 0, 3, 4, 5, 6), 1), ((5, 4, 6, 3, 2, 1, 0), 1)))
    el = Election(names(7), 3, 2, reg)
    two = (3, 0, 1, 2, 4, 5, 6)      # approves {3, 0}: blocks (0,0) and (3,3)
    other = (3, 6, 5, 2, 4, 1, 0)    # approves {3, 6}
    pool = VoteMultiset(((two, 2), (other, 1)))
    inst = AvInstance(el, pool, 2, axis, 2)
    assert approved_blocks(two, 2, axis) == [(0, 0), (3, 3)]
    assert agree(inst)
    assert solve_av2(inst).witness == VoteMultiset(((two, 1), (other, 1)))
    assert not solve_av2(AvInstance(el, pool, 1, axis, 2)).answer


@pytest.mark.parametrize("where", ["left", "right"])
def test_p_at_axis_end(where):
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(4, 8)
        axis = tuple(rng.sample(range(m), m))
        p = axis[0] if where == "left" else axis[-1]
        agree(random_av(rng, m, rng.randint(2, min(4, m - 1)), rng.randint(1, 6), rng.randint(1, 7), rng.randint(1, 4), axis=axis, p=p))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**30))
def test_matches_brute_force(seed):
    rng = random.Random(seed)
    m = rng.randint(3, 9)
    r = rng.randint(1, min(5, m - 1))
    inst = random_av(rng, m, r, rng.randint(0, 7), rng.randint(0, 8), rng.randint(0, 4),
                     p=rng.choice([None, "favoured"]), dup=rng.choice([0.0, 0.3, 0.8]))
    agree(inst)
