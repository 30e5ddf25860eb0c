import random
from itertools import combinations

import pytest

from kpeaked.control import (
    AcInstance,
    AvInstance,
    DcInstance,
    DvInstance,
    outcome_scores,
    validate,
    verify_witness,
)
from kpeaked.election import Election, VoteMultiset
from kpeaked.generate import random_ac, random_av, random_dc, random_dv
from kpeaked.oracles import CapacityError, brute, brute_dc, count_vectors


def plain_winner(ballots, r, alive, p):
    tally = {c: 0 for c in alive}
    for b in ballots:
        for c in [c for c in b if c in alive][:r]:
            tally[c] += 1
    return all(tally[p] > v for c, v in tally.items() if c != p)


def naive(inst):
    """Item-level subset search, no numpy, no count vectors."""
    el = inst.election
    r, p, m = el.r, el.distinguished, el.m
    reg = list(el.registered)
    everyone = set(range(m))
    if isinstance(inst, AvInstance):
        pool = list(inst.unregistered)
        return any(
            plain_winner(reg + [pool[i] for i in pick], r, everyone, p)
            for k in range(inst.budget + 1)
            for pick in combinations(range(len(pool)), k)
        )
    if isinstance(inst, DvInstance):
        return any(
            plain_winner([v for i, v in enumerate(reg) if i not in pick], r, everyone, p)
            for k in range(inst.budget + 1)
            for pick in map(set, combinations(range(len(reg)), k))
        )
    if isinstance(inst, AcInstance):
        spoil = sorted(inst.spoilers)
        return any(
            plain_winner(reg, r, (everyone - set(spoil)) | set(pick), p)
            for k in range(inst.budget + 1)
            for pick in combinations(spoil, k)
        )
    others = [c for c in range(m) if c != p]
    return any(
        plain_winner(reg, r, everyone - set(pick), p)
        for k in range(inst.budget + 1)
        for pick in combinations(others, k)
    )


def test_count_vectors_order_and_bounds():
    vecs = list(count_vectors([2, 1], 2))
    assert vecs == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
    assert list(count_vectors([], 3)) == [()]


@pytest.mark.parametrize("maker", ["av", "dv", "ac", "dc"])
def test_brute_matches_naive_search(maker):
    rng = random.Random(hash(maker) % 1000)
    for _ in range(120):
        m = rng.randint(3, 6)
        r = rng.randint(1, m - 1)
        k = rng.choice([1, 2, 3])
        if maker == "av":
            inst = random_av(rng, m, r, rng.randint(0, 5), rng.randint(0, 5), rng.randint(0, 3), k)
        elif maker == "dv":
            inst = random_dv(rng, m, r, rng.randint(1, 6), rng.randint(0, 3), k)
        elif maker == "ac":
            inst = random_ac(rng, m, r, rng.randint(1, 5), rng.randint(0, m - 1), rng.randint(0, 3), k)
        else:
            inst = random_dc(rng, m, r, rng.randint(1, 5), rng.randint(0, 3), k)
        assert validate(inst) == []
        dec = brute(inst)
        assert dec.answer == naive(inst)
        if dec.answer:
            assert verify_witness(inst, dec.witness)


def _abc(votes, r=2, p=0):
    return Election(("a", "b", "c"), p, r, VoteMultiset.from_items(votes))


def test_validate_reports_each_problem():
    el = _abc([(0, 1, 2), (2, 0, 1)])
    assert validate(DvInstance(el, 1, (0, 1, 2), 1)) == ["registered vote #1 (2, 0, 1) is not 1-peaked on the axis"]
    assert "axis" in validate(DvInstance(el, 1, (0, 1, 1), 2))[0]
    assert validate(DvInstance(el, 3, (0, 1, 2), 2)) == ["budget 3 outside 0..2"]
    assert "spoiler" in validate(AcInstance(el, frozenset({0}), 0, (0, 1, 2), 2))[0]
    assert validate(DcInstance(el, 2, (0, 1, 2), 2)) == []
    assert validate(DcInstance(el, 3, (0, 1, 2), 2)) == ["budget 3 outside 0..2"]
    assert validate(DvInstance(el, 0, (0, 1, 2), 0)) == ["peak bound k=0 must be positive"]


def test_witness_checks_budget_and_membership():
    el = _abc([(1, 2, 0), (0, 1, 2)], r=1)
    pool = VoteMultiset.from_items([(0, 2, 1)])
    inst = AvInstance(el, pool, 1, (0, 1, 2), 2)
    assert verify_witness(inst, pool)
    assert not verify_witness(inst, VoteMultiset.from_items([(0, 1, 2)]))
    assert not verify_witness(inst, VoteMultiset.from_items([(0, 2, 1), (0, 2, 1)]))
    assert outcome_scores(inst, pool).tolist() == [2, 1, 0]


def test_candidate_control_rescoring():
    # 1-approval: deleting b moves its voter to c, deleting c lets a win outright
    el = _abc([(1, 2, 0), (0, 1, 2), (2, 1, 0), (2, 0, 1)], r=1)
    dc = DcInstance(el, 1, (0, 1, 2), 2)
    assert outcome_scores(dc, {2}).tolist() == [2, 2, -1]
    assert not verify_witness(dc, {2})
    assert brute(dc).answer is False
    assert brute(DcInstance(el, 2, (0, 1, 2), 2)).witness == frozenset({1, 2})
    ac = AcInstance(el, frozenset({2}), 1, (0, 1, 2), 2)
    assert outcome_scores(ac, frozenset()).tolist() == [2, 2, -1]
    assert brute(ac).answer is False


def test_small_remaining_field_is_flagged():
    el = _abc([(1, 0, 2), (0, 1, 2)], r=2)
    dec = brute(DcInstance(el, 2, (0, 1, 2), 2))
    assert dec.answer and dec.witness == frozenset({1, 2})
    assert dec.notes


def test_candidate_search_capacity_guard():
    m = 24
    el = Election(tuple(f"c{i}" for i in range(m)), 0, 1, VoteMultiset.from_items([tuple(range(m))]))
    with pytest.raises(CapacityError):
        brute_dc(DcInstance(el, 1, tuple(range(m)), 12))
