from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from kpeaked.election import (
    Election,
    InputError,
    VoteMultiset,
    approved_set,
    is_submultiset,
    is_unique_winner,
    multiset_minus,
    multiset_union,
    position,
    restrict,
    scores,
    unique_winner,
    winners_from_scores,
)


def test_multiset_operations_on_small_integers():
    a = VoteMultiset.from_items([1, 1, 1, 2, 3, 3, 4])
    b = VoteMultiset.from_items([1, 2, 3])
    assert len(a) == 7 and len(b) == 3
    assert multiset_union(a, b) == VoteMultiset.from_items([1, 1, 1, 1, 2, 2, 3, 3, 3, 4])
    assert multiset_minus(a, b) == VoteMultiset.from_items([1, 1, 3, 4])
    assert is_submultiset(b, a)
    assert not is_submultiset(a, b)


def test_three_voter_election_scores():
    a, b, c = 0, 1, 2
    votes = VoteMultiset.from_items([(a, b, c), (a, c, b), (c, a, b)])
    sc = scores(3, votes, 2)
    assert sc.tolist() == [3, 1, 2]
    assert unique_winner(3, votes, 2) == a
    assert approved_set((a, b, c), 2) == {a, b}


def test_tie_gives_no_unique_winner():
    votes = VoteMultiset.from_items([(0, 1, 2), (1, 0, 2)])
    assert winners_from_scores(scores(3, votes, 1)) == [0, 1]
    assert unique_winner(3, votes, 1) is None
    assert not is_unique_winner(np.array([2, 2, 0]), 0)
    assert is_unique_winner(np.array([3, 2, 0]), 0)


def test_position_and_restrict():
    vote = (0, 1, 2, 3, 4)
    assert position(vote, 3) == 4
    assert restrict(vote, {1, 3, 4}) == (1, 3, 4)
    with pytest.raises(InputError):
        position((0, 1), 5)
    with pytest.raises(InputError):
        restrict(vote, {9})


def test_election_rejects_bad_inputs():
    with pytest.raises(InputError):
        Election(("a", "b"), 0, 2)
    with pytest.raises(InputError):
        Election(("a", "a", "b"), 0, 1)
    with pytest.raises(InputError):
        Election(("a", "b", "c"), 0, 1, VoteMultiset.from_items([(0, 1, 1)]))
    with pytest.raises(InputError):
        VoteMultiset(((1, 0),))
    with pytest.raises(InputError):
        approved_set((0, 1, 2), 3)


def test_entries_are_not_merged_but_equality_is_by_content():
    a = VoteMultiset((((0, 1), 2), ((1, 0), 1), ((0, 1), 1)))
    assert len(a.entries) == 3
    assert a == VoteMultiset((((1, 0), 1), ((0, 1), 3)))
    assert a.normalize().entries == (((0, 1), 3), ((1, 0), 1))
    assert hash(a) == hash(a.normalize())


small = st.lists(st.integers(0, 4), max_size=8).map(VoteMultiset.from_items)


@given(small, small, small)
def test_multiset_algebra_laws(a, b, c):
    assert multiset_union(a, b) == multiset_union(b, a)
    assert multiset_union(multiset_union(a, b), c) == multiset_union(a, multiset_union(b, c))
    assert multiset_minus(multiset_union(a, b), b) == a
    assert is_submultiset(multiset_minus(a, b), a)
    assert len(multiset_union(a, b)) == len(a) + len(b)
    assert is_submultiset(a, b) == (multiset_minus(a, b) == VoteMultiset())
    assert Counter(multiset_union(a, b)) == Counter(list(a) + list(b))


@given(st.permutations(range(6)), st.integers(1, 5))
def test_scores_sum_to_r_per_vote(vote, r):
    votes = VoteMultiset(((tuple(vote), 3),))
    sc = scores(6, votes, r)
    assert sc.sum() == 3 * r
    assert set(np.flatnonzero(sc)) == set(vote[:r])
