"""Single-peaked and k-peaked structure of votes with respect to a fixed axis."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .election import InputError, Order, restrict

Axis = tuple[int, ...]
Block = tuple[int, int]


def _axis_positions(vote: Sequence[int], axis: Sequence[int]) -> list[int]:
    where = {c: i for i, c in enumerate(axis)}
    if len(where) != len(axis) or set(vote) != set(where) or len(vote) != len(axis):
        raise InputError(f"vote {tuple(vote)} and axis {tuple(axis)} rank different candidates")
    return [where[c] for c in vote]


def _segment_single_peaked(pos: Sequence[int], lo: int, hi: int) -> bool:
    """True iff the vote (as axis positions) restricted to [lo, hi] is single-peaked.

    Every top-t prefix of the restricted vote has to be a contiguous run of
    the axis segment, so each next candidate extends the run by one step.
    """
    left = right = None
    for x in pos:
        if x < lo or x > hi:
            continue
        if left is None:
            left = right = x
        elif x == left - 1:
            left = x
        elif x == right + 1:
            right = x
        else:
            return False
    return True


def is_single_peaked(vote: Sequence[int], axis: Sequence[int]) -> bool:
    pos = _axis_positions(vote, axis)
    return _segment_single_peaked(pos, 0, len(axis) - 1)


def is_single_peaked_triples(vote: Sequence[int], axis: Sequence[int]) -> bool:
    """Definitional cubic check: for a L b L c, ``c > b`` in the vote forces ``b > a``."""
    pos = _axis_positions(vote, axis)
    rank = {x: i for i, x in enumerate(pos)}
    m = len(axis)
    for a, b, c in combinations(range(m), 3):
        for x, y, z in ((a, b, c), (c, b, a)):
            if rank[z] < rank[y] and not rank[y] < rank[x]:
                return False
    return True


def min_peak_cuts(vote: Sequence[int], axis: Sequence[int]) -> list[int]:
    """Greedy segmentation into the fewest single-peaked axis segments.

    Returns the cut positions; a cut ``s`` separates axis indices ``s-1`` and
    ``s``.  Segment feasibility is closed under shrinking, so extending each
    segment as far as possible is optimal.
    """
    pos = _axis_positions(vote, axis)
    m = len(axis)
    cuts = []
    start = 0
    while start < m:
        end = start
        while end + 1 < m and _segment_single_peaked(pos, start, end + 1):
            end += 1
        if end + 1 < m:
            cuts.append(end + 1)
        start = end + 1
    return cuts


def min_peaks(vote: Sequence[int], axis: Sequence[int]) -> int:
    return len(min_peak_cuts(vote, axis)) + 1


def min_peaks_brute(vote: Sequence[int], axis: Sequence[int]) -> int:
    """Smallest number of segments over every composition of the axis."""
    pos = _axis_positions(vote, axis)
    m = len(axis)
    for k in range(1, m + 1):
        for cuts in combinations(range(1, m), k - 1):
            bounds = (0,) + cuts + (m,)
            if all(
                _segment_single_peaked(pos, bounds[i], bounds[i + 1] - 1)
                for i in range(k)
            ):
                return k
    return m


def is_k_peaked(vote: Sequence[int], axis: Sequence[int], k: int) -> list[int] | None:
    """A witness partition (list of cut positions) into at most ``k`` segments, or None."""
    if k < 1:
        raise InputError(f"peak bound must be positive, got {k}")
    cuts = min_peak_cuts(vote, axis)
    return cuts if len(cuts) + 1 <= k else None


def check_witness(vote: Sequence[int], axis: Sequence[int], cuts: Sequence[int]) -> bool:
    """Every segment induced by ``cuts`` is non-empty and single-peaked."""
    pos = _axis_positions(vote, axis)
    bounds = [0, *cuts, len(axis)]
    if any(bounds[i] >= bounds[i + 1] for i in range(len(bounds) - 1)):
        return False
    return all(
        _segment_single_peaked(pos, bounds[i], bounds[i + 1] - 1)
        for i in range(len(bounds) - 1)
    )


def approved_blocks(vote: Sequence[int], r: int, axis: Sequence[int]) -> list[Block]:
    """Maximal runs of the axis (inclusive index pairs) covering the top-``r`` set."""
    pos = sorted(_top_positions(vote, r, axis))
    blocks: list[Block] = []
    for x in pos:
        if blocks and blocks[-1][1] == x - 1:
            blocks[-1] = (blocks[-1][0], x)
        else:
            blocks.append((x, x))
    return blocks


def _top_positions(vote: Sequence[int], r: int, axis: Sequence[int]) -> list[int]:
    where = {c: i for i, c in enumerate(axis)}
    try:
        return [where[c] for c in vote[:r]]
    except KeyError as exc:
        raise InputError(f"candidate {exc.args[0]} is not on the axis") from None


def restrict_axis(axis: Sequence[int], subset) -> Axis:
    return restrict(axis, subset)


def gen_random_k_peaked(axis: Sequence[int], k: int, seed=None) -> Order:
    """Random vote that is k-peaked with respect to ``axis``.

    The axis is split into ``k`` random non-empty segments; each segment gets
    a random single-peaked order (random peak, random left/right descent) and
    the segment orders are interleaved uniformly at random.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    m = len(axis)
    if not 1 <= k <= max(1, -(-m // 2)):
        raise InputError(f"peak count k={k} out of range for {m} candidates")
    cuts = sorted(rng.sample(range(1, m), k - 1))
    bounds = [0, *cuts, m]
    pieces = []
    for lo, hi in zip(bounds, bounds[1:]):
        seg = list(axis[lo:hi])
        peak = rng.randrange(len(seg))
        left = seg[:peak][::-1]
        right = seg[peak + 1 :]
        order = [seg[peak]]
        # random merge of the two descents
        while left or right:
            if left and (not right or rng.random() < len(left) / (len(left) + len(right))):
                order.append(left.pop(0))
            else:
                order.append(right.pop(0))
        pieces.append(order)
    labels = [i for i, piece in enumerate(pieces) for _ in piece]
    rng.shuffle(labels)
    heads = [0] * len(pieces)
    vote = []
    for i in labels:
        vote.append(pieces[i][heads[i]])
        heads[i] += 1
    return tuple(vote)
