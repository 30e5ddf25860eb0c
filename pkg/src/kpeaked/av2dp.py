"""Polynomial dynamic program for adding votes in 2-peaked elections.

Only votes approving ``p`` are ever worth adding.  In a 2-peaked profile
such a vote approves either one axis block containing ``p`` (there are at
most ``r`` such blocks, so the number chosen of each is guessed outright) or
two blocks: a ``p``-block of size at most ``r-1`` and an other-block.  The
two-block votes are processed in order of the right end of their
other-block.  A table state remembers

* ``j``  how many two-block votes were chosen,
* ``k``  the current maximum score among candidates other than ``p``,
* the scores of the ``2(r-1)`` candidates nearest to ``p`` (s-window),
* the scores of the ``r-1`` candidates ending at the right end of the last
  chosen vote's other-block (t-window).

Any later vote only touches candidates in the s-window or its own t-window,
and a t-window candidate that is not in the previous t-window has never been
touched by an earlier other-block, so its score is still the base score.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .control import AvInstance, Decision, validate
from .election import InputError, VoteMultiset, is_unique_winner
from .oracles import count_vectors
from .peaks import Block, approved_blocks

DEFAULT_MAX_R = 6


@dataclass(frozen=True)
class TwoBlockVote:
    vote: tuple[int, ...]
    p_block: Block
    other_block: Block


def filter_p_approving(votes: VoteMultiset, r: int, p: int) -> VoteMultiset:
    return VoteMultiset(tuple((v, n) for v, n in votes.entries if p in v[:r]))


def split_one_block(votes: VoteMultiset, r: int, axis, p: int):
    """Group one-block votes by block start; list every copy of the others.

    Returns ``(one_block, two_block)`` where ``one_block`` maps the axis
    start of the block to the list of those votes (one item per copy).
    """
    ppos = list(axis).index(p)
    one: dict[int, list] = {}
    two: list[TwoBlockVote] = []
    for vote, n in votes.entries:
        blocks = approved_blocks(vote, r, axis)
        if len(blocks) == 1:
            one.setdefault(blocks[0][0], []).extend([vote] * n)
        elif len(blocks) == 2:
            pb = next(b for b in blocks if b[0] <= ppos <= b[1])
            ob = next(b for b in blocks if b is not pb)
            two.extend(TwoBlockVote(vote, pb, ob) for _ in range(n))
        else:
            raise InputError(f"vote {vote} approves {len(blocks)} axis blocks; expected at most 2")
    return dict(sorted(one.items())), two


@dataclass
class SubInstance:
    base: np.ndarray
    chosen: list
    budget: int


def enumerate_s_guesses(el_scores: np.ndarray, one_block: dict, r: int, budget: int):
    """Every way of adding one-block votes, folded into the base scores."""
    groups = list(one_block.values())
    mats = []
    for votes in groups:
        row = np.zeros(len(el_scores), dtype=np.int64)
        row[list(votes[0][:r])] = 1
        mats.append(row)
    for vec in count_vectors([len(g) for g in groups], budget):
        base = el_scores.copy()
        chosen = []
        for votes, row, x in zip(groups, mats, vec):
            if x:
                base += x * row
                chosen.extend(votes[:x])
        yield SubInstance(base, chosen, budget - sum(vec))


def _windows(axis, ppos: int, r: int, two: list[TwoBlockVote]):
    m = len(axis)
    s_pos = [x for x in range(ppos - (r - 1), ppos + r) if x != ppos]
    s_cands = tuple(axis[x] if 0 <= x < m else None for x in s_pos)
    s_set = {c for c in s_cands if c is not None}
    t_cands = []
    for tv in two:
        end = tv.other_block[1]
        row = []
        for x in range(end - (r - 2), end + 1):
            c = axis[x] if 0 <= x < m else None
            row.append(None if c is None or x == ppos or c in s_set else c)
        t_cands.append(tuple(row))
    return s_cands, t_cands


def dp_fill(sub: SubInstance, two: list[TwoBlockVote], axis, r: int, p: int, stats: dict):
    """Forward search over table states; returns the chosen two-block indices or None."""
    base = sub.base
    p_score = int(base[p])
    budget = sub.budget
    ppos = list(axis).index(p)
    s_cands, t_cands = _windows(axis, ppos, r, two)
    s_index = {c: i for i, c in enumerate(s_cands) if c is not None}
    t_index = [{c: i for i, c in enumerate(row) if c is not None} for row in t_cands]
    others = np.delete(base, p)
    k0 = int(others.max()) if others.size else -1
    if budget == 0 or k0 >= p_score + budget:
        return None

    start_S = tuple(int(base[c]) if c is not None else None for c in s_cands)
    start = (-1, 0, k0, start_S, ())
    back = {start: None}
    layers: dict[int, list] = {-1: [start]}
    n = len(two)
    order = [-1] + list(range(n))
    for i in order:
        for state in layers.get(i, ()):
            _, j, k, S, T = state
            prev_map = {} if i < 0 else {c: v for c, v in zip(t_cands[i], T) if c is not None}
            for nxt in range(i + 1, n):
                newS = list(S)
                newT = [None if c is None else prev_map.get(c, int(base[c])) for c in t_cands[nxt]]
                newk = k
                for c in two[nxt].vote[:r]:
                    if c == p:
                        continue
                    if c in s_index:
                        slot = s_index[c]
                        newS[slot] += 1
                        newk = max(newk, newS[slot])
                    elif c in t_index[nxt]:
                        slot = t_index[nxt][c]
                        newT[slot] += 1
                        newk = max(newk, newT[slot])
                    else:
                        raise AssertionError(f"candidate {c} escapes both windows")
                nj = j + 1
                if newk >= p_score + budget:
                    continue
                key = (nxt, nj, newk, tuple(newS), tuple(newT))
                if key in back:
                    continue
                back[key] = state
                stats["nodes"] += 1
                if newk < p_score + nj:
                    path = []
                    cur = key
                    while cur[0] >= 0:
                        path.append(cur[0])
                        cur = back[cur]
                    return path[::-1]
                if nj < budget:
                    layers.setdefault(nxt, []).append(key)
    return None


def solve_av2(inst: AvInstance, max_r: int = DEFAULT_MAX_R, check: bool = True) -> Decision:
    """Exact decision for adding votes when every vote is 2-peaked on the axis."""
    started = time.perf_counter()
    el = inst.election
    r, p = el.r, el.distinguished
    if inst.k != 2:
        raise InputError(f"the table method handles k=2 only, got k={inst.k}")
    if r > max_r:
        raise InputError(f"r={r} exceeds the configured maximum {max_r}")
    if check:
        problems = validate(inst)
        if problems:
            raise InputError("; ".join(problems))
    useful = filter_p_approving(inst.unregistered, r, p)
    one, two = split_one_block(useful, r, inst.axis, p)
    two.sort(key=lambda tv: tv.other_block[1])
    stats = {"nodes": 0}
    for sub in enumerate_s_guesses(el.scores(), one, r, inst.budget):
        stats["nodes"] += 1
        if is_unique_winner(sub.base, p):
            wit = VoteMultiset.from_items(sub.chosen).normalize()
            return Decision(True, wit, stats["nodes"], time.perf_counter() - started)
        path = dp_fill(sub, two, inst.axis, r, p, stats)
        if path is not None:
            added = sub.chosen + [two[i].vote for i in path]
            wit = VoteMultiset.from_items(added).normalize()
            return Decision(True, wit, stats["nodes"], time.perf_counter() - started)
    return Decision(False, None, stats["nodes"], time.perf_counter() - started)
