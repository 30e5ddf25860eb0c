"""Parameterized algorithms for vote control without any peak assumption.

Deleting votes: only votes not approving ``p`` are worth deleting, and only
candidates currently scoring at least as much as ``p`` matter.  Votes are
typed by which of those candidates they approve, and a bounded count vector
over the types is searched.

Adding votes: after a few reductions the question becomes whether exactly
``R`` of the useful votes can be added without pushing any rival past a
per-candidate allowance, which is a capacitated set packing question.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .control import AvInstance, Decision, DvInstance
from .election import VoteMultiset, is_unique_winner, scores
from .mrsp import MrspInstance, solve_mrsp


@dataclass
class DvTypeSpace:
    rivals: tuple[int, ...]
    types: list[frozenset]
    votes: list[list]  # actual ballots of each type, one item per copy
    need: dict


def dv_type_space(inst: DvInstance) -> DvTypeSpace:
    el = inst.election
    r, p = el.r, el.distinguished
    sc = el.scores()
    rivals = tuple(c for c in range(el.m) if c != p and sc[c] >= sc[p])
    rset = set(rivals)
    groups: dict[frozenset, list] = {}
    for vote, n in el.registered.entries:
        if p in vote[:r]:
            continue
        key = frozenset(vote[:r]) & rset
        if key:
            groups.setdefault(key, []).extend([vote] * n)
    types = sorted(groups, key=lambda s: (len(s), sorted(s)))
    need = {c: int(sc[c] - sc[p] + 1) for c in rivals}
    return DvTypeSpace(rivals, types, [groups[t] for t in types], need)


def solve_dv_fpt(inst: DvInstance) -> Decision:
    start = time.perf_counter()
    el = inst.election
    R = inst.budget
    space = dv_type_space(inst)
    if not space.rivals:
        return Decision(True, VoteMultiset(), 0, time.perf_counter() - start)
    if len(space.rivals) > el.r * R:
        return Decision(False, None, 0, time.perf_counter() - start, ["too many rivals for the budget"])

    types, votes = space.types, space.votes
    nodes = 0

    def rec(t: int, left: int, need: dict, picked: list):
        nonlocal nodes
        nodes += 1
        if all(v <= 0 for v in need.values()):
            return picked
        if t == len(types) or max(need.values()) > left:
            return None
        avail = len(votes[t])
        for x in range(min(avail, left), -1, -1):
            nxt = {c: v - x if c in types[t] else v for c, v in need.items()}
            found = rec(t + 1, left - x, nxt, picked + [(t, x)])
            if found is not None:
                return found
        return None

    found = rec(0, R, dict(space.need), [])
    elapsed = time.perf_counter() - start
    if found is None:
        return Decision(False, None, nodes, elapsed)
    chosen = [v for t, x in found for v in votes[t][:x]]
    return Decision(True, VoteMultiset.from_items(chosen).normalize(), nodes, elapsed)


@dataclass
class AvResidual:
    """Useful unregistered votes after pruning, to be packed exactly ``budget`` times."""

    inst: AvInstance
    votes: list  # one item per copy
    saturated: frozenset
    budget: int


def preprocess_av(inst: AvInstance):
    """Either a final Decision or an :class:`AvResidual`."""
    el = inst.election
    r, p, R = el.r, el.distinguished, inst.budget
    sc = el.scores()
    helpful = [v for v, n in inst.unregistered.entries if p in v[:r] for _ in range(n)]
    if R >= len(helpful):
        # adding a p-approving vote never hurts p's margin, so take them all
        wit = VoteMultiset.from_items(helpful).normalize()
        ok = is_unique_winner(sc + scores(el.m, wit, r), p)
        return Decision(ok, wit if ok else None)
    target = sc[p] + R
    if any(sc[c] >= target for c in range(el.m) if c != p):
        return Decision(False, None, notes=["a rival already reaches p's best possible score"])
    saturated = frozenset(c for c in range(el.m) if c != p and sc[c] >= target - 1)
    kept = [v for v in helpful if not saturated.intersection(v[:r])]
    return AvResidual(inst, kept, saturated, R)


def reduce_av_to_mrsp(res: AvResidual):
    """Packing instance plus the map from set index back to the ballot."""
    el = res.inst.election
    r, p = el.r, el.distinguished
    sc = el.scores()
    allowance = {
        c: int(sc[p] + res.budget - sc[c] - 1)
        for c in range(el.m)
        if c != p and c not in res.saturated
    }
    sets = []
    for v in res.votes:
        s = frozenset(v[:r]) - {p}
        if s & res.saturated:
            raise AssertionError(f"retained vote {v} approves a saturated candidate")
        sets.append(s)
    inst = MrspInstance(tuple(sorted(allowance)), allowance, tuple(sets), res.budget, r - 1)
    return inst, list(res.votes)


def solve_av_fpt(inst: AvInstance) -> Decision:
    start = time.perf_counter()
    pre = preprocess_av(inst)
    if isinstance(pre, Decision):
        pre.elapsed = time.perf_counter() - start
        return pre
    packing, back = reduce_av_to_mrsp(pre)
    out = solve_mrsp(packing)
    elapsed = time.perf_counter() - start
    if not out.answer:
        return Decision(False, None, out.nodes, elapsed)
    wit = VoteMultiset.from_items(back[i] for i in out.witness).normalize()
    return Decision(True, wit, out.nodes, elapsed)
