"""Exhaustive reference deciders for the four control problems.

Vote control enumerates count vectors over distinct vote orders; candidate
control enumerates candidate subsets by size.  Scoring is batched through
numpy so that tens of thousands of candidate selections stay cheap.  The
first success in the fixed enumeration order is returned as the witness.
"""

from __future__ import annotations

import time
from itertools import combinations, islice
from typing import Iterator, Sequence

import numpy as np

from .control import (
    AcInstance,
    AvInstance,
    DcInstance,
    Decision,
    DvInstance,
    annotate,
)
from .election import VoteMultiset

DEFAULT_CAP = 20
BATCH = 4096


class CapacityError(RuntimeError):
    """Instance too large for exhaustive search."""


def count_vectors(avail: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Vectors ``x`` with ``0 <= x_i <= avail_i`` and ``sum(x) <= total``, lexicographically ascending."""
    if not avail:
        yield ()
        return
    head, rest = avail[0], avail[1:]
    for x in range(min(head, total) + 1):
        for tail in count_vectors(rest, total - x):
            yield (x,) + tail


def _approval_matrix(types: list, m: int, r: int) -> np.ndarray:
    mat = np.zeros((len(types), m), dtype=np.int64)
    for i, vote in enumerate(types):
        mat[i, list(vote[:r])] = 1
    return mat


def _batched(it, size=BATCH):
    buf = []
    for x in it:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def _winning_rows(sc: np.ndarray, p: int) -> np.ndarray:
    others = np.delete(sc, p, axis=1)
    if others.shape[1] == 0:
        return np.ones(sc.shape[0], dtype=bool)
    return sc[:, p] > others.max(axis=1)


def _vote_search(inst, pool: VoteMultiset, sign: int) -> Decision:
    start = time.perf_counter()
    el = inst.election
    counts = pool.counts()
    types = list(counts)
    avail = [counts[t] for t in types]
    mat = _approval_matrix(types, el.m, el.r)
    base = el.scores()
    nodes = 0
    for chunk in _batched(count_vectors(avail, inst.budget)):
        arr = np.asarray(chunk, dtype=np.int64).reshape(len(chunk), len(types))
        sc = base + sign * (arr @ mat)
        ok = np.flatnonzero(_winning_rows(sc, el.distinguished))
        if ok.size:
            nodes += int(ok[0]) + 1
            vec = chunk[ok[0]]
            wit = VoteMultiset.from_counts({t: n for t, n in zip(types, vec)})
            return Decision(True, wit, nodes, time.perf_counter() - start)
        nodes += len(chunk)
    return Decision(False, None, nodes, time.perf_counter() - start)


def brute_av(inst: AvInstance) -> Decision:
    return _vote_search(inst, inst.unregistered, +1)


def brute_dv(inst: DvInstance) -> Decision:
    return _vote_search(inst, inst.election.registered, -1)


def _subset_batches(pool: Sequence[int], budget: int, size: int = BATCH):
    """Subsets of ``pool`` by size, then lexicographically, as index arrays."""
    for k in range(budget + 1):
        it = combinations(pool, k)
        while True:
            chunk = list(islice(it, size))
            if not chunk:
                break
            yield np.asarray(chunk, dtype=np.int64).reshape(len(chunk), k)


def _candidate_search(inst, pool: Sequence[int], base_removed: frozenset, adding: bool, cap: int) -> Decision:
    start = time.perf_counter()
    el = inst.election
    if len(pool) > cap:
        raise CapacityError(f"{len(pool)} selectable candidates exceed the exhaustive cap {cap}")
    pool = sorted(pool)
    m, r, p = el.m, el.r, el.distinguished
    # at most len(base_removed) + budget candidates vanish, so a ballot's
    # approvals always come from its first r + that many entries
    depth = r + (len(base_removed) if adding else inst.budget)
    prefixes: dict[tuple, int] = {}
    for vote, mult in el.registered.entries:
        key = tuple(vote[:depth])
        prefixes[key] = prefixes.get(key, 0) + mult
    nodes = 0
    for subs in _subset_batches(pool, inst.budget):
        rows = subs.shape[0]
        gone = np.zeros((rows, m), dtype=bool)
        gone[:, list(base_removed)] = True
        if subs.shape[1]:
            gone[np.arange(rows)[:, None], subs] = not adding
        alive = ~gone
        sc = np.zeros((rows, m), dtype=np.int64)
        for pref, mult in prefixes.items():
            cols = list(pref)
            a = alive[:, cols]
            approved = a & (np.cumsum(a, axis=1, dtype=np.int16) <= r)
            sc[:, cols] += mult * approved
        sc[gone] = -1
        ok = np.flatnonzero(_winning_rows(sc, p))
        if ok.size:
            nodes += int(ok[0]) + 1
            wit = frozenset(int(c) for c in subs[ok[0]])
            return annotate(inst, Decision(True, wit, nodes, time.perf_counter() - start))
        nodes += rows
    return Decision(False, None, nodes, time.perf_counter() - start)


def brute_ac(inst: AcInstance, cap: int = DEFAULT_CAP) -> Decision:
    return _candidate_search(inst, list(inst.spoilers), frozenset(inst.spoilers), True, cap)


def brute_dc(inst: DcInstance, cap: int = DEFAULT_CAP) -> Decision:
    el = inst.election
    pool = [c for c in range(el.m) if c != el.distinguished]
    return _candidate_search(inst, pool, frozenset(), False, cap)


def brute(inst, **kw) -> Decision:
    fn = {"av": brute_av, "dv": brute_dv, "ac": brute_ac, "dc": brute_dc}[inst.problem]
    return fn(inst, **kw)
