"""Seeded random control instances on k-peaked profiles."""

from __future__ import annotations

import random

from .control import AcInstance, AvInstance, DcInstance, DvInstance
from .election import Election, InputError, VoteMultiset
from .peaks import gen_random_k_peaked


def names(m: int) -> tuple[str, ...]:
    return tuple(f"c{i}" for i in range(m))


def random_axis(rng: random.Random, m: int) -> tuple[int, ...]:
    axis = list(range(m))
    rng.shuffle(axis)
    return tuple(axis)


def random_votes(rng: random.Random, axis, k: int, count: int, dup: float = 0.3) -> VoteMultiset:
    """``count`` k-peaked votes; with probability ``dup`` a vote repeats an earlier one.

    Once ``k`` reaches ceil(m/2) every ranking qualifies, so votes are uniform.
    """
    out: list[tuple[int, ...]] = []
    general = k >= -(-len(axis) // 2)
    for _ in range(count):
        if out and rng.random() < dup:
            out.append(rng.choice(out))
        elif general:
            out.append(tuple(rng.sample(axis, len(axis))))
        else:
            out.append(gen_random_k_peaked(axis, rng.randint(1, k), rng))
    return VoteMultiset.from_items(out)


def random_av(rng, m, r, n_reg, n_unreg, budget, k=2, axis=None, p=None, dup=0.3) -> AvInstance:
    """``p="favoured"`` picks the candidate the pool approves most often, which
    makes yes-instances far more common than a uniform pick."""
    axis = axis or random_axis(rng, m)
    if p is None:
        p = rng.randrange(m)
    reg = random_votes(rng, axis, k, n_reg, dup)
    pool = random_votes(rng, axis, k, n_unreg, dup)
    if p == "favoured":
        tally = [0] * m
        for vote, n in pool.entries:
            for c in vote[:r]:
                tally[c] += n
        p = max(range(m), key=lambda c: (tally[c], -c))
    el = Election(names(m), p, r, reg)
    return AvInstance(el, pool, min(budget, len(pool)), axis, k)


def random_dv(rng, m, r, n_reg, budget, k=2, axis=None) -> DvInstance:
    axis = axis or random_axis(rng, m)
    el = Election(names(m), rng.randrange(m), r, random_votes(rng, axis, k, n_reg))
    return DvInstance(el, min(budget, n_reg), axis, k)


def random_ac(rng, m, r, n_reg, n_spoil, budget, k=2) -> AcInstance:
    axis = random_axis(rng, m)
    p = rng.randrange(m)
    spoil = frozenset(rng.sample([c for c in range(m) if c != p], n_spoil))
    el = Election(names(m), p, r, random_votes(rng, axis, k, n_reg))
    return AcInstance(el, spoil, min(budget, n_spoil), axis, k)


def random_dc(rng, m, r, n_reg, budget, k=2) -> DcInstance:
    axis = random_axis(rng, m)
    el = Election(names(m), rng.randrange(m), r, random_votes(rng, axis, k, n_reg))
    return DcInstance(el, min(budget, m - 1), axis, k)


def random_instance(problem: str, m: int, r: int, k: int, votes: int, budget: int,
                    unregistered: int = 0, spoilers: int = 0, seed: int = 0):
    if m < 2 or not 0 < r < m:
        raise InputError(f"need m >= 2 and 0 < r < m, got m={m}, r={r}")
    if k < 1:
        raise InputError(f"peak bound k={k} must be positive")
    rng = random.Random(seed)
    if problem == "av":
        return random_av(rng, m, r, votes, unregistered, budget, k)
    if problem == "dv":
        return random_dv(rng, m, r, votes, budget, k)
    if problem == "ac":
        if not 0 <= spoilers < m:
            raise InputError(f"spoiler count {spoilers} outside 0..{m - 1}")
        return random_ac(rng, m, r, votes, spoilers, budget, k)
    if problem == "dc":
        return random_dc(rng, m, r, votes, budget, k)
    raise InputError(f"unknown problem {problem!r}")


def random_mrsp(rng: random.Random, n_elems: int, n_sets: int, r: int, target: int,
                max_cap: int = 2, dup: float = 0.2):
    """Random capacitated packing instance; a ``dup`` share of sets repeat earlier ones."""
    from .mrsp import MrspInstance

    universe = tuple(range(n_elems))
    cap = {c: rng.randint(1, max_cap) for c in universe}
    sets: list[frozenset] = []
    for _ in range(n_sets):
        if sets and rng.random() < dup:
            sets.append(rng.choice(sets))
        else:
            sets.append(frozenset(rng.sample(universe, r)))
    return MrspInstance(universe, cap, tuple(sets), target, r)
