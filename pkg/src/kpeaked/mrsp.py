"""Multi-r-Set Packing with per-element capacities.

Choose exactly ``R`` members of a multiset ``V`` of ``r``-sets so that each
element ``c`` lies in at most ``f(c)`` chosen members.  The exact solver is a
greedy-localisation branching search over *partial sets*: sets whose known
elements form ``reg`` and whose remaining slots are still open.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .election import InputError

DEFAULT_CAP = 20


@dataclass(frozen=True)
class MrspInstance:
    universe: tuple
    capacity: dict
    sets: tuple  # of frozensets; equal sets are distinct copies
    target: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        uni = set(self.universe)
        if self.target < 0:
            raise InputError(f"target must be non-negative, got {self.target}")
        for c in self.universe:
            if self.capacity.get(c, 0) < 1:
                raise InputError(f"capacity of {c!r} must be positive")
        for s in self.sets:
            if len(s) != self.r:
                raise InputError(f"set {sorted(s)} has {len(s)} elements, expected {self.r}")
            if not s <= uni:
                raise InputError(f"set {sorted(s)} leaves the universe")


@dataclass
class MrspResult:
    answer: bool
    witness: list | None = None  # indices into ``sets``
    nodes: int = 0
    max_branch: int = 0
    max_depth: int = 0
    elapsed: float = 0.0
    notes: list = field(default_factory=list)


def _key(s: frozenset):
    return tuple(sorted(s))


def canonical_order(inst: MrspInstance) -> list[int]:
    return sorted(range(len(inst.sets)), key=lambda i: (_key(inst.sets[i]), i))


def is_valid_packing(inst: MrspInstance, members: Iterable[Iterable]) -> bool:
    """Every element occurs in at most ``f(c)`` members (partial sets count fixed elements)."""
    cnt = Counter(c for s in members for c in s)
    return all(n <= inst.capacity.get(c, 0) for c, n in cnt.items())


def greedy_maximal_packing(inst: MrspInstance) -> list[int]:
    cnt: Counter = Counter()
    taken = []
    for i in canonical_order(inst):
        s = inst.sets[i]
        if all(cnt[c] < inst.capacity[c] for c in s):
            cnt.update(s)
            taken.append(i)
    return taken


def brute_mrsp(inst: MrspInstance, cap: int = DEFAULT_CAP) -> MrspResult:
    start = time.perf_counter()
    if len(inst.sets) > cap:
        raise RuntimeError(f"{len(inst.sets)} sets exceed the exhaustive cap {cap}")
    nodes = 0
    for combo in combinations(range(len(inst.sets)), inst.target):
        nodes += 1
        if is_valid_packing(inst, (inst.sets[i] for i in combo)):
            return MrspResult(True, list(combo), nodes, elapsed=time.perf_counter() - start)
    return MrspResult(False, None, nodes, elapsed=time.perf_counter() - start)


def _seeds(elements: Sequence, capacity: dict, R: int):
    """Capacity-respecting multisets of size ``R`` over ``elements``."""

    def rec(pos, left):
        if left == 0:
            yield ()
            return
        if pos == len(elements):
            return
        c = elements[pos]
        for x in range(min(capacity[c], left), -1, -1):
            for rest in rec(pos + 1, left - x):
                yield (c,) * x + rest

    yield from rec(0, R)


class _Search:
    def __init__(self, inst: MrspInstance, literal: bool):
        self.inst = inst
        self.literal = literal
        self.order = canonical_order(inst)
        self.nodes = 0
        self.max_branch = 0
        self.max_depth = 0
        self.seen: set = set()

    def consistent_somewhere(self, reg: frozenset) -> bool:
        return any(reg <= s for s in self.inst.sets)

    def greedy(self, regs: list[frozenset]):
        """Replace partial sets by consistent members of V, keeping validity."""
        inst = self.inst
        cnt = Counter(c for reg in regs for c in reg)
        assigned: list[int | None] = [None] * len(regs)
        for idx in self.order:
            s = inst.sets[idx]
            best = None
            for i, reg in enumerate(regs):
                if assigned[i] is not None or not reg <= s:
                    continue
                if all(cnt[c] < inst.capacity[c] for c in s - reg):
                    if best is None or len(reg) > len(regs[best]):
                        best = i
            if best is not None:
                cnt.update(s - regs[best])
                assigned[best] = idx
        return assigned, cnt

    def expand(self, regs: list[frozenset], depth: int):
        inst = self.inst
        regs = sorted(regs, key=lambda g: (-len(g), _key(g)))
        state = tuple(_key(g) for g in regs)
        if state in self.seen:
            return None
        self.seen.add(state)
        self.nodes += 1
        self.max_depth = max(self.max_depth, depth)
        assigned, cnt = self.greedy(regs)
        if all(a is not None for a in assigned):
            return list(assigned)
        if all(a is None for a in assigned):
            return None
        open_ = [i for i, a in enumerate(assigned) if a is None]
        used = {a for a in assigned if a is not None}
        if len(open_) == 1:
            lone = open_[0]
            rest = [inst.sets[a] for a in assigned if a is not None]
            for idx in self.order:
                if idx not in used and is_valid_packing(inst, rest + [inst.sets[idx]]):
                    return sorted(used) + [idx]
            if self.literal:
                return None
        # branch on the open partial with the fewest stars that still has one
        starred = [i for i in open_ if len(regs[i]) < inst.r]
        if not starred:
            return None
        pick = starred[0]
        support = sorted({c for c, n in cnt.items() if n > 0})
        self.max_branch = max(self.max_branch, len(support))
        reg = regs[pick]
        base = Counter(c for g in regs for c in g)
        for c in support:
            if c in reg or base[c] >= inst.capacity[c]:
                continue
            grown = reg | {c}
            if not self.consistent_somewhere(grown):
                continue
            nxt = regs[:pick] + [grown] + regs[pick + 1 :]
            found = self.expand(nxt, depth + 1)
            if found is not None:
                return found
        return None


def solve_mrsp(inst: MrspInstance, literal: bool = False) -> MrspResult:
    """Exact decision with a witness of exactly ``target`` set indices.

    ``literal`` stops a branch when the last open partial set cannot be
    closed directly, instead of branching on it; that variant can miss
    solutions and is kept only for comparison.
    """
    start = time.perf_counter()
    R = inst.target

    def done(ans, wit=None, search=None):
        res = MrspResult(ans, wit, elapsed=time.perf_counter() - start)
        if search is not None:
            res.nodes, res.max_branch, res.max_depth = search.nodes, search.max_branch, search.max_depth
        return res

    if R == 0:
        return done(True, [])
    if len(inst.sets) < R:
        return done(False)
    t0 = greedy_maximal_packing(inst)
    if len(t0) >= R:
        return done(True, sorted(t0[:R]))
    support = sorted({c for i in t0 for c in inst.sets[i]})
    search = _Search(inst, literal)
    for seed in _seeds(support, inst.capacity, R):
        found = search.expand([frozenset([c]) for c in seed], 0)
        if found is not None:
            return done(True, sorted(found), search)
    return done(False, None, search)
