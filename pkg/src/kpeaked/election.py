"""Data model for r-approval elections with sincere ranked ballots.

Candidates are dense integer ids ``0..m-1``; display names only matter at the
file boundary.  A vote is a tuple holding a full ranking of candidate ids,
best first.  Each voter gives one point to the top ``r`` candidates of their
ranking.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np

Order = tuple[int, ...]


class InputError(ValueError):
    """Malformed election data (bad ids, inconsistent ballots, bad width)."""


@dataclass(frozen=True, eq=False)
class VoteMultiset:
    """A multiset stored as ``(object, multiplicity)`` entries.

    Entries are kept in insertion order and are not merged, so the same
    object may appear in several entries.  Equality compares the underlying
    multisets, not the entry layout.
    """

    entries: tuple[tuple[Hashable, int], ...] = ()

    def __post_init__(self):
        entries = tuple((obj, int(n)) for obj, n in self.entries)
        for obj, n in entries:
            if n < 1:
                raise InputError(f"multiplicity must be positive, got {n} for {obj!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_items(cls, items: Iterable[Hashable]) -> "VoteMultiset":
        """One entry per element, in order."""
        return cls(tuple((obj, 1) for obj in items))

    @classmethod
    def from_counts(cls, counts: dict) -> "VoteMultiset":
        return cls(tuple((obj, n) for obj, n in counts.items() if n > 0))

    def __len__(self) -> int:
        return sum(n for _, n in self.entries)

    def __iter__(self) -> Iterator[Hashable]:
        for obj, n in self.entries:
            for _ in range(n):
                yield obj

    def __bool__(self) -> bool:
        return bool(self.entries)

    def counts(self) -> Counter:
        c: Counter = Counter()
        for obj, n in self.entries:
            c[obj] += n
        return c

    def __eq__(self, other) -> bool:
        if not isinstance(other, VoteMultiset):
            return NotImplemented
        return self.counts() == other.counts()

    def __hash__(self) -> int:
        return hash(frozenset(self.counts().items()))

    def normalize(self) -> "VoteMultiset":
        """Merge entries holding equal objects (first appearance order)."""
        return VoteMultiset.from_counts(self.counts())

    def types(self) -> list[Hashable]:
        """Distinct objects in first-appearance order."""
        return list(self.counts())

    def __repr__(self) -> str:
        return f"VoteMultiset({list(self.entries)!r})"


def multiset_union(a: VoteMultiset, b: VoteMultiset) -> VoteMultiset:
    return VoteMultiset(a.entries + b.entries)


def multiset_minus(a: VoteMultiset, b: VoteMultiset) -> VoteMultiset:
    """Keep ``max(0, n1 - n2)`` copies of every object of ``a``."""
    remove = b.counts()
    out = a.counts()
    for obj in out:
        out[obj] = max(0, out[obj] - remove.get(obj, 0))
    return VoteMultiset.from_counts(out)


def is_submultiset(b: VoteMultiset, a: VoteMultiset) -> bool:
    have = a.counts()
    return all(have.get(obj, 0) >= n for obj, n in b.counts().items())


def position(vote: Sequence[int], c: int) -> int:
    """1-based rank of ``c`` in ``vote``."""
    try:
        return vote.index(c) + 1
    except ValueError:
        raise InputError(f"candidate {c} does not appear in vote {vote}") from None


def approved_set(vote: Sequence[int], r: int) -> frozenset[int]:
    if not 0 < r < len(vote):
        raise InputError(f"approval width r={r} out of range for {len(vote)} candidates")
    return frozenset(vote[:r])


def restrict(vote: Sequence[int], subset: Iterable[int]) -> Order:
    """The partial vote over ``subset``, keeping the relative order."""
    keep = set(subset)
    missing = keep.difference(vote)
    if missing:
        raise InputError(f"unknown candidate ids {sorted(missing)}")
    return tuple(c for c in vote if c in keep)


def check_permutation(vote: Sequence[int], m: int) -> None:
    if len(vote) != m or set(vote) != set(range(m)):
        raise InputError(f"vote {tuple(vote)} is not a ranking of candidates 0..{m - 1}")


def scores(m: int, votes: VoteMultiset, r: int) -> np.ndarray:
    """Approval scores of candidates ``0..m-1``.

    Votes may be partial (restricted) orders; each approves its first
    ``min(r, len(vote))`` entries.
    """
    if r < 1:
        raise InputError(f"approval width must be positive, got {r}")
    out = np.zeros(m, dtype=np.int64)
    for vote, n in votes.entries:
        for c in vote[:r]:
            if not 0 <= c < m:
                raise InputError(f"unknown candidate id {c} in vote {vote}")
            out[c] += n
    return out


def winners_from_scores(sc: np.ndarray) -> list[int]:
    if len(sc) == 0:
        return []
    top = sc.max()
    return [int(c) for c in np.flatnonzero(sc == top)]


def unique_winner(m: int, votes: VoteMultiset, r: int) -> int | None:
    best = winners_from_scores(scores(m, votes, r))
    return best[0] if len(best) == 1 else None


def is_unique_winner(sc: np.ndarray, p: int) -> bool:
    others = np.delete(sc, p)
    return others.size == 0 or bool(sc[p] > others.max())


@dataclass(frozen=True)
class Election:
    """An r-approval election: candidates, distinguished ``p`` and registered votes."""

    candidates: tuple[str, ...]
    distinguished: int
    r: int
    registered: VoteMultiset = field(default_factory=VoteMultiset)

    def __post_init__(self):
        m = len(self.candidates)
        if len(set(self.candidates)) != m:
            raise InputError("candidate names must be unique")
        if not 0 <= self.distinguished < m:
            raise InputError(f"distinguished id {self.distinguished} out of range")
        if not 0 < self.r < m:
            raise InputError(f"approval width r={self.r} must satisfy 0 < r < {m}")
        for vote, _ in self.registered.entries:
            check_permutation(vote, m)

    @property
    def m(self) -> int:
        return len(self.candidates)

    def scores(self, extra: VoteMultiset | None = None) -> np.ndarray:
        sc = scores(self.m, self.registered, self.r)
        if extra is not None:
            sc = sc + scores(self.m, extra, self.r)
        return sc

    def name(self, c: int) -> str:
        return self.candidates[c]

    def id_of(self, name: str) -> int:
        try:
            return self.candidates.index(name)
        except ValueError:
            raise InputError(f"unknown candidate {name!r}") from None
