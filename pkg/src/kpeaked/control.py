"""Instance types for the four constructive control problems and witness checks.

* AV: add at most ``R`` votes from an unregistered pool.
* DV: delete at most ``R`` registered votes.
* AC: add at most ``R`` spoiler candidates (spoilers are absent unless added).
* DC: delete at most ``R`` candidates other than ``p``.

In every case the goal is to make the distinguished candidate the unique
winner.  When candidate deletion leaves ``r`` or fewer candidates, every
voter approves all remaining candidates (top ``min(r, m')``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .election import (
    Election,
    InputError,
    VoteMultiset,
    check_permutation,
    is_submultiset,
    is_unique_winner,
    scores,
)
from .peaks import is_k_peaked

PROBLEMS = ("av", "dv", "ac", "dc")


@dataclass(frozen=True)
class AvInstance:
    election: Election
    unregistered: VoteMultiset
    budget: int
    axis: tuple[int, ...]
    k: int
    problem = "av"


@dataclass(frozen=True)
class DvInstance:
    election: Election
    budget: int
    axis: tuple[int, ...]
    k: int
    problem = "dv"


@dataclass(frozen=True)
class AcInstance:
    election: Election
    spoilers: frozenset
    budget: int
    axis: tuple[int, ...]
    k: int
    problem = "ac"


@dataclass(frozen=True)
class DcInstance:
    election: Election
    budget: int
    axis: tuple[int, ...]
    k: int
    problem = "dc"


Instance = AvInstance | DvInstance | AcInstance | DcInstance


@dataclass
class Decision:
    """Outcome of a decision procedure.

    ``witness`` is a VoteMultiset (AV: added votes, DV: deleted votes) or a
    frozenset of candidate ids (AC: added spoilers, DC: deleted candidates).
    """

    answer: bool
    witness: object = None
    nodes: int = 0
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)


def _vote_violations(label: str, votes: VoteMultiset, m: int, axis, k: int) -> list[str]:
    out = []
    for idx, (vote, _) in enumerate(votes.entries):
        try:
            check_permutation(vote, m)
        except InputError as exc:
            out.append(f"{label} vote #{idx}: {exc}")
            continue
        if is_k_peaked(vote, axis, k) is None:
            out.append(f"{label} vote #{idx} {tuple(vote)} is not {k}-peaked on the axis")
    return out


def validate(inst: Instance) -> list[str]:
    """All violated instance invariants, as readable messages (empty when valid)."""
    el = inst.election
    m = el.m
    out: list[str] = []
    if sorted(inst.axis) != list(range(m)):
        return [f"axis {tuple(inst.axis)} is not a permutation of the {m} candidates"]
    if inst.k < 1:
        out.append(f"peak bound k={inst.k} must be positive")
        return out
    out += _vote_violations("registered", el.registered, m, inst.axis, inst.k)
    if isinstance(inst, AvInstance):
        out += _vote_violations("unregistered", inst.unregistered, m, inst.axis, inst.k)
        limit = len(inst.unregistered)
    elif isinstance(inst, DvInstance):
        limit = len(el.registered)
    elif isinstance(inst, AcInstance):
        if el.distinguished in inst.spoilers:
            out.append("distinguished candidate cannot be a spoiler")
        bad = [c for c in inst.spoilers if not 0 <= c < m]
        if bad:
            out.append(f"unknown spoiler ids {sorted(bad)}")
        limit = len(inst.spoilers)
    else:
        limit = m - 1
    if not 0 <= inst.budget <= limit:
        out.append(f"budget {inst.budget} outside 0..{limit}")
    return out


def scores_without(el: Election, removed: Iterable[int], votes: VoteMultiset | None = None) -> np.ndarray:
    """Scores after deleting ``removed`` candidates; deleted entries are -1."""
    gone = set(removed)
    sc = np.zeros(el.m, dtype=np.int64)
    for vote, n in (votes if votes is not None else el.registered).entries:
        alive = [c for c in vote if c not in gone]
        for c in alive[: el.r]:
            sc[c] += n
    for c in gone:
        sc[c] = -1
    return sc


def p_wins(sc: np.ndarray, p: int) -> bool:
    return is_unique_winner(sc, p)


def outcome_scores(inst: Instance, witness) -> np.ndarray:
    """Final scores after applying a witness (deleted candidates score -1)."""
    el = inst.election
    if isinstance(inst, AvInstance):
        return el.scores(witness)
    if isinstance(inst, DvInstance):
        return el.scores() - scores(el.m, witness, el.r)
    if isinstance(inst, AcInstance):
        return scores_without(el, set(inst.spoilers) - set(witness))
    return scores_without(el, witness)


def witness_size(witness) -> int:
    return len(witness) if witness is not None else 0


def verify_witness(inst: Instance, witness) -> bool:
    """True iff ``witness`` is admissible, within budget and makes p the unique winner."""
    el = inst.election
    if witness is None or witness_size(witness) > inst.budget:
        return False
    if isinstance(inst, AvInstance):
        if not is_submultiset(witness, inst.unregistered):
            return False
    elif isinstance(inst, DvInstance):
        if not is_submultiset(witness, el.registered):
            return False
    elif isinstance(inst, AcInstance):
        if not set(witness) <= set(inst.spoilers):
            return False
    else:
        if el.distinguished in witness or any(not 0 <= c < el.m for c in witness):
            return False
    return p_wins(outcome_scores(inst, witness), el.distinguished)


def remaining_candidates(inst: Instance, witness) -> int:
    el = inst.election
    if isinstance(inst, AcInstance):
        return el.m - len(inst.spoilers) + len(witness)
    if isinstance(inst, DcInstance):
        return el.m - len(witness)
    return el.m


def annotate(inst: Instance, dec: Decision) -> Decision:
    """Flag yes-answers whose surviving candidate count is at most r."""
    if dec.answer and isinstance(inst, (AcInstance, DcInstance)):
        left = remaining_candidates(inst, dec.witness)
        if left <= inst.election.r:
            dec.notes.append(
                f"only {left} candidates remain (r={inst.election.r}); every voter approves all of them"
            )
    return dec

