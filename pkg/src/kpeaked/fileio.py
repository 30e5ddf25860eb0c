"""Plain-text formats for elections, graphs, packing instances and interval groups.

Election file::

    candidates: a b c d
    axis: a b c d
    r: 2
    distinguished: a
    k: 2
    problem: av
    budget: 1
    spoilers: d
    [registered]
    2: a > b > c > d
    [unregistered]
    1: b > a > c > d

Header keys appear in this order and all but ``candidates``, ``r`` and
``distinguished`` are optional.  ``#`` starts a comment.  Both sections are
always written, possibly empty.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .control import AcInstance, AvInstance, DcInstance, DvInstance, PROBLEMS
from .election import Election, InputError, VoteMultiset
from .graphs import Graph
from .mrsp import MrspInstance
from .reductions import VisInstance

HEADER_KEYS = ("candidates", "axis", "r", "distinguished", "k", "problem", "budget", "spoilers")
REQUIRED = ("candidates", "r", "distinguished")
NAME = re.compile(r"[^\s>:#\[\]]+")


class ParseError(InputError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class ElectionFile:
    candidates: tuple[str, ...]
    r: int
    distinguished: str
    axis: tuple[str, ...] | None = None
    k: int | None = None
    problem: str | None = None
    budget: int | None = None
    spoilers: tuple[str, ...] | None = None
    registered: list[tuple[int, tuple[str, ...]]] = field(default_factory=list)
    unregistered: list[tuple[int, tuple[str, ...]]] = field(default_factory=list)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield no, raw, body


def _names(value: str, no: int, raw: str) -> tuple[str, ...]:
    out = []
    for mt in re.finditer(r"\S+", value):
        if not NAME.fullmatch(mt.group()):
            raise ParseError(f"bad name {mt.group()!r}", no, raw.find(mt.group()) + 1)
        out.append(mt.group())
    return tuple(out)


def _int(value: str, no: int, raw: str, what: str) -> int:
    try:
        return int(value.strip())
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {value.strip()!r}", no, raw.find(value.strip()) + 1) from None


def parse_election(text: str) -> ElectionFile:
    header: dict[str, object] = {}
    section = None
    votes: dict[str, list] = {"registered": [], "unregistered": []}
    for no, raw, body in _lines(text):
        s = body.strip()
        col = len(body) - len(body.lstrip()) + 1
        if s.startswith("["):
            name = s[1:-1].strip() if s.endswith("]") else None
            if name not in votes:
                raise ParseError(f"unknown section {s!r}", no, col)
            section = name
            continue
        if section is None:
            if ":" not in s:
                raise ParseError("expected 'key: value'", no, col)
            key, value = s.split(":", 1)
            key = key.strip()
            if key not in HEADER_KEYS:
                raise ParseError(f"unknown header key {key!r}", no, col)
            if key in header:
                raise ParseError(f"duplicate header key {key!r}", no, col)
            if key in ("candidates", "axis", "spoilers"):
                header[key] = _names(value, no, raw)
            elif key in ("r", "k", "budget"):
                header[key] = _int(value, no, raw, key)
            elif key == "problem":
                v = value.strip()
                if v not in PROBLEMS:
                    raise ParseError(f"problem must be one of {', '.join(PROBLEMS)}", no, raw.find(v) + 1)
                header[key] = v
            else:
                header[key] = value.strip()
            continue
        if ":" not in s:
            raise ParseError("expected 'multiplicity: a > b > ...'", no, col)
        mult, order = s.split(":", 1)
        n = _int(mult, no, raw, "multiplicity")
        if n < 1:
            raise ParseError("multiplicity must be positive", no, col)
        parts = [x.strip() for x in order.split(">")]
        for x in parts:
            if not NAME.fullmatch(x):
                raise ParseError(f"bad candidate name {x!r} in ranking", no, raw.find(order) + 1)
        votes[section].append((n, tuple(parts)))
    for key in REQUIRED:
        if key not in header:
            raise ParseError(f"missing header key {key!r}", 1)
    return ElectionFile(
        candidates=header["candidates"],
        r=header["r"],
        distinguished=header["distinguished"],
        axis=header.get("axis"),
        k=header.get("k"),
        problem=header.get("problem"),
        budget=header.get("budget"),
        spoilers=header.get("spoilers"),
        registered=votes["registered"],
        unregistered=votes["unregistered"],
    )


def write_election_file(ef: ElectionFile) -> str:
    out = [f"candidates: {' '.join(ef.candidates)}"]
    if ef.axis is not None:
        out.append(f"axis: {' '.join(ef.axis)}")
    out.append(f"r: {ef.r}")
    out.append(f"distinguished: {ef.distinguished}")
    for key in ("k", "problem", "budget"):
        val = getattr(ef, key)
        if val is not None:
            out.append(f"{key}: {val}")
    if ef.spoilers is not None:
        out.append(f"spoilers: {' '.join(ef.spoilers)}".rstrip())
    for name in ("registered", "unregistered"):
        out.append(f"[{name}]")
        out.extend(f"{n}: {' > '.join(v)}" for n, v in getattr(ef, name))
    return "\n".join(out) + "\n"


def _ids(el_names, order, what):
    where = {c: i for i, c in enumerate(el_names)}
    try:
        return tuple(where[c] for c in order)
    except KeyError as exc:
        raise InputError(f"unknown candidate {exc.args[0]!r} in {what}") from None


def to_instance(ef: ElectionFile, problem: str | None = None, budget: int | None = None, k: int | None = None):
    """Build the control instance; flags override header values."""
    problem = problem or ef.problem
    if problem is None:
        raise InputError("no problem given (header 'problem:' or --problem)")
    budget = ef.budget if budget is None else budget
    if budget is None:
        raise InputError("no budget given (header 'budget:' or --budget)")
    names = ef.candidates
    m = len(names)
    k = ef.k if k is None else k
    if k is None:
        k = max(1, -(-m // 2))
    axis = _ids(names, ef.axis, "axis") if ef.axis is not None else tuple(range(m))
    reg = VoteMultiset(tuple((_ids(names, v, "registered vote"), n) for n, v in ef.registered))
    el = Election(tuple(names), _ids(names, [ef.distinguished], "distinguished")[0], ef.r, reg)
    if problem == "av":
        pool = VoteMultiset(tuple((_ids(names, v, "unregistered vote"), n) for n, v in ef.unregistered))
        return AvInstance(el, pool, budget, axis, k)
    if problem == "dv":
        return DvInstance(el, budget, axis, k)
    if problem == "ac":
        spoil = frozenset(_ids(names, ef.spoilers or (), "spoilers"))
        return AcInstance(el, spoil, budget, axis, k)
    return DcInstance(el, budget, axis, k)


def from_instance(inst) -> ElectionFile:
    el = inst.election
    names = el.candidates

    def rows(ms):
        return [(n, tuple(names[c] for c in v)) for v, n in ms.entries]

    return ElectionFile(
        candidates=names,
        r=el.r,
        distinguished=names[el.distinguished],
        axis=tuple(names[c] for c in inst.axis),
        k=inst.k,
        problem=inst.problem,
        budget=inst.budget,
        spoilers=tuple(names[c] for c in sorted(inst.spoilers)) if isinstance(inst, AcInstance) else None,
        registered=rows(el.registered),
        unregistered=rows(inst.unregistered) if isinstance(inst, AvInstance) else [],
    )


def write_election(inst) -> str:
    return write_election_file(from_instance(inst))


def load_election(text: str, **overrides):
    return to_instance(parse_election(text), **overrides)


# ---------------------------------------------------------------- graphs


def _expect(tokens, n, no, what):
    if len(tokens) != n:
        raise ParseError(f"expected {what}", no)


def parse_graph(text: str) -> Graph:
    n = m = None
    edges = []
    for no, raw, body in _lines(text):
        tok = body.split()
        if n is None:
            _expect(tok, 3, no, "'graph n m'")
            if tok[0] != "graph":
                raise ParseError("expected 'graph n m'", no)
            n, m = _int(tok[1], no, raw, "n"), _int(tok[2], no, raw, "m")
            continue
        _expect(tok, 3, no, "'e u v'")
        if tok[0] != "e":
            raise ParseError(f"unknown line type {tok[0]!r}", no)
        edges.append((_int(tok[1], no, raw, "u"), _int(tok[2], no, raw, "v")))
    if n is None:
        raise ParseError("missing 'graph n m' header", 1)
    if len(edges) != m:
        raise InputError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def write_graph(g: Graph) -> str:
    return "".join([f"graph {g.n} {g.m}\n"] + [f"e {u} {v}\n" for u, v in g.edges])


# ---------------------------------------------------------------- set packing


def parse_mrsp(text: str) -> MrspInstance:
    r = R = None
    cap: dict[str, int] = {}
    sets = []
    for no, raw, body in _lines(text):
        tok = body.split()
        if r is None:
            _expect(tok, 3, no, "'mrsp r R'")
            if tok[0] != "mrsp":
                raise ParseError("expected 'mrsp r R'", no)
            r, R = _int(tok[1], no, raw, "r"), _int(tok[2], no, raw, "R")
        elif tok[0] == "cap":
            _expect(tok, 3, no, "'cap element f'")
            cap[tok[1]] = _int(tok[2], no, raw, "capacity")
        elif tok[0] == "set":
            sets.append(frozenset(tok[1:]))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", no)
    if r is None:
        raise ParseError("missing 'mrsp r R' header", 1)
    return MrspInstance(tuple(cap), cap, tuple(sets), R, r)


def write_mrsp(inst: MrspInstance) -> str:
    out = [f"mrsp {inst.r} {inst.target}"]
    out += [f"cap {c} {inst.capacity[c]}" for c in inst.universe]
    out += ["set " + " ".join(sorted(map(str, s))) for s in inst.sets]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- interval groups


def parse_vis(text: str) -> VisInstance:
    """``vis n`` then one ``group a1 a2 ...`` line per group (interval left ends)."""
    n = None
    groups = []
    for no, raw, body in _lines(text):
        tok = body.split()
        if n is None:
            _expect(tok, 2, no, "'vis n'")
            if tok[0] != "vis":
                raise ParseError("expected 'vis n'", no)
            n = _int(tok[1], no, raw, "n")
            continue
        if tok[0] != "group":
            raise ParseError(f"unknown line type {tok[0]!r}", no)
        groups.append(tuple(_int(x, no, raw, "interval start") for x in tok[1:]))
    if n is None:
        raise ParseError("missing 'vis n' header", 1)
    if len(groups) != n:
        raise InputError(f"header announces {n} groups, found {len(groups)}")
    return VisInstance(tuple(groups))


def write_vis(vis: VisInstance) -> str:
    return "".join([f"vis {vis.n}\n"] + ["group " + " ".join(map(str, g)) + "\n" for g in vis.groups])
