"""Generators for hardness reductions and the matching source-side brute force.

Every generator lays candidates out so that a candidate's id equals its
position on the axis, which turns axis slices into integer ranges.  Each
generator asserts the registered-score profile its correctness argument
relies on and returns a :class:`Reduction` carrying the control instance
and a provenance string for every vote entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .control import AvInstance, DcInstance, DvInstance, validate
from .election import Election, InputError, VoteMultiset
from .graphs import Graph
from .intervals import build_2interval_rep, endpoint_universe, pad_to_point_segment_form

BRUTE_LIMIT = 24


@dataclass
class Reduction:
    instance: object
    registered_from: list[str]
    unregistered_from: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def up(a: int, b: int) -> list[int]:
    """Axis positions a, a+1, ..., b (empty when a > b)."""
    return list(range(a, b + 1))


def down(a: int, b: int) -> list[int]:
    """Axis positions a, a-1, ..., b (empty when a < b)."""
    return list(range(a, b - 1, -1))


def _vote(m: int, *parts) -> tuple[int, ...]:
    v = tuple(x for part in parts for x in part)
    if sorted(v) != list(range(m)):
        raise AssertionError(f"constructed ballot is not a ranking of {m} candidates: {v}")
    return v


def _check(inst) -> None:
    problems = validate(inst)
    if problems:
        raise AssertionError("generated instance is invalid: " + "; ".join(problems[:3]))


# ---------------------------------------------------------------- intervals


@dataclass(frozen=True)
class VisInstance:
    """Groups of length-4 integer intervals, each given by its left end."""

    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = []
        for g in self.groups:
            g = tuple(sorted(set(int(a) for a in g)))
            if len(g) > 3:
                raise InputError(f"group {g} holds more than 3 intervals")
            if any(a < 1 for a in g):
                raise InputError(f"interval starts must be positive, got {g}")
            norm.append(g)
        object.__setattr__(self, "groups", tuple(norm))

    @property
    def n(self) -> int:
        return len(self.groups)


def _span(a: int) -> range:
    return range(a, a + 4)


def brute_vis(vis: VisInstance, limit: int = 10**6):
    """One interval per group, pairwise disjoint; returns the chosen starts or None."""
    size = 1
    for g in vis.groups:
        size *= len(g)
    if size > limit:
        raise RuntimeError(f"{size} selections exceed the exhaustive limit")
    for pick in product(*vis.groups):
        used: set[int] = set()
        ok = True
        for a in pick:
            cells = set(_span(a))
            if used & cells:
                ok = False
                break
            used |= cells
        if ok:
            return list(pick)
    return None


def reduce_vis_to_av2(vis: VisInstance) -> Reduction:
    n = vis.n
    if n < 2:
        raise InputError("the construction needs at least two groups (scores n-2 must be non-negative)")
    gamma = sorted({x for g in vis.groups for a in g for x in _span(a)})
    where = {x: i for i, x in enumerate(gamma)}
    nc, nd, w = len(gamma), 2 * n - 1, n + 3
    d0 = nc                      # d_1 sits at d0
    e0 = nc + nd                 # first x' dummy
    dd0 = e0 + nc * w            # first d' dummy
    m = dd0 + w * (nd - 1)
    names = (
        [f"x{x}" for x in gamma]
        + [f"d{i}" for i in range(1, nd + 1)]
        + [f"xd{i}" for i in range(1, nc * w + 1)]
        + [f"dd{i}" for i in range(1, w * (nd - 1) + 1)]
    )

    def d(i):
        return d0 + i - 1

    def isolated(top: int, bs: int, be: int) -> tuple[int, ...]:
        return _vote(m, [top], up(bs, be), down(top - 1, 0), up(top + 1, bs - 1), up(be + 1, m - 1))

    reg, reg_src = [], []
    if n > 2:
        for i in range(1, nc + 1):
            bs = e0 + w * (i - 1)
            reg.append((isolated(i - 1, bs, bs + w - 1), n - 2))
            reg_src.append(f"score padding for x{gamma[i - 1]}")
    for i in range(1, nd + 1):
        if i < n:
            copies, block = n - i - 1, i
        elif i > n:
            copies, block = i - n - 1, i - 1
        else:
            continue
        if copies:
            bs = dd0 + w * (block - 1)
            reg.append((isolated(d(i), bs, bs + w - 1), copies))
            reg_src.append(f"score padding for d{i}")

    unreg, unreg_src = [], []
    for gi, group in enumerate(vis.groups, start=1):
        for a in group:
            lo, hi = where[a], where[a + 3]
            v = _vote(m, up(lo, hi), up(d(gi), m - 1), down(lo - 1, 0), up(hi + 1, d(gi) - 1))
            unreg.append((v, 1))
            unreg_src.append(f"group {gi} interval [{a},{a + 3}]")

    p = d(n)
    el = Election(tuple(names), p, n + 4, VoteMultiset(tuple(reg)))
    sc = el.scores()
    assert all(sc[c] == n - 2 for c in range(nc))
    assert all(sc[d(i)] == n - i - 1 for i in range(1, n))
    assert all(sc[d(i)] == i - n - 1 for i in range(n + 1, nd + 1))
    assert sc[p] == 0 and all(sc[c] <= n - 2 for c in range(e0, m))
    inst = AvInstance(el, VoteMultiset(tuple(unreg)), n, tuple(range(m)), 2)
    _check(inst)
    return Reduction(inst, reg_src, unreg_src)


# ---------------------------------------------------------------- graphs


def brute_vc(g: Graph, k: int) -> bool:
    if g.n > BRUTE_LIMIT:
        raise RuntimeError(f"graph with {g.n} vertices exceeds the exhaustive limit")
    for size in range(0, min(k, g.n) + 1):
        for s in combinations(range(g.n), size):
            chosen = set(s)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return True
    return False


def brute_is(g: Graph, k: int) -> bool:
    """Is there an independent set of exactly ``k`` vertices?"""
    if g.n > BRUTE_LIMIT:
        raise RuntimeError(f"graph with {g.n} vertices exceeds the exhaustive limit")
    if k < 0 or k > g.n:
        return False
    for s in combinations(range(g.n), k):
        chosen = set(s)
        if not any(u in chosen and v in chosen for u, v in g.edges):
            return True
    return False


@dataclass
class _Layout:
    """Padded representation turned into axis positions with segment padding."""

    size: int                     # number of positions used by the extended endpoint list
    point: list[int]              # per vertex
    seg: list[tuple[int, int]]    # per vertex: first and last position of its segment block
    names: list[str]


def _layout(g: Graph, pad: int) -> _Layout:
    g.require_max_degree(3)
    rep = pad_to_point_segment_form(build_2interval_rep(g), g)
    gamma, _ = endpoint_universe(rep)
    seg_left = {}
    for u, ivs in enumerate(rep.intervals):
        for a, b in ivs:
            if a < b:
                seg_left[a] = u
    pos, names = {}, []
    for x in gamma:
        pos[x] = len(names)
        names.append(f"g{x}")
        if x in seg_left:
            names.extend(f"g{x}_{s}" for s in range(1, pad + 1))
    point, seg = [], []
    for ivs in rep.intervals:
        (pt, _), (a, b) = ivs
        point.append(pos[pt])
        seg.append((pos[a], pos[b]))
    return _Layout(len(names), point, seg, names)


def reduce_vc3_to_dv2(g: Graph, k: int, r: int = 3) -> Reduction:
    """Vertex cover of size <= k becomes deleting at most k votes, 2-peaked, width r."""
    if r < 3:
        raise InputError("the construction needs r >= 3")
    if not 0 <= k <= g.n:
        raise InputError(f"cover size k={k} outside 0..{g.n}")
    lay = _layout(g, r - 3)
    p = lay.size
    cs = [p + i for i in range(1, 2 * r - 1)]       # c_1 .. c_{2r-2}
    m = p + 1 + len(cs)
    names = lay.names + ["p"] + [f"c{i}" for i in range(1, 2 * r - 1)]
    reg, src = [], []
    for u in range(g.n):
        x, (a, b) = lay.point[u], lay.seg[u]
        if x > b:
            v = _vote(m, up(a, b), [x], down(a - 1, 0), up(b + 1, x - 1), up(x + 1, m - 1))
        else:
            v = _vote(m, [x], up(a, b), down(x - 1, 0), up(x + 1, a - 1), up(b + 1, m - 1))
        reg.append((v, 1))
        src.append(f"vertex {u}")
    c = lambda i: cs[i - 1]  # noqa: E731
    reg.append((_vote(m, up(p, m - 1), down(p - 1, 0)), 1))
    src.append("p support 1")
    reg.append((_vote(m, [p], up(c(r), c(2 * r - 2)), up(c(1), c(r - 1)), down(p - 1, 0)), 1))
    src.append("p support 2")
    el = Election(tuple(names), p, r, VoteMultiset(tuple(reg)))
    sc = el.scores()
    assert sc[p] == 2
    assert all(sc[x] <= 2 for x in range(m))
    inst = DvInstance(el, k, tuple(range(m)), 2)
    _check(inst)
    return Reduction(inst, src)


def reduce_is3_to_av3(g: Graph, k: int, r: int = 4) -> Reduction:
    """Independent set of exactly k vertices becomes adding k votes, 3-peaked, width r."""
    if r < 4:
        raise InputError("the construction needs r >= 4")
    if not 2 <= k <= g.n:
        raise InputError(f"set size k={k} outside 2..{g.n}; smaller sizes are decided directly")
    lay = _layout(g, r - 4)
    G = lay.size
    p = G
    c = lambda i: G + i  # noqa: E731  c_1 .. c_{r-1}
    m = G + r
    names = lay.names + ["p"] + [f"c{i}" for i in range(1, r)]
    reg, src = [], []
    copies = k - 2
    if copies:
        for s in range(0, G - G % r, r):
            reg.append((_vote(m, up(s, s + r - 1), down(s - 1, 0), up(s + r, m - 1)), copies))
            src.append(f"score padding block at {s}")
        q = G % r
        if q:
            v = _vote(m, up(G - q, G - 1), up(c(1), c(r - q)), down(G - q - 1, 0), [p], up(c(r - q + 1), c(r - 1)))
            reg.append((v, copies))
            src.append("score padding remainder")
    unreg, usrc = [], []
    for u in range(g.n):
        x, (a, b) = lay.point[u], lay.seg[u]
        if x > b:
            v = _vote(m, up(a, b), [x, p], down(a - 1, 0), up(b + 1, x - 1), up(x + 1, p - 1), up(p + 1, m - 1))
        else:
            v = _vote(m, [x], up(a, b), [p], down(x - 1, 0), up(x + 1, a - 1), up(b + 1, p - 1), up(p + 1, m - 1))
        unreg.append((v, 1))
        usrc.append(f"vertex {u}")
    el = Election(tuple(names), p, r, VoteMultiset(tuple(reg)))
    sc = el.scores()
    assert all(sc[x] == k - 2 for x in range(G))
    assert sc[p] == 0 and all(sc[c(i)] <= k - 2 for i in range(1, r))
    inst = AvInstance(el, VoteMultiset(tuple(unreg)), k, tuple(range(m)), 3)
    _check(inst)
    return Reduction(inst, src, usrc)


def reduce_is_to_dc3(g: Graph, k: int) -> Reduction:
    """Independent set of size k becomes deleting at most k candidates, 1-approval, 3-peaked.

    The three large vote families use ``M = max(|E|, 2)`` in place of the
    edge count, which keeps a lone edge from tying ``p`` with a vertex
    candidate.
    """
    n = g.n
    if not 1 <= k <= n:
        raise InputError(f"set size k={k} outside 1..{n}")
    M = max(g.m, 2)
    bk, b, p, a = 0, k, k + 1, k + 2
    a_ = lambda i: a + i  # noqa: E731
    b_ = lambda i: k - i  # noqa: E731
    cv = lambda v: 2 * k + 3 + v  # noqa: E731
    m = 2 * k + 3 + n
    last = m - 1
    names = [f"b{k - i}" for i in range(k)] + ["b", "p", "a"] + [f"a{i}" for i in range(1, k + 1)]
    names += [f"v{v}" for v in range(n)]
    F = [cv(v) for v in range(n)]
    reg, src = [], []

    def add(v, copies, label):
        if copies:
            reg.append((_vote(m, *v), copies))
            src.append(label)

    add((up(a, last), down(p, bk)), 2 * M - 1, "family 1")
    add((up(p, last), down(b, bk)), 2 * M, "family 2")
    add((down(b, bk), up(p, last)), 2 * M + k - 1, "family 3")
    for u, w in g.edges:
        add(([cv(u), cv(w)], up(a, a_(k)), down(p, bk), [c for c in F if c not in (cv(u), cv(w))]), 1, f"edge {u}-{w}")
    for u in range(n):
        rest = [c for c in F if c != cv(u)]
        add(([cv(u)], up(p, a_(k)), down(b, bk), rest), 1, f"vertex {u} toward p")
        add(([cv(u)], up(a, a_(k)), down(p, bk), rest), 1, f"vertex {u} toward a")
    add((up(a_(1), last), down(a, bk)), k + 1, "family 6")
    add((down(b_(1), bk), up(b, last)), 1, "family 7")
    el = Election(tuple(names), p, 1, VoteMultiset(tuple(reg)))
    sc = el.scores()
    assert sc[p] == 2 * M and sc[a] == 2 * M - 1 and sc[b] == 2 * M + k - 1
    inst = DcInstance(el, k, tuple(range(m)), 3)
    _check(inst)
    notes = ["budget counts deleted candidates", f"large families use multiplier {M}"]
    return Reduction(inst, src, notes=notes)


def family_sizes(g: Graph, k: int) -> dict[str, int]:
    """Vote counts per family in :func:`reduce_is_to_dc3` (for recounting)."""
    M = max(g.m, 2)
    return {
        "family 1": 2 * M - 1,
        "family 2": 2 * M,
        "family 3": 2 * M + k - 1,
        "edges": g.m,
        "vertices": 2 * g.n,
        "family 6": k + 1,
        "family 7": 1,
    }


def graph_label(kind: str, g: Graph, k: int) -> bool:
    """Source-side answer for a reduction of the given kind."""
    if kind == "vc3-to-dv2":
        return brute_vc(g, k)
    if kind in ("is3-to-av3", "is-to-dc3"):
        return brute_is(g, k)
    raise InputError(f"unknown reduction {kind!r}")


def reduce_graph(kind: str, g: Graph, k: int, r: int | None = None) -> Reduction:
    if kind == "vc3-to-dv2":
        return reduce_vc3_to_dv2(g, k, r or 3)
    if kind == "is3-to-av3":
        return reduce_is3_to_av3(g, k, r or 4)
    if kind == "is-to-dc3":
        return reduce_is_to_dc3(g, k)
    raise InputError(f"unknown reduction {kind!r}")


def as_groups(groups: Sequence[Sequence[int]]) -> VisInstance:
    return VisInstance(tuple(tuple(g) for g in groups))
