"""2-interval representations of graphs with maximum degree 3.

Layout idea: every edge gets its own coordinate on the line, shared by the
intervals of its two endpoints.  A vertex of degree at most 2 is a point on
each of its edge coordinates.  A vertex of degree 3 *links* two of its edges:
their coordinates are placed next to each other and the vertex owns the
segment between them, plus a point on its third edge.

Links form paths over edge coordinates as long as no cycle of degree-3
vertices links all of its own cycle edges.  We pick the unlinked (pointed)
edge of each degree-3 vertex from a depth-first search: every back edge is
claimed by one of its endpoints, which is always possible because a vertex
of degree 3 has at most two back edges, and a vertex with two of them hands
one to its ancestor, whose three edges are then parent, child and that back
edge.

Padding doubles all coordinates first, so a point can be widened into an
odd neighbour that no other vertex touches.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .election import InputError
from .graphs import Graph

Interval = tuple[int, int]


@dataclass(frozen=True)
class TwoIntervalRep:
    intervals: tuple[tuple[Interval, ...], ...]  # per vertex, trivial ones first

    def of(self, u: int) -> tuple[Interval, ...]:
        return self.intervals[u]


def _sorted_intervals(items) -> tuple[Interval, ...]:
    return tuple(sorted(items, key=lambda iv: (iv[1] - iv[0], iv)))


def _pointed_edges(g: Graph) -> dict[int, tuple[int, int]]:
    """For each degree-3 vertex, the incident edge that will not be linked."""
    adj = g.adjacency()
    deg3 = [u for u in range(g.n) if len(adj[u]) == 3]
    in_h = set(deg3)
    claimed: dict[int, tuple[int, int]] = {}
    depth: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for root in deg3:
        if root in depth:
            continue
        depth[root] = 0
        parent[root] = None
        stack = [(root, iter(adj[root]))]
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if w not in in_h:
                    continue
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
        # back edges of this component, assigned to their lower endpoint
    ups: dict[int, list[int]] = {}
    for u in deg3:
        for w in adj[u]:
            if w in in_h and depth[w] < depth[u] and parent[u] != w:
                ups.setdefault(u, []).append(w)
    for u, anc in ups.items():
        anc = sorted(anc, key=lambda a: depth[a])
        if len(anc) == 2:
            # hand the back edge that avoids the DFS root to that ancestor
            give, keep = (anc[1], anc[0]) if parent[anc[0]] is None else (anc[0], anc[1])
            claimed[give] = (min(u, give), max(u, give))
            claimed[u] = (min(u, keep), max(u, keep))
        else:
            claimed[u] = (min(u, anc[0]), max(u, anc[0]))
    out = {}
    for u in deg3:
        if u in claimed:
            out[u] = claimed[u]
        else:
            w = adj[u][-1]
            out[u] = (min(u, w), max(u, w))
    return out


def build_2interval_rep(g: Graph) -> TwoIntervalRep:
    """Representation in which degree <= 1 vertices are points, degree-2
    vertices are two points and degree-3 vertices are a point plus a segment."""
    g.require_max_degree(3)
    adj = g.adjacency()
    pointed = _pointed_edges(g)
    links: dict[tuple[int, int], list[tuple[int, int]]] = {e: [] for e in g.edges}
    for u, skip in pointed.items():
        a, b = [(min(u, w), max(u, w)) for w in adj[u] if (min(u, w), max(u, w)) != skip]
        links[a].append(b)
        links[b].append(a)
    coord: dict[tuple[int, int], int] = {}
    nxt = 0
    for e in g.edges:
        if e in coord or len(links[e]) == 2:
            continue
        # walk a link path from one of its ends
        prev, cur = None, e
        while cur is not None:
            coord[cur] = nxt
            nxt += 2
            step = [f for f in links[cur] if f != prev]
            prev, cur = cur, (step[0] if step else None)
    if len(coord) != len(g.edges):
        raise AssertionError("link structure contains a cycle")
    reps = []
    for u in range(g.n):
        mine = [coord[(min(u, w), max(u, w))] for w in adj[u]]
        if not mine:
            reps.append(((nxt, nxt),))
            nxt += 2
        elif len(mine) < 3:
            reps.append(_sorted_intervals((x, x) for x in mine))
        else:
            x = coord[pointed[u]]
            a, b = sorted(y for y in mine if y != x)
            if b - a != 2:
                raise AssertionError(f"linked coordinates of vertex {u} are not adjacent")
            reps.append(((x, x), (a, b)))
    return TwoIntervalRep(tuple(reps))


def _needs_padding(ivs) -> bool:
    return not (len(ivs) == 2 and ivs[0][0] == ivs[0][1] and ivs[1][0] < ivs[1][1])


def pad_to_point_segment_form(rep: TwoIntervalRep, g: Graph) -> TwoIntervalRep:
    """Give every vertex exactly one point and one segment with three distinct endpoints."""
    if not any(_needs_padding(ivs) for ivs in rep.intervals):
        return rep
    # doubling keeps order and gives every coordinate two private neighbours
    rep = TwoIntervalRep(tuple(tuple((2 * a, 2 * b) for a, b in ivs) for ivs in rep.intervals))
    segments = {(a, b) for ivs in rep.intervals for a, b in ivs if a < b}
    fresh = max((x for ivs in rep.intervals for iv in ivs for x in iv), default=0) + 2
    out = []
    for u, ivs in enumerate(rep.intervals):
        if not _needs_padding(ivs):
            out.append(ivs)
            continue
        points = [iv for iv in ivs if iv[0] == iv[1]]
        if len(ivs) == 1 and ivs[0][0] < ivs[0][1]:
            # a lone segment only needs a private point
            out.append(((fresh, fresh), ivs[0]))
            fresh += 2
        elif len(points) <= 1:
            pt = points[0] if points else (fresh, fresh)
            if not points:
                fresh += 2
            out.append((pt, (fresh, fresh + 2)))
            fresh += 4
        else:
            (y, _), (z, _) = points[0], points[1]
            if not any(a < y - 1 < b for a, b in segments):
                wide = (y - 1, y)
            else:
                wide = (y, y + 1)
            out.append(((z, z), wide))
    return TwoIntervalRep(tuple(out))


def endpoint_universe(rep: TwoIntervalRep):
    """Sorted distinct endpoints and each vertex's sorted endpoint tuple."""
    per = [tuple(sorted({x for iv in ivs for x in iv})) for ivs in rep.intervals]
    gamma = sorted({x for d in per for x in d})
    return gamma, per


def _meet(a: Interval, b: Interval) -> bool:
    return max(a[0], b[0]) <= min(a[1], b[1])


def verify_rep(g: Graph, rep: TwoIntervalRep, form: str = "padded") -> list[str]:
    """Violations of the representation contract (empty list when sound).

    ``form="padded"`` requires one point plus one segment with three distinct
    endpoints per vertex and consecutive segment ends in the endpoint list;
    ``form="raw"`` checks the unpadded shape (points for degree <= 2).
    """
    out: list[str] = []
    if len(rep.intervals) != g.n:
        return [f"representation has {len(rep.intervals)} vertices, graph has {g.n}"]
    edges = set(g.edges)
    for u in range(g.n):
        for w in range(u + 1, g.n):
            hit = any(_meet(a, b) for a in rep.intervals[u] for b in rep.intervals[w])
            if hit != ((u, w) in edges):
                out.append(f"vertices {u},{w}: intervals {'meet' if hit else 'miss'} but edge {'absent' if hit else 'present'}")
    degs = g.degrees()
    for u, ivs in enumerate(rep.intervals):
        if any(a > b for a, b in ivs):
            out.append(f"vertex {u}: reversed interval")
            continue
        points = [iv for iv in ivs if iv[0] == iv[1]]
        segs = [iv for iv in ivs if iv[0] < iv[1]]
        if form == "padded":
            ends = {x for iv in ivs for x in iv}
            if len(points) != 1 or len(segs) != 1 or len(ends) != 3:
                out.append(f"vertex {u}: expected one point and one segment with 3 endpoints, got {ivs}")
        else:
            d = degs[u]
            ok = (
                (d <= 1 and len(points) == 1 and not segs)
                or (d == 2 and ((len(points) == 2 and not segs) or (len(segs) == 1 and not points)))
                or (d == 3 and len(points) == 1 and len(segs) == 1)
            )
            if not ok:
                out.append(f"vertex {u} of degree {d}: shape {ivs} not allowed")
    for u, ivs in enumerate(rep.intervals):
        for a, b in ivs:
            if a == b:
                continue
            for w, other in enumerate(rep.intervals):
                if w == u:
                    continue
                for iv in other:
                    for x in iv:
                        if a < x < b:
                            out.append(f"vertex {u}: endpoint {x} of vertex {w} inside segment ({a}, {b})")
    if form == "padded":
        gamma, _ = endpoint_universe(rep)
        for u, ivs in enumerate(rep.intervals):
            for a, b in ivs:
                if a < b and bisect_left(gamma, b) != bisect_left(gamma, a) + 1:
                    out.append(f"vertex {u}: segment ends ({a}, {b}) not consecutive among endpoints")
    return out
