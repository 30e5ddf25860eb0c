"""Small simple undirected graphs with dense vertex ids."""

from __future__ import annotations

from dataclasses import dataclass

from .election import InputError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) uses a vertex outside 0..{self.n - 1}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def require_max_degree(self, bound: int) -> None:
        if self.max_degree() > bound:
            raise InputError(f"graph has a vertex of degree {self.max_degree()} > {bound}")
