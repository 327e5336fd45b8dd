"""Simple undirected graphs, hop distances and graph powers.

Vertices are the integers ``0..n-1``; edges are stored as sorted pairs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

INF = math.inf


class GraphError(ValueError):
    pass


class EdgeListError(ValueError):
    """Malformed edge-list text; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be >= 0, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has endpoint outside [0, {self.n})")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) is not normalized; use Graph.from_edges")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing pairs and rejecting duplicates."""
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            e = _norm(int(u), int(v))
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        return tuple(sum(1 << w for w in nb) for nb in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_independent(self, vertices: Iterable[int]) -> bool:
        return self.offending_edge(vertices) is None

    def offending_edge(self, vertices: Iterable[int]) -> tuple[int, int] | None:
        """First edge (in sorted order) with both ends in ``vertices``, if any."""
        vs = set(vertices)
        for u, v in self.sorted_edges():
            if u in vs and v in vs:
                return (u, v)
        return None

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return all(d != INF for d in bfs_distances(self, 0))


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: tuple

    def __getitem__(self, uv: tuple[int, int]):
        u, v = uv
        return self.dist[u][v]


def bfs_distances(g: Graph, source: int) -> list:
    dist: list = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distance(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def diameter(g: Graph):
    """Largest hop distance, or ``INF`` if ``g`` is disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for row in all_pairs_distance(g).dist:
        for d in row:
            if d == INF:
                return INF
            best = max(best, d)
    return best


def graph_power(g: Graph, r: int) -> Graph:
    """The r-th power: u ~ v iff 0 < d(u, v) <= r."""
    if not isinstance(r, int) or r < 1:
        raise GraphError(f"power must be a positive integer, got {r!r}")
    dm = all_pairs_distance(g)
    edges = frozenset(
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if dm.dist[u][v] <= r
    )
    return Graph(g.n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    # trailing blank lines are tolerated, nothing else is
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise EdgeListError(1, "empty input; expected header 'n m'")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, f"expected two integers, got {line!r}") from None
        return a, b

    n, m = ints(1, lines[0])
    if n < 0 or m < 0:
        raise EdgeListError(1, "vertex and edge counts must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise EdgeListError(len(lines), f"header declares {m} edges, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    for offset, line in enumerate(body):
        lineno = offset + 2
        u, v = ints(lineno, line)
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(lineno, f"endpoint outside [0, {n})")
        e = _norm(u, v)
        if e in seen:
            raise EdgeListError(lineno, f"duplicate edge {u} {v}")
        seen.add(e)
    return Graph(n, frozenset(seen))
