"""Named graph families and their fixed vertex numbering.

Numbering (0-based):

* Path / Cycle: along the path or cycle.
* Wheel(n): rim ``0..n-1`` in cycle order, hub ``n``.
* Helm(n): rim ``0..n-1``, pendant ``n+i`` hanging off rim ``i``, hub ``2n``.
* CompleteSun(n): clique ``U = 0..n-1``; ``w_j = n+j`` joined to ``u_j`` and ``u_{(j+1) mod n}``.
* CompleteSplit(r, s): clique ``0..r-1``, independent set ``r..r+s-1``.
* CompleteBipartite(m, n): parts ``0..m-1`` and ``m..m+n-1``.
* Ladder(n) / Prism(n): rails ``0..n-1`` and ``n..2n-1``, rung ``{i, n+i}``.
* Grid(rows, cols): row-major, vertex ``r*cols + c``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, graph_power


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    WHEEL = "wheel"
    HELM = "helm"
    COMPLETE_SUN = "complete-sun"
    COMPLETE_SPLIT = "complete-split"
    LADDER = "ladder"
    GRID = "grid"
    PRISM = "prism"


# (parameter names, minimum value per parameter)
PARAMS: dict[Family, tuple[tuple[str, int], ...]] = {
    Family.PATH: (("n", 1),),
    Family.CYCLE: (("n", 3),),
    Family.COMPLETE: (("n", 1),),
    Family.COMPLETE_BIPARTITE: (("m", 1), ("n", 1)),
    Family.WHEEL: (("n", 3),),
    Family.HELM: (("n", 3),),
    Family.COMPLETE_SUN: (("n", 3),),
    Family.COMPLETE_SPLIT: (("r", 1), ("s", 1)),
    Family.LADDER: (("n", 1),),
    Family.GRID: (("rows", 1), ("cols", 1)),
    Family.PRISM: (("n", 3),),
}


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]
    power: int = 1

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        spec = PARAMS[fam]
        if len(self.params) != len(spec):
            names = ", ".join(n for n, _ in spec)
            raise FamilyError(
                f"{fam.value} takes {len(spec)} parameter(s) ({names}), got {len(self.params)}"
            )
        for value, (name, lo) in zip(self.params, spec):
            if value < lo:
                raise FamilyError(f"{fam.value}: {name} must be >= {lo}, got {value}")
        if not isinstance(self.power, int) or self.power < 1:
            raise FamilyError(f"power must be a positive integer, got {self.power!r}")

    @classmethod
    def of(cls, family: str | Family, *params: int, power: int = 1) -> "FamilySpec":
        return cls(Family(family), tuple(params), power)

    @property
    def label(self) -> str:
        args = ",".join(str(p) for p in self.params)
        base = f"{self.family.value}({args})"
        return base if self.power == 1 else f"{base}^{self.power}"

    def base_graph(self) -> Graph:
        return generate(self)

    def graph(self) -> Graph:
        g = generate(self)
        return g if self.power == 1 else graph_power(g, self.power)


def _path(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def _cycle(n: int) -> list[tuple[int, int]]:
    return _path(n) + [(0, n - 1)]


def generate(spec: FamilySpec) -> Graph:
    """Base member of the family (the power field is ignored)."""
    fam, p = spec.family, spec.params
    if fam is Family.PATH:
        return Graph.from_edges(p[0], _path(p[0]))
    if fam is Family.CYCLE:
        return Graph.from_edges(p[0], _cycle(p[0]))
    if fam is Family.COMPLETE:
        return Graph.complete(p[0])
    if fam is Family.COMPLETE_BIPARTITE:
        m, n = p
        return Graph.from_edges(m + n, [(a, m + b) for a in range(m) for b in range(n)])
    if fam is Family.WHEEL:
        n = p[0]
        return Graph.from_edges(n + 1, _cycle(n) + [(i, n) for i in range(n)])
    if fam is Family.HELM:
        n = p[0]
        edges = _cycle(n) + [(i, 2 * n) for i in range(n)] + [(i, n + i) for i in range(n)]
        return Graph.from_edges(2 * n + 1, edges)
    if fam is Family.COMPLETE_SUN:
        n = p[0]
        edges = [(a, b) for a in range(n) for b in range(a + 1, n)]
        for j in range(n):
            edges += [(j, n + j), ((j + 1) % n, n + j)]
        return Graph.from_edges(2 * n, edges)
    if fam is Family.COMPLETE_SPLIT:
        r, s = p
        edges = [(a, b) for a in range(r) for b in range(a + 1, r)]
        edges += [(a, r + b) for a in range(r) for b in range(s)]
        return Graph.from_edges(r + s, edges)
    if fam is Family.LADDER:
        n = p[0]
        edges = _path(n) + [(n + a, n + b) for a, b in _path(n)] + [(i, n + i) for i in range(n)]
        return Graph.from_edges(2 * n, edges)
    if fam is Family.PRISM:
        n = p[0]
        edges = _cycle(n) + [(n + a, n + b) for a, b in _cycle(n)] + [(i, n + i) for i in range(n)]
        return Graph.from_edges(2 * n, edges)
    if fam is Family.GRID:
        rows, cols = p
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
        return Graph.from_edges(rows * cols, edges)
    raise FamilyError(f"unknown family {fam!r}")
