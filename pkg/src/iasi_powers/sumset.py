"""Set labels, sumsets and weak-IASI certificates.

A labeling assigns every vertex a non-empty finite set of non-negative
integers; an edge ``uv`` carries the sumset ``f(u) + f(v)``.  The labeling
is a weak IASI when vertex labels are pairwise distinct, edge labels are
pairwise distinct and ``|f(u) + f(v)| == max(|f(u)|, |f(v)|)`` on every edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .graph import Graph


class InfeasibleLabeling(RuntimeError):
    """No valid labeling exists inside the requested label universe."""


@dataclass(frozen=True, order=True)
class SetLabel:
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(int(x) for x in self.elements)))
        if not elems:
            raise ValueError("a set label must be non-empty")
        if elems[0] < 0:
            raise ValueError(f"set labels hold non-negative integers, got {elems[0]}")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of(cls, *xs: int) -> "SetLabel":
        return cls(tuple(xs))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __add__(self, other: "SetLabel") -> "SetLabel":
        return sumset(self, other)

    def shift(self, k: int) -> "SetLabel":
        return SetLabel(tuple(x + k for x in self.elements))

    @property
    def is_mono(self) -> bool:
        return len(self.elements) == 1

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def sumset(a: SetLabel, b: SetLabel) -> SetLabel:
    return SetLabel(tuple({x + y for x in a.elements for y in b.elements}))


@dataclass(frozen=True)
class VertexLabeling:
    """Total labeling of a graph's vertices; injectivity is checked by validation."""

    graph: Graph
    labels: tuple[SetLabel, ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError(
                f"labeling must be total: {self.graph.n} vertices, {len(self.labels)} labels"
            )

    def __getitem__(self, v: int) -> SetLabel:
        return self.labels[v]

    def non_singleton_vertices(self) -> list[int]:
        return [v for v, lab in enumerate(self.labels) if not lab.is_mono]


@dataclass(frozen=True)
class WeakIasiCertificate:
    labeling: VertexLabeling
    edge_labels: Mapping[tuple[int, int], SetLabel]
    mono_edge_count: int

    @classmethod
    def from_labels(cls, g: Graph, labels: Sequence[SetLabel]) -> "WeakIasiCertificate":
        lab = VertexLabeling(g, tuple(labels))
        edge_labels = {(u, v): sumset(lab[u], lab[v]) for u, v in g.sorted_edges()}
        mono = sum(1 for u, v in g.edges if lab[u].is_mono and lab[v].is_mono)
        return cls(lab, edge_labels, mono)

    @property
    def graph(self) -> Graph:
        return self.labeling.graph

    def mono_edges(self) -> list[tuple[int, int]]:
        lab = self.labeling
        return [(u, v) for u, v in self.graph.sorted_edges() if lab[u].is_mono and lab[v].is_mono]

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v, "label": list(lab.elements)} for v, lab in enumerate(self.labeling.labels)
            ],
            "mono_edges": [list(e) for e in self.mono_edges()],
        }


@dataclass
class ValidationReport:
    duplicate_vertex_labels: list[list[int]] = field(default_factory=list)
    wrong_edge_labels: list[tuple[int, int]] = field(default_factory=list)
    missing_edge_labels: list[tuple[int, int]] = field(default_factory=list)
    extra_edge_labels: list[tuple[int, int]] = field(default_factory=list)
    duplicate_edge_labels: list[list[tuple[int, int]]] = field(default_factory=list)
    weak_violations: list[tuple[int, int]] = field(default_factory=list)
    # edges whose endpoints both carry non-singleton labels
    non_singleton_adjacent: list[tuple[int, int]] = field(default_factory=list)
    stated_mono_count: int = 0
    recomputed_mono_count: int = 0

    @property
    def vertex_injective(self) -> bool:
        return not self.duplicate_vertex_labels

    @property
    def edge_injective(self) -> bool:
        return not self.duplicate_edge_labels

    @property
    def weak(self) -> bool:
        return not self.weak_violations

    @property
    def mono_count_matches(self) -> bool:
        return self.stated_mono_count == self.recomputed_mono_count

    @property
    def ok(self) -> bool:
        return (
            self.vertex_injective
            and self.edge_injective
            and self.weak
            and self.mono_count_matches
            and not self.wrong_edge_labels
            and not self.missing_edge_labels
            and not self.extra_edge_labels
            and not self.non_singleton_adjacent
        )

    def failures(self) -> list[str]:
        out = []
        for group in self.duplicate_vertex_labels:
            out.append(f"vertices {group} share a label")
        for e in self.missing_edge_labels:
            out.append(f"edge {e} has no label")
        for e in self.extra_edge_labels:
            out.append(f"label given for non-edge {e}")
        for e in self.wrong_edge_labels:
            out.append(f"edge {e} label is not the sumset of its endpoints")
        for group in self.duplicate_edge_labels:
            out.append(f"edges {group} share a label")
        for e in self.weak_violations:
            out.append(f"edge {e} violates |f(u)+f(v)| = max(|f(u)|, |f(v)|)")
        for e in self.non_singleton_adjacent:
            out.append(f"edge {e} joins two non-singleton labels")
        if not self.mono_count_matches:
            out.append(
                f"stated mono count {self.stated_mono_count} != recomputed {self.recomputed_mono_count}"
            )
        return out


def _groups(keyed: Iterable[tuple[object, object]]) -> list[list]:
    buckets: dict[object, list] = {}
    for key, item in keyed:
        buckets.setdefault(key, []).append(item)
    return [items for items in buckets.values() if len(items) > 1]


def validate_certificate(c: WeakIasiCertificate) -> ValidationReport:
    """Recompute every weak-IASI condition from scratch; never raises."""
    g, lab = c.graph, c.labeling
    rep = ValidationReport(stated_mono_count=c.mono_edge_count)
    rep.duplicate_vertex_labels = _groups((lab[v], v) for v in range(g.n))

    edges = g.sorted_edges()
    given = {tuple(sorted(e)): s for e, s in c.edge_labels.items()}
    rep.missing_edge_labels = [e for e in edges if e not in given]
    rep.extra_edge_labels = sorted(e for e in given if not g.has_edge(*e))

    recomputed = {}
    for u, v in edges:
        a, b = lab[u], lab[v]
        s = sumset(a, b)
        recomputed[(u, v)] = s
        if (u, v) in given and given[(u, v)] != s:
            rep.wrong_edge_labels.append((u, v))
        if len(s) != max(len(a), len(b)):
            rep.weak_violations.append((u, v))
        if not a.is_mono and not b.is_mono:
            rep.non_singleton_adjacent.append((u, v))
    rep.duplicate_edge_labels = _groups((s, e) for e, s in recomputed.items())
    rep.recomputed_mono_count = sum(1 for u, v in edges if lab[u].is_mono and lab[v].is_mono)
    return rep


# --- exhaustive definitional oracle -------------------------------------------------


@dataclass(frozen=True)
class ExhaustiveResult:
    value: int
    labels: tuple[SetLabel, ...]


def _label_pools(universe_max: int, max_card: int) -> tuple[list[SetLabel], list[SetLabel]]:
    universe = range(universe_max + 1)
    singles = [SetLabel((x,)) for x in universe]
    multi = [
        SetLabel(c) for k in range(2, max_card + 1) for c in combinations(universe, k)
    ]
    return singles, multi


class _SumTable:
    """Sumsets and weak-condition flags for every pair of candidate labels, by index."""

    def __init__(self, pool: list[SetLabel]):
        self.pool = pool
        k = len(pool)
        self.sums = [[sumset(pool[i], pool[j]) for j in range(k)] for i in range(k)]
        self.weak = [
            [len(self.sums[i][j]) == max(len(pool[i]), len(pool[j])) for j in range(k)]
            for i in range(k)
        ]


def _search_order(g: Graph, non_singleton: frozenset) -> list[int]:
    """Non-singleton vertices first, endpoints of any edge among them leading."""
    inner = [e for e in g.sorted_edges() if e[0] in non_singleton and e[1] in non_singleton]
    lead = list(inner[0]) if inner else []
    rest_t = sorted((v for v in non_singleton if v not in lead), key=lambda v: (-g.degree(v), v))
    rest = sorted(
        (v for v in range(g.n) if v not in non_singleton), key=lambda v: (-g.degree(v), v)
    )
    return lead + rest_t + rest


def _find_labeling(
    g: Graph, non_singleton: frozenset, table: _SumTable, n_singles: int
) -> tuple[SetLabel, ...] | None:
    """Backtracking search for a valid labeling whose non-singleton vertices are exactly ``non_singleton``.

    Labels are indices into ``table.pool``; the first ``n_singles`` are the singletons.
    """
    pool_size = len(table.pool)
    if n_singles < g.n - len(non_singleton) or pool_size - n_singles < len(non_singleton):
        return None
    order = _search_order(g, non_singleton)
    sums, weak = table.sums, table.weak
    singles = range(n_singles)
    multi = range(n_singles, pool_size)
    labels: list[int] = [-1] * g.n
    used_vertex: set[int] = set()
    used_edge: set[SetLabel] = set()

    def place(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        placed = [labels[u] for u in g.adj[v] if labels[u] >= 0]
        for cand in multi if v in non_singleton else singles:
            if cand in used_vertex:
                continue
            row_s, row_w = sums[cand], weak[cand]
            new_edges = []
            for lu in placed:
                s = row_s[lu]
                if not row_w[lu] or s in used_edge or s in new_edges:
                    break
                new_edges.append(s)
            else:
                labels[v] = cand
                used_vertex.add(cand)
                used_edge.update(new_edges)
                if place(depth + 1):
                    return True
                labels[v] = -1
                used_vertex.discard(cand)
                used_edge.difference_update(new_edges)
        return False

    if not place(0):
        return None
    return tuple(table.pool[i] for i in labels)


def _patterns_by_mono(g: Graph) -> list[tuple[int, frozenset]]:
    """Every choice of non-singleton vertex set, keyed by the mono count it would give."""
    out = []
    for mask in range(1 << g.n):
        t = frozenset(v for v in range(g.n) if mask >> v & 1)
        mono = sum(1 for u, v in g.edges if u not in t and v not in t)
        out.append((mono, t))
    out.sort(key=lambda p: (p[0], sorted(p[1])))
    return out


def feasible_patterns(
    g: Graph, universe_max: int = 9, max_card: int = 2
) -> Iterator[tuple[int, tuple[SetLabel, ...]]]:
    """Yield ``(mono_count, labels)`` for each singleton pattern that admits a valid labeling."""
    singles, multi = _label_pools(universe_max, max_card)
    table = _SumTable(singles + multi)
    for mono, t in _patterns_by_mono(g):
        labels = _find_labeling(g, t, table, len(singles))
        if labels is not None:
            yield mono, labels


def exhaustive_search(g: Graph, universe_max: int = 9, max_card: int = 2) -> ExhaustiveResult:
    if max_card < 1:
        raise ValueError("max_card must be >= 1")
    for mono, labels in feasible_patterns(g, universe_max, max_card):
        return ExhaustiveResult(mono, labels)
    raise InfeasibleLabeling(
        f"no weak IASI with labels in subsets of {{0..{universe_max}}} of size <= {max_card}"
    )


def exhaustive_min_mono(g: Graph, universe_max: int = 9, max_card: int = 2) -> int:
    """Minimum mono-indexed edge count over all valid labelings in a bounded universe.

    Exponential; meant for graphs with at most five or so vertices.  Patterns
    are tried in increasing mono count and each is settled by a complete
    backtracking search, so the first feasible one is the true minimum.
    """
    return exhaustive_search(g, universe_max, max_card).value
