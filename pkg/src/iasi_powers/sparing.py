"""Sparing number via maximum-weight independent sets.

In a weak IASI every edge has at least one singleton end, so the vertices
with larger labels form an independent set ``I`` and the edges that avoid
being mono-indexed are exactly those incident to ``I``.  Hence

    phi(G) = |E| - max over independent I of sum(deg(v) for v in I),

and any independent set can be realised by an explicit labeling
(:func:`construct_certificate`), so the bound is attained.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .families import Family, FamilySpec
from .graph import Graph
from .mwis import (
    BITMASK_LIMIT,
    MwisSolution,
    WeightedInstance,
    mwis_bitmask,
    mwis_branch_bound,
    mwis_cycle_power,
    mwis_path_power,
)
from .sumset import SetLabel, WeakIasiCertificate, validate_certificate


class NotIndependentError(ValueError):
    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"vertex set is not independent: edge {edge[0]}-{edge[1]}")
        self.edge = edge


class AuditError(AssertionError):
    """Two exact solvers, or a solver and its certificate, disagree."""


def mian_chowla(k: int) -> list[int]:
    """First ``k`` terms of the Mian-Chowla sequence 1, 2, 4, 8, 13, 21, 31, ..."""
    seq: list[int] = []
    sums: set[int] = set()
    cand = 1
    while len(seq) < k:
        new = {cand + x for x in seq} | {2 * cand}
        if not new & sums:
            seq.append(cand)
            sums |= new
        cand += 1
    return seq


def construct_certificate(g: Graph, independent_set: Iterable[int]) -> WeakIasiCertificate:
    """Explicit weak IASI whose non-singleton vertices are exactly ``independent_set``.

    Outside vertices get distinct Mian-Chowla singletons, so mono edges get
    distinct sums.  The j-th chosen vertex gets ``{0, Q, ..., (j+1)Q}`` with
    ``Q`` one more than the largest singleton; the cardinalities differ per
    chosen vertex and the translates by distinct singletons differ, so edge
    labels stay injective.
    """
    chosen = sorted(set(independent_set))
    for v in chosen:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph on {g.n} vertices")
    bad = g.offending_edge(chosen)
    if bad is not None:
        raise NotIndependentError(bad)

    inside = set(chosen)
    outside = [v for v in range(g.n) if v not in inside]
    singles = mian_chowla(len(outside))
    q = 1 + (singles[-1] if singles else 0)
    labels: list[SetLabel | None] = [None] * g.n
    for v, s in zip(outside, singles):
        labels[v] = SetLabel((s,))
    for j, v in enumerate(chosen):
        labels[v] = SetLabel(tuple(m * q for m in range(j + 2)))
    return WeakIasiCertificate.from_labels(g, labels)  # type: ignore[arg-type]


@dataclass(frozen=True)
class SparingResult:
    value: int
    witness_independent_set: tuple[int, ...]
    certificate: WeakIasiCertificate


def _finish(g: Graph, sol: MwisSolution) -> SparingResult:
    # isolated vertices carry no edges; keep them out of the witness
    witness = tuple(v for v in sol.chosen if g.degree(v) > 0)
    value = g.m - sol.weight
    cert = construct_certificate(g, witness)
    report = validate_certificate(cert)
    if not report.ok:
        raise AuditError("; ".join(report.failures()))
    if cert.mono_edge_count != value:
        raise AuditError(f"certificate has {cert.mono_edge_count} mono edges, expected {value}")
    return SparingResult(value, witness, cert)


def _audit(inst: WeightedInstance, sol: MwisSolution) -> None:
    if not sol.is_independent_in(inst.graph):
        raise AuditError(f"solver returned a dependent set {sol.chosen}")
    if sum(inst.weights[v] for v in sol.chosen) != sol.weight:
        raise AuditError("solver weight does not match its chosen set")
    if inst.graph.n <= BITMASK_LIMIT:
        ref = mwis_bitmask(inst)
        if ref.weight != sol.weight:
            raise AuditError(f"solver weight {sol.weight} != bitmask weight {ref.weight}")


def sparing_number(g: Graph, solver: str = "auto", audit: bool = True) -> SparingResult:
    """Exact sparing number of ``g`` with a validated certificate.

    ``solver`` is ``"auto"`` / ``"branch-bound"`` or ``"bitmask"``.  With
    ``audit`` the answer is cross-checked against the bitmask solver
    whenever the graph is small enough for it.
    """
    inst = WeightedInstance.degree_weighted(g)
    if solver == "bitmask":
        sol = mwis_bitmask(inst)
    elif solver in ("auto", "branch-bound"):
        sol = mwis_branch_bound(inst)
    else:
        raise ValueError(f"unknown solver {solver!r}")
    if audit:
        _audit(inst, sol)
    return _finish(g, sol)


def sparing_number_of(spec: FamilySpec, audit: bool = True) -> SparingResult:
    """Like :func:`sparing_number`, using the path/cycle-power DPs where they apply."""
    g = spec.graph()
    n, r = spec.params[0], spec.power
    inst = WeightedInstance.degree_weighted(g)
    if spec.family is Family.PATH:
        sol = mwis_path_power(n, r, inst.weights)
    elif spec.family is Family.CYCLE and r < n // 2:
        sol = mwis_cycle_power(n, r, inst.weights)
    else:
        return sparing_number(g, audit=audit)
    if audit:
        _audit(inst, sol)
    return _finish(g, sol)
