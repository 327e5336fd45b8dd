"""Exact maximum-weight independent set solvers.

Every solver returns, among all maximum-weight independent sets, the one
whose sorted vertex tuple is lexicographically smallest (Python tuple
order, so ``()`` < ``(0,)`` < ``(0, 3)`` < ``(1,)``).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .graph import Graph

BITMASK_LIMIT = 30


class SolverLimitError(ValueError):
    pass


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class WeightedInstance:
    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != self.graph.n:
            raise ValueError(f"need {self.graph.n} weights, got {len(w)}")
        if any(x < 0 for x in w):
            raise ValueError("weights must be non-negative")
        object.__setattr__(self, "weights", w)

    @classmethod
    def degree_weighted(cls, g: Graph) -> "WeightedInstance":
        return cls(g, tuple(g.degrees()))


@dataclass(frozen=True)
class MwisSolution:
    chosen: tuple[int, ...]
    weight: int

    def is_independent_in(self, g: Graph) -> bool:
        return g.is_independent(self.chosen)


def _as_weights(weights: Sequence[int] | Mapping[int, int], n: int) -> list[int]:
    if isinstance(weights, Mapping):
        return [int(weights[v]) for v in range(n)]
    w = [int(x) for x in weights]
    if len(w) != n:
        raise ValueError(f"need {n} weights, got {len(w)}")
    return w


def _better(a: tuple[int, tuple], b: tuple[int, tuple]) -> tuple[int, tuple]:
    """Higher weight wins; ties go to the lexicographically smaller tuple."""
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    return a if a[1] <= b[1] else b


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# --- memoized bitmask DP ------------------------------------------------------------


def mwis_bitmask(inst: WeightedInstance) -> MwisSolution:
    """Exact MWIS by memoized recursion over vertex bitmasks.

    Always branches on the lowest-index remaining vertex, which makes the
    tie-break fall out of the recursion directly.
    """
    g, w = inst.graph, inst.weights
    if g.n > BITMASK_LIMIT:
        raise SolverLimitError(f"mwis_bitmask is limited to {BITMASK_LIMIT} vertices, got {g.n}")
    nbr = g.adj_masks

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[int, tuple]:
        if not mask:
            return (0, ())
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        wi, ti = best(rest & ~nbr[v])
        take = (w[v] + wi, (v,) + ti)
        if not nbr[v] & rest and w[v] > 0:
            return take
        return _better(take, best(rest))

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10 * g.n + 100))
    try:
        weight, chosen = best((1 << g.n) - 1)
    finally:
        sys.setrecursionlimit(limit)
    return MwisSolution(chosen, weight)


# --- branch and bound ---------------------------------------------------------------


class _BranchAndBound:
    """Max-weight search pivoting on the max-degree candidate.

    Bound: current weight plus the weight of every remaining candidate.
    """

    def __init__(self, g: Graph, w: Sequence[int]):
        self.nbr = g.adj_masks
        self.w = list(w)

    def _mask_weight(self, mask: int) -> int:
        return sum(self.w[v] for v in _bits(mask))

    def max_weight(self, cand: int) -> int:
        self.best = 0
        self._search(cand, 0)
        return self.best

    def _search(self, cand: int, acc: int) -> None:
        nbr, w = self.nbr, self.w
        # vertices with no remaining neighbours are always worth taking
        while True:
            free = [v for v in _bits(cand) if not nbr[v] & cand]
            if not free:
                break
            for v in free:
                acc += w[v]
                cand &= ~(1 << v)
        if acc > self.best:
            self.best = acc
        if not cand or acc + self._mask_weight(cand) <= self.best:
            return
        pivot = max(_bits(cand), key=lambda v: ((nbr[v] & cand).bit_count(), w[v], -v))
        self._search(cand & ~nbr[pivot] & ~(1 << pivot), acc + w[pivot])
        self._search(cand & ~(1 << pivot), acc)


def mwis_branch_bound(inst: WeightedInstance) -> MwisSolution:
    g, w = inst.graph, inst.weights
    bb = _BranchAndBound(g, w)
    everything = (1 << g.n) - 1
    target = bb.max_weight(everything)

    # lexicographically smallest optimum, one vertex at a time
    chosen: list[int] = []
    cand = everything
    remaining = target
    while remaining > 0:
        for u in _bits(cand):
            after = cand & ~g.adj_masks[u] & ~((1 << (u + 1)) - 1)
            if w[u] + bb.max_weight(after) == remaining:
                chosen.append(u)
                remaining -= w[u]
                cand = after
                break
        else:  # pragma: no cover - would mean the optimum was mis-computed
            raise AssertionError("branch-and-bound optimum could not be reconstructed")
    return MwisSolution(tuple(chosen), target)


# --- structural DPs for path and cycle powers ---------------------------------------


def _window_dp(idx: Sequence[int], r: int, w: Sequence[int]) -> tuple[int, tuple]:
    """Best subset of the index run ``idx`` with chosen positions more than ``r`` apart."""
    k = len(idx)
    best: list[tuple[int, tuple]] = [(0, ())] * (k + 1)
    for j in range(k - 1, -1, -1):
        nxt = best[min(k, j + r + 1)]
        take = (w[idx[j]] + nxt[0], (idx[j],) + nxt[1])
        best[j] = _better(take, best[j + 1])
    return best[0]


def mwis_path_power(n: int, r: int, weights: Sequence[int] | Mapping[int, int]) -> MwisSolution:
    """MWIS of P_n^r: chosen indices must be pairwise more than ``r`` apart."""
    if r < 1:
        raise DomainError(f"power must be >= 1, got {r}")
    w = _as_weights(weights, n)
    weight, chosen = _window_dp(range(n), r, w)
    return MwisSolution(chosen, weight)


def mwis_cycle_power(n: int, r: int, weights: Sequence[int] | Mapping[int, int]) -> MwisSolution:
    """MWIS of C_n^r for ``1 <= r < n // 2`` (circular index gap more than ``r``)."""
    if not 1 <= r < n // 2:
        raise DomainError(
            f"cycle-power DP needs 1 <= r < floor(n/2) = {n // 2}, got r={r}; C_{n}^{r} is complete"
        )
    w = _as_weights(weights, n)
    # at most one vertex of the window 0..r is chosen; fixing it leaves a linear run
    best = _window_dp(range(r + 1, n), r, w)
    for f in range(r + 1):
        wi, ti = _window_dp(range(f + r + 1, f + n - r), r, w)
        best = _better((w[f] + wi, (f,) + ti), best)
    weight, chosen = best
    return MwisSolution(chosen, weight)
