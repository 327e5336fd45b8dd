"""Closed-form sparing numbers claimed for graph families and their powers.

These are hypotheses under audit, not ground truth: :mod:`iasi_powers.harness`
compares every value here against the exact solver.  Paths are indexed by
vertex count ``n``; residues use ``i = n mod (r + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .families import Family, FamilySpec


class FormulaConsistencyError(ArithmeticError):
    """A closed form produced a non-integer; the table entry is mis-transcribed."""


def _exact(num: int, den: int, row: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise FormulaConsistencyError(f"{row}: {num}/{den} is not an integer")
    return q


def _complete(k: int) -> int:
    return _exact((k - 1) * (k - 2), 2, "complete")


@dataclass(frozen=True)
class FormulaEntry:
    name: str
    families: tuple[Family, ...]
    domain_guard: Callable[[tuple[int, ...], int], bool]
    closed_form: Callable[[tuple[int, ...], int], int]
    source: str

    def applies(self, spec: FamilySpec) -> bool:
        return spec.family in self.families and self.domain_guard(spec.params, spec.power)

    def evaluate(self, spec: FamilySpec) -> Optional[int]:
        if not self.applies(spec):
            return None
        return self.closed_form(spec.params, spec.power)


def _path_square(p, r):
    n = p[0]
    num = {0: 2 * n - 3, 1: 2 * n - 2, 2: 2 * n - 1}[n % 3]
    return _exact(num, 3, "path-square")


def _path_power(p, r):
    n = p[0]
    i = n % (r + 1)
    return _exact((r - 1) * (r * (2 * n - 1 - r) + 2 * i), 2 * (r + 1), "path-power")


def _cycle_square(p, r):
    n = p[0]
    num = {0: 2 * n, 1: 2 * (n + 2), 2: 2 * (n + 4)}[n % 3]
    return _exact(num, 3, "cycle-square")


def _cycle_power(p, r):
    n = p[0]
    i = n % (r + 1)
    return _exact(r * ((r - 1) * n + 2 * i), r + 1, "cycle-power")


def _sun_square(p, r):
    n = p[0]
    return n * n + 1 if n % 2 else _exact(n * (2 * n - 1), 2, "sun-square")


# First matching entry wins, so order matters where guards overlap.
FORMULAS: list[FormulaEntry] = [
    FormulaEntry(
        "cycle", (Family.CYCLE,),
        lambda p, r: r == 1,
        lambda p, r: p[0] % 2,
        "sparing number of a cycle: 1 if odd, 0 if even",
    ),
    FormulaEntry(
        "complete", (Family.COMPLETE,),
        lambda p, r: True,
        lambda p, r: _complete(p[0]),
        "K_n^r = K_n, phi(K_n) = (n-1)(n-2)/2",
    ),
    FormulaEntry(
        "path-square", (Family.PATH,),
        lambda p, r: r == 2 and p[0] >= 3,
        _path_square,
        "phi(P_n^2) = (2n-3)/3, (2n-2)/3, (2n-1)/3 for n = 0, 1, 2 mod 3",
    ),
    FormulaEntry(
        "path-power", (Family.PATH,),
        lambda p, r: 3 <= r < p[0] - 1,
        _path_power,
        "phi(P_n^r) = (r-1)/(2(r+1)) [r(2n-1-r) + 2i], i = n mod (r+1)",
    ),
    FormulaEntry(
        "path-saturated", (Family.PATH,),
        lambda p, r: r >= 2 and r >= p[0] - 1,
        lambda p, r: _complete(p[0]),
        "P_n^r is complete once r >= diam = n-1",
    ),
    FormulaEntry(
        "cycle-square", (Family.CYCLE,),
        lambda p, r: r == 2 and p[0] >= 6,
        _cycle_square,
        "phi(C_n^2) = 2n/3, 2(n+2)/3, 2(n+4)/3 for n = 0, 1, 2 mod 3",
    ),
    FormulaEntry(
        "cycle-power", (Family.CYCLE,),
        lambda p, r: 3 <= r < p[0] // 2,
        _cycle_power,
        "phi(C_n^r) = r/(r+1) ((r-1)n + 2i), i = n mod (r+1), r < floor(n/2)",
    ),
    FormulaEntry(
        "cycle-saturated", (Family.CYCLE,),
        lambda p, r: r >= 2 and r >= p[0] // 2,
        lambda p, r: _complete(p[0]),
        "C_n^r is complete once r >= diam = floor(n/2)",
    ),
    FormulaEntry(
        "bipartite", (Family.PATH, Family.COMPLETE_BIPARTITE, Family.LADDER, Family.GRID),
        lambda p, r: r == 1,
        lambda p, r: 0,
        "sparing number of a bipartite graph is 0",
    ),
    FormulaEntry(
        "bipartite", (Family.PRISM,),
        lambda p, r: r == 1 and p[0] % 2 == 0,
        lambda p, r: 0,
        "sparing number of a bipartite graph is 0 (even prism)",
    ),
    FormulaEntry(
        "balanced-bipartite-square", (Family.COMPLETE_BIPARTITE,),
        lambda p, r: r == 2 and p[0] == p[1],
        lambda p, r: (p[0] - 1) * (2 * p[0] - 1),
        "phi(K_{n,n}^2) = (n-1)(2n-1)",
    ),
    FormulaEntry(
        "complete-bipartite-square", (Family.COMPLETE_BIPARTITE,),
        lambda p, r: r == 2,
        lambda p, r: _complete(p[0] + p[1]),
        "phi(K_{m,n}^2) = (m+n-1)(m+n-2)/2 (derived value)",
    ),
    FormulaEntry(
        "complete-bipartite-power", (Family.COMPLETE_BIPARTITE,),
        lambda p, r: r >= 3,
        lambda p, r: _complete(p[0] + p[1]),
        "phi(K_{m,n}^r) = (m+n-1)(m+n-2)/2 for r >= 2",
    ),
    FormulaEntry(
        "wheel-square", (Family.WHEEL,),
        lambda p, r: r >= 2,
        lambda p, r: _exact(p[0] * (p[0] - 1), 2, "wheel-square"),
        "phi(W_{n+1}^2) = n(n-1)/2; higher powers equal the square (diameter 2)",
    ),
    FormulaEntry(
        "helm-square", (Family.HELM,),
        lambda p, r: r == 2,
        lambda p, r: _exact(p[0] * (p[0] + 1), 2, "helm-square"),
        "phi(H_n^2) = n(n+1)/2",
    ),
    FormulaEntry(
        "helm-cube", (Family.HELM,),
        lambda p, r: r == 3,
        lambda p, r: (p[0] // 2) * (p[0] + 3),
        "phi(H_n^3) = floor(n/2)(n+3)",
    ),
    FormulaEntry(
        "helm-power", (Family.HELM,),
        lambda p, r: r >= 4,
        lambda p, r: p[0] * (2 * p[0] - 1),
        "phi(H_n^r) = n(2n-1) for r >= 4",
    ),
    FormulaEntry(
        "sun-square", (Family.COMPLETE_SUN,),
        lambda p, r: r == 2,
        _sun_square,
        "phi(S_n^2) = n^2+1 (n odd), n(2n-1)/2 (n even), complete sun",
    ),
    FormulaEntry(
        "split-square", (Family.COMPLETE_SPLIT,),
        lambda p, r: r == 2,
        lambda p, r: _complete(p[0] + p[1]),
        "phi(K_S(r,s)^2) = (r+s-1)(r+s-2)/2",
    ),
    FormulaEntry(
        "split-power", (Family.COMPLETE_SPLIT,),
        lambda p, r: r >= 3,
        lambda p, r: _complete(p[0] + p[1]),
        "phi(G^k) = (r+s-1)(r+s-2)/2 for a split graph and k >= 3",
    ),
]


def match_formula(spec: FamilySpec) -> Optional[FormulaEntry]:
    for entry in FORMULAS:
        if entry.applies(spec):
            return entry
    return None


def evaluate_formula(spec: FamilySpec) -> Optional[int]:
    """Closed-form sparing number for ``spec``, or ``None`` when none is known."""
    entry = match_formula(spec)
    if entry is None:
        return None
    return entry.closed_form(spec.params, spec.power)


def formula_notes(spec: FamilySpec, edge_count: int) -> list[str]:
    """Alternative readings worth printing next to a formula value."""
    notes = []
    entry = match_formula(spec)
    if entry is None:
        return notes
    if entry.name in ("complete-bipartite-square", "balanced-bipartite-square"):
        k = spec.params[0] + spec.params[1]
        stated = Fraction((k - 1) * (k - 1), 2)
        notes.append(
            f"variant reading (m+n-1)(m+n-1)/2 = {stated} not used (suspected typo)"
        )
    if entry.name == "helm-cube":
        value = evaluate_formula(spec)
        notes.append(
            f"formula counts non-mono edges; |E| - formula = {edge_count - value}"  # type: ignore[operator]
        )
    return notes
