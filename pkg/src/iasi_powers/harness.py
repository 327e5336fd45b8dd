"""Formula-versus-solver audit sweeps and their report files."""

from __future__ import annotations

import csv
import enum
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from itertools import product
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import __version__
from .families import PARAMS, Family, FamilySpec
from .formulas import evaluate_formula, formula_notes
from .sparing import sparing_number_of

CSV_HEADER = ["family", "params", "power", "vertices", "edges", "formula", "oracle", "delta", "status"]


class Status(str, enum.Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    NO_FORMULA = "NoFormula"


@dataclass
class VerificationRecord:
    family: str
    params: list[int]
    power: int
    vertices: int
    edges: int
    formula_value: Optional[int]
    oracle_value: int
    delta: Optional[int]
    status: Status
    witness: list[int] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status.value
        return d

    def csv_row(self) -> list[str]:
        return [
            self.family,
            ";".join(map(str, self.params)),
            str(self.power),
            str(self.vertices),
            str(self.edges),
            "" if self.formula_value is None else str(self.formula_value),
            str(self.oracle_value),
            "" if self.delta is None else str(self.delta),
            self.status.value,
        ]


def verify_instance(spec: FamilySpec) -> VerificationRecord:
    result = sparing_number_of(spec)
    g = result.certificate.graph
    formula = evaluate_formula(spec)
    if formula is None:
        delta, status = None, Status.NO_FORMULA
    else:
        delta = formula - result.value
        status = Status.MATCH if delta == 0 else Status.MISMATCH
    return VerificationRecord(
        family=spec.family.value,
        params=list(spec.params),
        power=spec.power,
        vertices=g.n,
        edges=g.m,
        formula_value=formula,
        oracle_value=result.value,
        delta=delta,
        status=status,
        witness=list(result.witness_independent_set),
        notes=formula_notes(spec, g.m),
    )


def run_sweep(specs: Sequence[FamilySpec], jobs: int = 1) -> list[VerificationRecord]:
    """One record per spec, in input order regardless of ``jobs``."""
    if jobs <= 1:
        return [verify_instance(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_instance, specs, chunksize=4))


def grid_specs(family: Family | str, ranges: dict[str, Sequence[int]], powers: Sequence[int]) -> list[FamilySpec]:
    """Cartesian sweep over a family's parameters (in declaration order), then powers."""
    fam = Family(family)
    names = [name for name, _ in PARAMS[fam]]
    missing = [n for n in names if n not in ranges]
    if missing:
        raise ValueError(f"{fam.value} sweep needs ranges for {', '.join(missing)}")
    out = []
    for params in product(*(ranges[n] for n in names)):
        for r in powers:
            out.append(FamilySpec(fam, tuple(params), r))
    return out


def table_suite() -> list[FamilySpec]:
    """Every family/power the formula table covers, at desk-scale sizes."""
    S = FamilySpec.of
    specs: list[FamilySpec] = []
    specs += [S("complete", n, power=r) for n in range(3, 11) for r in (1, 2, 3)]
    specs += [S("cycle", n) for n in range(3, 13)]
    specs += [S("cycle", n, power=2) for n in range(3, 16)]
    specs += [S("cycle", n, power=r) for n in range(5, 17) for r in range(3, n // 2)]
    specs += [S("path", n, power=2) for n in range(3, 13)]
    specs += [S("path", n, power=3) for n in range(3, 13)]
    specs += [S("complete-bipartite", m, n, power=r) for m in range(1, 7) for n in range(1, 7) for r in (2, 3)]
    specs += [S("wheel", n, power=2) for n in range(3, 11)]
    specs += [S("helm", n, power=2) for n in range(3, 12)]
    specs += [S("helm", n, power=r) for n in range(3, 9) for r in (3, 4)]
    specs += [S("complete-sun", n, power=2) for n in range(3, 9)]
    specs += [S("complete-split", r, s, power=k) for r in range(1, 6) for s in range(1, 6) for k in (2, 3)]
    return specs


def open_problem_suite() -> list[FamilySpec]:
    """Families with no closed form: solver values only."""
    specs = grid_specs("ladder", {"n": range(2, 7)}, (2, 3))
    specs += grid_specs("grid", {"rows": range(2, 4), "cols": range(2, 5)}, (2, 3))
    specs += grid_specs("prism", {"n": range(3, 7)}, (2, 3))
    return specs


SUITES = {"table": table_suite, "open": open_problem_suite}


@dataclass
class RunManifest:
    tool_version: str
    sweep: dict
    timestamp: str
    records: list[VerificationRecord]

    @classmethod
    def build(cls, sweep: dict, records: list[VerificationRecord]) -> "RunManifest":
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return cls(__version__, sweep, stamp, records)

    def counts(self) -> dict[str, int]:
        out = {s.value: 0 for s in Status}
        for rec in self.records:
            out[rec.status.value] += 1
        return out

    def summary(self) -> str:
        c = self.counts()
        return (
            f"{len(self.records)} records: Match={c['Match']} "
            f"Mismatch={c['Mismatch']} NoFormula={c['NoFormula']}"
        )

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "sweep": self.sweep,
            "timestamp": self.timestamp,
            "summary": self.counts(),
            "records": [r.to_dict() for r in self.records],
        }


def records_csv(records: Iterable[VerificationRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def write_reports(manifest: RunManifest, out: str | Path) -> tuple[Path, Path]:
    """Write ``<stem>.json`` and ``<stem>.csv`` next to ``out``."""
    out = Path(out)
    stem = out.with_suffix("") if out.suffix in (".json", ".csv") else out
    stem.parent.mkdir(parents=True, exist_ok=True)
    json_path = stem.with_name(stem.name + ".json")
    csv_path = stem.with_name(stem.name + ".csv")
    json_path.write_text(json.dumps(manifest.to_dict(), indent=2) + "\n")
    csv_path.write_text(records_csv(manifest.records))
    return json_path, csv_path
