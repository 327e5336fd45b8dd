"""Command-line front end.

Usage:
    iasi-powers gen --family helm --n 3 [--power 2] [--out g.txt]
    iasi-powers power --input g.txt --power 2
    iasi-powers sparing --family cycle --n 7 --power 2 [--format json] [--certificate]
    iasi-powers formula --family path --n 7 --power 2
    iasi-powers label --family cycle --n 4 [--set 0,2] [--out lab.json] [--dot lab.dot]
    iasi-powers verify --family cycle --n 5..15 --power 2 --out reports/cycle2
    iasi-powers verify --suite table --out reports/table

Mismatches between a closed form and the solver are findings, so ``verify``
exits 0 whenever the sweep completes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .families import PARAMS, Family, FamilyError, FamilySpec
from .formulas import evaluate_formula, formula_notes, match_formula
from .graph import EdgeListError, Graph, GraphError, format_edge_list, graph_power, parse_edge_list
from .harness import SUITES, RunManifest, grid_specs, records_csv, run_sweep, write_reports
from .mwis import SolverLimitError
from .sparing import NotIndependentError, SparingResult, construct_certificate, sparing_number, sparing_number_of
from .sumset import WeakIasiCertificate, validate_certificate

ALIASES = {
    "bipartite": Family.COMPLETE_BIPARTITE,
    "sun": Family.COMPLETE_SUN,
    "split": Family.COMPLETE_SPLIT,
}


class UsageError(Exception):
    pass


def parse_family(name: str) -> Family:
    key = name.strip().lower().replace("_", "-")
    if key in ALIASES:
        return ALIASES[key]
    try:
        return Family(key)
    except ValueError:
        choices = ", ".join(f.value for f in Family)
        raise argparse.ArgumentTypeError(f"unknown family {name!r} (choose from {choices})") from None


def parse_range(text: str) -> list[int]:
    """``"5"``, ``"3,5,7"`` or ``"5..15"`` (inclusive)."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None
    return out


def _add_family_args(p: argparse.ArgumentParser, ranges: bool = False) -> None:
    kind = parse_range if ranges else int
    p.add_argument("--family", type=parse_family)
    for flag in ("n", "m", "r", "s", "rows", "cols"):
        p.add_argument(f"--{flag}", type=kind)
    p.add_argument("--power", type=kind, default=[1] if ranges else 1)
    p.add_argument("--seed", type=int, help="reserved for randomized runs; currently unused")


def _spec_from_args(args) -> FamilySpec:
    if args.family is None:
        raise UsageError("give --family with its parameters, or --input")
    values = []
    for name, _ in PARAMS[args.family]:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"{args.family.value} needs --{name}")
        values.append(v)
    try:
        return FamilySpec(args.family, tuple(values), args.power)
    except FamilyError as exc:
        raise UsageError(str(exc)) from None


def _load(args) -> tuple[Graph, FamilySpec | None]:
    if getattr(args, "input", None):
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        g = parse_edge_list(text)
        if args.power != 1:
            g = graph_power(g, args.power)
        return g, None
    spec = _spec_from_args(args)
    return spec.graph(), spec


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def to_dot(cert: WeakIasiCertificate, name: str = "G") -> str:
    """Graphviz rendering: non-singleton vertices filled, mono edges dotted."""
    g, lab = cert.graph, cert.labeling
    lines = [f'graph "{name}" {{']
    for v in range(g.n):
        text = "{" + ",".join(map(str, lab[v].elements)) + "}"
        style = "" if lab[v].is_mono else ", style=filled, fillcolor=lightgrey"
        lines.append(f'  {v} [label="{v}: {text}"{style}];')
    for u, v in g.sorted_edges():
        style = " [style=dotted]" if lab[u].is_mono and lab[v].is_mono else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- subcommands --------------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    _emit(format_edge_list(spec.graph()), args.out)
    return 0


def cmd_power(args) -> int:
    g, _ = _load(args)
    _emit(format_edge_list(g), args.out)
    return 0


def _sparing_payload(g: Graph, res: SparingResult, spec: FamilySpec | None, with_cert: bool) -> dict:
    payload = {
        "family": spec.label if spec else None,
        "vertices": g.n,
        "edges": g.m,
        "value": res.value,
        "witness": list(res.witness_independent_set),
    }
    if with_cert:
        payload["certificate"] = res.certificate.to_dict()
    return payload


def cmd_sparing(args) -> int:
    g, spec = _load(args)
    res = sparing_number_of(spec) if spec else sparing_number(g)
    if args.certificate:
        report = validate_certificate(res.certificate)
        if not report.ok:
            raise RuntimeError("certificate failed re-validation: " + "; ".join(report.failures()))
    payload = _sparing_payload(g, res, spec, args.certificate)
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = []
        if spec:
            lines.append(f"graph: {spec.label}")
        lines += [f"vertices: {g.n}", f"edges: {g.m}", f"value: {res.value}",
                  f"witness: {payload['witness']}"]
        if args.certificate:
            for item in payload["certificate"]["vertices"]:
                lines.append(f"  f({item['id']}) = {item['label']}")
            lines.append(f"mono edges: {payload['certificate']['mono_edges']}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_formula(args) -> int:
    spec = _spec_from_args(args)
    entry = match_formula(spec)
    value = evaluate_formula(spec)
    if args.format == "json":
        doc = {"family": spec.label, "formula": value, "row": entry.name if entry else None,
               "source": entry.source if entry else None}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    elif entry is None:
        _emit(f"{spec.label}: no closed form\n", args.out)
    else:
        notes = formula_notes(spec, spec.graph().m)
        text = f"{spec.label}: {value}  [{entry.name}: {entry.source}]\n"
        text += "".join(f"  note: {n}\n" for n in notes)
        _emit(text, args.out)
    return 0


def cmd_label(args) -> int:
    g, spec = _load(args)
    if args.set in (None, "auto"):
        res = sparing_number_of(spec) if spec else sparing_number(g)
        cert = res.certificate
    else:
        chosen = [int(x) for x in args.set.split(",") if x.strip()] if args.set.strip() else []
        cert = construct_certificate(g, chosen)
    report = validate_certificate(cert)
    if not report.ok:
        raise RuntimeError("labeling failed validation: " + "; ".join(report.failures()))
    if args.format == "dot":
        _emit(to_dot(cert, spec.label if spec else "G"), args.out)
    else:
        _emit(json.dumps(cert.to_dict(), indent=2) + "\n", args.out)
    if args.dot:
        Path(args.dot).write_text(to_dot(cert, spec.label if spec else "G"))
    return 0


def cmd_verify(args) -> int:
    if args.suite:
        specs = []
        for name in args.suite:
            specs += SUITES[name]()
        sweep = {"suite": args.suite}
    else:
        if args.family is None:
            raise UsageError("verify needs --family with ranges, or --suite")
        ranges = {}
        for name, _ in PARAMS[args.family]:
            v = getattr(args, name)
            if v is None:
                raise UsageError(f"{args.family.value} sweep needs --{name}")
            ranges[name] = v
        try:
            specs = grid_specs(args.family, ranges, args.power)
        except FamilyError as exc:
            raise UsageError(str(exc)) from None
        sweep = {"family": args.family.value, **ranges, "power": args.power}
    records = run_sweep(specs, jobs=args.jobs)
    manifest = RunManifest.build(sweep, records)
    if args.out:
        json_path, csv_path = write_reports(manifest, args.out)
        print(f"wrote {json_path} and {csv_path}")
    elif args.format == "json":
        sys.stdout.write(json.dumps(manifest.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(records_csv(records))
    print(manifest.summary())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iasi-powers", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family member (or its power) as an edge list")
    _add_family_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("power", help="r-th power of an edge-list graph or family member")
    _add_family_args(p)
    p.add_argument("--input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("sparing", help="exact sparing number with witness")
    _add_family_args(p)
    p.add_argument("--input")
    p.add_argument("--out")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(func=cmd_sparing)

    p = sub.add_parser("formula", help="closed-form value for a family and power")
    _add_family_args(p)
    p.add_argument("--out")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("label", help="explicit weak IASI labeling")
    _add_family_args(p)
    p.add_argument("--input")
    p.add_argument("--set", help="comma-separated independent set, or 'auto' (default)")
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--dot", help="also write a DOT rendering here")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="formula-vs-solver sweep with JSON and CSV reports")
    _add_family_args(p, ranges=True)
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    p.add_argument("--out", help="report stem; writes <stem>.json and <stem>.csv")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FamilyError) as exc:
        parser.error(str(exc))
    except EdgeListError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 2
    except (GraphError, NotIndependentError, SolverLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
