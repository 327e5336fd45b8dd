"""Run the formula-table sweep and the open-family sweep, writing JSON+CSV reports.

    python3 scripts/run_sweeps.py --out reports --jobs 4
"""

import argparse
import time
from pathlib import Path

from iasi_powers.harness import SUITES, RunManifest, run_sweep, write_reports


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--suite", action="append", choices=sorted(SUITES))
    args = ap.parse_args()

    for name in args.suite or sorted(SUITES):
        start = time.perf_counter()
        records = run_sweep(SUITES[name](), jobs=args.jobs)
        manifest = RunManifest.build({"suite": [name]}, records)
        json_path, csv_path = write_reports(manifest, args.out / name)
        print(f"{name}: {manifest.summary()} in {time.perf_counter() - start:.1f}s -> {json_path}, {csv_path}")
        for rec in records:
            if rec.status.value == "Mismatch":
                params = ",".join(map(str, rec.params))
                print(f"  {rec.family}({params})^{rec.power}: formula {rec.formula_value}, "
                      f"solver {rec.oracle_value}, delta {rec.delta}")


if __name__ == "__main__":
    main()
