"""Cross-check the MWIS reduction against brute-force labeling search.

Enumerates every connected labeled graph on at most ``--max-n`` vertices and
compares the exhaustive minimum mono-edge count (labels drawn from subsets of
{0..universe} of size at most ``--max-card``) with the reduction's value.
"""

import argparse
import time
from itertools import combinations

from iasi_powers import Graph, exhaustive_min_mono, sparing_number


def connected_graphs(max_n: int):
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            if g.is_connected():
                yield g


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--universe", type=int, default=9)
    ap.add_argument("--max-card", type=int, default=2)
    args = ap.parse_args()

    start = time.perf_counter()
    total, bad = 0, []
    for g in connected_graphs(args.max_n):
        total += 1
        brute = exhaustive_min_mono(g, args.universe, args.max_card)
        fast = sparing_number(g).value
        if brute != fast:
            bad.append((g.n, g.sorted_edges(), brute, fast))
    print(f"{total} graphs, {len(bad)} disagreements, {time.perf_counter() - start:.1f}s")
    for n, edges, brute, fast in bad[:10]:
        print(f"  n={n} edges={edges}: exhaustive {brute}, reduction {fast}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
