#!/usr/bin/env python3
"""Count isomorphism classes of ribbon graphs by edge count, with and
without deduplication, and time the enumeration."""

import argparse
import sys
import time
from pathlib import Path

try:
    from ribbonlab import enumerate_graphs
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    from ribbonlab import enumerate_graphs


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-edges", type=int, default=4)
    parser.add_argument("--raw", action="store_true", help="also count raw rotation systems")
    args = parser.parse_args()

    start = time.perf_counter()
    counts: dict[int, int] = {}
    for g in enumerate_graphs(args.max_edges):
        counts[len(g.edges)] = counts.get(len(g.edges), 0) + 1
    elapsed = time.perf_counter() - start
    print("isomorphism classes:")
    for k in sorted(counts):
        print(f"  {k} edges: {counts[k]}")
    print(f"  total: {sum(counts.values())}  ({elapsed:.1f}s)")

    if args.raw:
        raw: dict[int, int] = {}
        for g in enumerate_graphs(args.max_edges, dedup=False):
            raw[len(g.edges)] = raw.get(len(g.edges), 0) + 1
        print("raw signed rotation systems:")
        for k in sorted(raw):
            print(f"  {k} edges: {raw[k]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
