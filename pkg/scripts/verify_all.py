#!/usr/bin/env python3
"""Run every registered property suite over an exhaustive small-graph
universe and report the results.

Examples:
    python scripts/verify_all.py --max-edges 3
    python scripts/verify_all.py --max-edges 2 --json --workers 4
"""

import argparse
import json
import sys
from pathlib import Path

try:
    from ribbonlab import enumerate_graphs, run_all_properties
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    from ribbonlab import enumerate_graphs, run_all_properties


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-edges", type=int, default=3)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    universe = enumerate_graphs(args.max_edges)
    reports = run_all_properties(universe, workers=args.workers)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
        total = sum(r.checked for r in reports)
        bad = sum(len(r.failures) for r in reports)
        print(f"-- {len(reports)} properties, {total} instances, {bad} failures")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
