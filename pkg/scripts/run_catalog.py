#!/usr/bin/env python3
"""Replay every pinned catalog expectation and print a pass/fail table.

Usage: python scripts/run_catalog.py [--depth D] [--max-iter N]
"""

import argparse
import sys
from fractions import Fraction

from morsetwist.catalog import run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=Fraction, default=Fraction(16))
    ap.add_argument("--max-iter", type=int, default=10000)
    args = ap.parse_args()

    results = run_all(depth=args.depth, max_iter=args.max_iter)
    failures = 0
    for r in results:
        mark = "ok  " if r.ok else "FAIL"
        detail = f"  <- {r.detail}" if r.detail else ""
        print(f"{mark} [{r.entry:18s}] {r.provenance}{detail}")
        failures += 0 if r.ok else 1
    print(f"\n{len(results) - failures}/{len(results)} expectations reproduced")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
