#!/usr/bin/env python3
"""Run the exhaustive cross-validation sweep and print one line per check.

The family is every pleasant connected multigraph up to isomorphism
within the bounds (loops and parallel edges included).  Exit status 0
iff every check passes.
"""

import argparse
import sys
import time

from chipfire.selfcheck import run_selfcheck


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-vertices", type=int, default=4)
    parser.add_argument("--max-edges", type=int, default=5)
    parser.add_argument("--max-weight", type=int, default=3)
    args = parser.parse_args()

    t0 = time.perf_counter()
    ok = run_selfcheck(seed=args.seed, max_vertices=args.max_vertices,
                       max_edges=args.max_edges, max_weight=args.max_weight)
    print(f"total time: {time.perf_counter() - t0:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
