#!/usr/bin/env python3
"""Superbridge distribution of random near-equilateral n-gon ensembles.

Small-scale version of the kind of sweep used to hunt for realizations
whose superbridge number sits below the edge-count bound floor(n/2).

Usage: ensemble_stats.py [--edges N] [--samples S] [--seed K] [--radius R]
"""

import argparse
import collections
import random

from superbridge import random_equilateral_polygon, superbridge_number


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--edges", type=int, default=8)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--radius", default="3/2")
    args = ap.parse_args()

    hist = collections.Counter()
    for i in range(args.samples):
        rng = random.Random(f"{args.seed}:{i}")
        p = random_equilateral_polygon(args.edges, args.radius, rng)
        hist[superbridge_number(p).value] += 1

    print(f"n = {args.edges}, {args.samples} samples, seed {args.seed}")
    for value in sorted(hist):
        share = hist[value] / args.samples
        print(f"  sb = {value}: {hist[value]:>6}  ({share:.1%})")
    below = sum(c for v, c in hist.items() if v < args.edges // 2)
    print(f"  below the edge-count bound: {below} ({below / args.samples:.1%})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
