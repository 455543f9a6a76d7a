#!/usr/bin/env python3
"""Measure how the near-linear driver scales on doubling instance sizes.

Generates connected m = 2n graphs, times the decomposition-merge driver
(best of --repeats runs per size) and prints the per-doubling growth
factors. Optionally writes a CSV and times the linear driver on one large
subcubic instance.

Usage:
    python scripts/bench_scaling.py --sizes 100000 200000 400000 800000
    python scripts/bench_scaling.py --subcubic-n 1000000 --csv scaling.csv
"""

import argparse
import csv
import random
import sys
import time

from sparsecut import gnm_connected, random_subcubic, thm1_approx, thm3_approx


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+",
                    default=[100_000, 200_000, 400_000, 800_000])
    ap.add_argument("--repeats", type=int, default=2)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--subcubic-n", type=int, default=1_000_000)
    ap.add_argument("--csv", default=None)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rows = []
    times = []
    for n in args.sizes:
        g = gnm_connected(n, 2 * n, rng)
        best = min(_time_once(thm1_approx, g) for _ in range(args.repeats))
        times.append(best)
        rows.append({"algo": "thm1", "n": n, "m": g.m, "seconds": f"{best:.4f}"})
        print(f"thm1  n={n:>9}  m={g.m:>9}  {best:8.3f}s")
    for a, b, n in zip(times, times[1:], args.sizes[1:]):
        print(f"      growth into n={n}: {b / a:.2f}x per doubling")

    if args.subcubic_n:
        g = random_subcubic(args.subcubic_n, rng)
        t = _time_once(thm3_approx, g)
        rows.append({"algo": "thm3", "n": g.n, "m": g.m, "seconds": f"{t:.4f}"})
        print(f"thm3  n={g.n:>9}  m={g.m:>9}  {t:8.3f}s  (subcubic)")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["algo", "n", "m", "seconds"])
            w.writeheader()
            w.writerows(rows)
        print(f"wrote {args.csv}")
    return 0


def _time_once(fn, g) -> float:
    t0 = time.perf_counter()
    fn(g)
    return time.perf_counter() - t0


if __name__ == "__main__":
    sys.exit(main())
