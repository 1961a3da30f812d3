#!/usr/bin/env python3
"""Tabulate f(x), K(x) and the exact finite-N law P_N(max < ceil(x sqrt(2N))).

Writes plot-ready CSV to stdout:

    python scripts/limit_law_table.py --N 500,2000,5000 > limit_law.csv
"""

import argparse
import csv
import sys

from dyckmax.asymptotics import f_of_x, k_of_x, scaled_height_cap
from dyckmax.exact_counts import catalan, count_bounded


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", default="500,2000,5000")
    ap.add_argument("--xmin", type=float, default=0.3)
    ap.add_argument("--xmax", type=float, default=2.4)
    ap.add_argument("--steps", type=int, default=22)
    args = ap.parse_args()

    Ns = [int(v) for v in args.N.split(",")]
    xs = [args.xmin + (args.xmax - args.xmin) * k / (args.steps - 1) for k in range(args.steps)]
    cats = {N: catalan(N) for N in Ns}
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["x", "f", "K"] + [f"exact_N{N}" for N in Ns])
    for x in xs:
        exact = [count_bounded(N, scaled_height_cap(N, x)) / cats[N] for N in Ns]
        w.writerow([repr(x), repr(f_of_x(x).value), repr(k_of_x(x).value)]
                   + [repr(v) for v in exact])


if __name__ == "__main__":
    main()
