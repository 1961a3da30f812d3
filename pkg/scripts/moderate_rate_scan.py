#!/usr/bin/env python3
"""Scan (n+1)^2/N log P_N(max < n) against -pi^2.

Two paths through the (N, n) plane are compared: n held fixed while N grows,
where the prelimit settles at 2 (n+1)^2 log cos(pi/(n+1)), and N = n^4 with n
growing, where it does reach -pi^2.
"""

import argparse
import math

from dyckmax.deviations import md_fixed_n_limit, md_rate_prelimit


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10)
    args = ap.parse_args()

    print(f"fixed n = {args.n}: limit {md_fixed_n_limit(args.n):.6f}, -pi^2 = {-math.pi ** 2:.6f}")
    print(f"{'N':>12} {'prelimit':>12} {'gap to -pi^2':>14}")
    for e in range(3, 10):
        d = md_rate_prelimit(10 ** e, args.n)
        print(f"{10 ** e:>12} {d.prelimit:>12.6f} {d.gap:>14.6f}")

    print("\nN = n^4:")
    print(f"{'n':>6} {'N':>14} {'prelimit':>12} {'gap to -pi^2':>14}")
    for n in (5, 10, 20, 40, 80, 160, 320):
        d = md_rate_prelimit(n ** 4, n)
        print(f"{n:>6} {n ** 4:>14} {d.prelimit:>12.6f} {d.gap:>14.6f}")


if __name__ == "__main__":
    main()
