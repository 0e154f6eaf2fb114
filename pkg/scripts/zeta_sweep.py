#!/usr/bin/env python3
"""Sweep trace partial sums of the Dirac operator across exponents.

For a fixed summability parameter s, prints the per-level partial sums of
sum(eigenvalue^-t) for a grid of exponents t.  At t = s the sums converge
(the per-index term is the exact rational 1/((n+1)^2 p^(n+1))); below s
the per-level increments grow geometrically with ratio tending to
p^(1 - t/s) and the sums blow up.

Usage:
  python scripts/zeta_sweep.py --p 2 --s 1.0 --levels 30
  python scripts/zeta_sweep.py --p 3 --s 1.0 --t-grid 0.5,0.75,1.0,1.25
"""

import argparse
import math
import sys

from padic_harmonics import DiracOperator, is_prime


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--s", type=float, default=1.0)
    ap.add_argument("--levels", type=int, default=30)
    ap.add_argument("--t-grid", type=str, default="0.5,0.75,1.0,1.5,2.0")
    args = ap.parse_args()
    if not is_prime(args.p):
        print(f"error: --p must be prime, got {args.p}", file=sys.stderr)
        return 2

    ts = [float(x) for x in args.t_grid.split(",")]
    d = DiracOperator(args.p, args.s)
    reports = {t: d.trace(args.levels, t=t) for t in ts}

    header = "level," + ",".join(f"partial(t={t:g})" for t in ts)
    print(header)
    for n in range(args.levels + 1):
        row = [str(n)]
        for t in ts:
            row.append(repr(float(reports[t].rows[n].partial_sum)))
        print(",".join(row))

    print()
    print(f"# s = {args.s}: the t = s column tends to "
          f"{1/args.p + (1 - 1/args.p)/args.p * (math.pi**2/6 - 1):.9f}")
    for t in ts:
        if t < args.s:
            rows = reports[t].rows
            ratio = float(rows[-1].increment) / float(rows[-2].increment)
            print(f"# t = {t:g} < s: increment ratio at level {args.levels} is "
                  f"{ratio:.4f} -> p^(1-t/s) = {args.p ** (1 - t/args.s):.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
