#!/usr/bin/env python3
"""Phase sweep: largest-component fraction across the giant threshold.

Writes one CSV row per (eps, trial) and prints per-point aggregates.

Usage: python scripts/phase_sweep.py [--n 150] [--trials 50] [--seed 1] [--out sweep.csv]
"""

import argparse
from pathlib import Path

from hyperphase import ExperimentConfig, Params, ResultTable, run_phase_sweep, write_csv

EPS_GRID = (-0.4, -0.3, -0.2, -0.1, 0.1, 0.2, 0.3, 0.4, 0.6)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--j", type=int, default=2)
    ap.add_argument("--n", type=int, default=150)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("sweep.csv"))
    args = ap.parse_args()

    params = Params(args.k, args.j, args.n)
    cfg = ExperimentConfig(params=params, trials=args.trials, base_seed=args.seed,
                           eps_grid=EPS_GRID)
    points = run_phase_sweep(cfg)

    total = params.num_jsets
    table = ResultTable(["eps", "p", "trial", "seed", "largest", "second",
                         "largest_fraction", "predicted_fraction"])
    for pt in points:
        for row in pt.trials:
            table.add_row(pt.eps, pt.p, row.trial, row.seed, row.largest, row.second,
                          row.largest / total, pt.predicted_fraction)
    args.out.write_text(write_csv(table), encoding="utf-8")

    print(f"k={args.k} j={args.j} n={args.n}, {args.trials} trials per point")
    print(f"{'eps':>6}  {'mean |L1|/C(n,j)':>17}  {'std':>7}  {'predicted':>9}")
    for pt in points:
        predicted = "-" if pt.predicted_fraction is None else f"{pt.predicted_fraction:.4f}"
        print(f"{pt.eps:>+6.2f}  {pt.largest_fraction.mean:>17.4f}  "
              f"{pt.largest_fraction.stddev:>7.4f}  {predicted:>9}")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
