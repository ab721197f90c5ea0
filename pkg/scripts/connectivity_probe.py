#!/usr/bin/env python3
"""Sharpness of the j-connectivity threshold: sample both sides.

Usage: python scripts/connectivity_probe.py [--k 3 --j 2 --n 100] [--omega 3] [--trials 100]
"""

import argparse

from hyperphase import ExperimentConfig, Params, run_connectivity_probe
from hyperphase.analysis import RegimeParams, thresholds


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--j", type=int, default=2)
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--omega", type=float, default=3.0)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    params = Params(args.k, args.j, args.n)
    cfg = ExperimentConfig(params=params, trials=args.trials, base_seed=args.seed,
                           regime=RegimeParams(omega=args.omega))
    res = run_connectivity_probe(cfg)

    print(f"p_c = {thresholds(params).p_c:.6f} (omega = {args.omega}, {args.trials} trials/side)")
    for side in (res.below, res.above):
        print(f"{side.label:>5} (p={side.p:.6f}): P(j-connected) = {side.fraction_connected:.2f}, "
              f"P(isolated j-set) = {side.fraction_isolated:.2f}")


if __name__ == "__main__":
    main()
