#!/usr/bin/env python3
"""Empirically probe the open strictness configuration.

The kernel f(w) = C + D/w at the critical exponent r = order with no measure
atoms has no known strictness verdict either way.  This script samples point
configurations and records the minimum Gram eigenvalue as evidence; it
deliberately draws no conclusion.

Usage:
    python scripts/probe_open_case.py --trials 50 --n 30 --seed 0
"""

import argparse
import sys

from gneiting_kernels import fixtures
from gneiting_kernels.models import spd_report
from gneiting_kernels.validation import certify


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--n", type=int, default=30)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    model = fixtures.open_case_model()
    report = spd_report(model)
    print("model:   %s" % model.describe())
    print("verdict: %s (probing only; no strictness claim is made)" % report.verdict)

    reports = certify(
        model, n=args.n, trials=args.trials, seed=args.seed, mode="spd", min_sep=0.05
    )
    ratios = sorted(rep.min_eig / rep.scale for rep in reports)
    print("trials:  %d, n = %d" % (args.trials, args.n))
    print("min eig / scale: smallest %.6e, median %.6e, largest %.6e"
          % (ratios[0], ratios[len(ratios) // 2], ratios[-1]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
