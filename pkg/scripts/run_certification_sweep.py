#!/usr/bin/env python3
"""Sweep every fixture model through PSD and SPD certification.

Writes one JSON line per trial to --output (default: sweep_reports.jsonl in
the working directory) and prints a per-model summary table.

Usage:
    python scripts/run_certification_sweep.py --trials 25 --n 30 --seed 0
"""

import argparse
import json
import sys

from gneiting_kernels import fixtures
from gneiting_kernels.models import spd_report
from gneiting_kernels.validation import certify, worst_report


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--n", type=int, default=30)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--output", default="sweep_reports.jsonl")
    args = parser.parse_args()

    registry = {}
    registry.update(fixtures.pd_certification_models())
    registry.update(fixtures.spd_guaranteed_models())
    registry["open-case"] = fixtures.open_case_model()

    rows = []
    with open(args.output, "w", encoding="utf-8") as fh:
        for name, model in sorted(registry.items()):
            verdict = spd_report(model).verdict
            modes = ["psd"] if verdict != "SPD_guaranteed" else ["psd", "spd"]
            for mode in modes:
                reports = certify(
                    model, n=args.n, trials=args.trials, seed=args.seed, mode=mode
                )
                for rep in reports:
                    fh.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")
                worst = worst_report(reports)
                rows.append(
                    (
                        name,
                        verdict,
                        mode,
                        worst.min_eig / worst.scale,
                        all(r.passed for r in reports),
                    )
                )

    width = max(len(r[0]) for r in rows)
    print("%-*s  %-28s %-4s %-14s %s" % (width, "model", "report", "mode", "worst eig/scale", "pass"))
    failures = 0
    for name, verdict, mode, ratio, passed in rows:
        failures += 0 if passed else 1
        print("%-*s  %-28s %-4s %14.3e %s" % (width, name, verdict, mode, ratio, passed))
    print("wrote %s" % args.output)
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
