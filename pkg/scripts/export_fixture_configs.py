#!/usr/bin/env python3
"""Regenerate the CLI config files under configs/ from the fixture registry.

Usage:
    python scripts/export_fixture_configs.py [--dir configs]
"""

import argparse
import json
import os
import sys

from gneiting_kernels import fixtures
from gneiting_kernels.specio import model_to_spec


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dir", default="configs")
    args = parser.parse_args()
    os.makedirs(args.dir, exist_ok=True)

    spd = fixtures.spd_guaranteed_models()
    violated = fixtures.violated_models()

    configs = {
        "family1_gr_eval.json": {
            "model": model_to_spec(fixtures.pd_certification_models()["f1-Gr-unbounded-critical"]),
            "grid": {
                "axes": [
                    {"start": 0.0, "stop": 3.141592653589793, "count": 11},
                    {"start": 0.0, "stop": 1.5707963267948966, "count": 11},
                    {"start": 0.0, "stop": 4.0, "count": 11},
                ]
            },
        },
        "family1_gr_certify_spd.json": {
            "model": model_to_spec(spd["f1-s1.5-Gr-unbounded-supercritical"]),
            "n": 30,
            "trials": 100,
            "mode": "spd",
            "min_sep": 0.05,
        },
        "family2_gr_certify_spd.json": {
            "model": model_to_spec(spd["f2-Gr-unbounded-supercritical"]),
            "n": 30,
            "trials": 100,
            "mode": "spd",
            "min_sep": 0.05,
        },
        "violated_h_certify_embedded.json": {
            "model": model_to_spec(violated["h-ignores-third-slot"][0]),
            "n": 30,
            "trials": 10,
            "mode": "spd",
            "embed_clause": violated["h-ignores-third-slot"][1],
        },
        "violated_h_counterexample.json": {
            "model": model_to_spec(violated["h-ignores-third-slot"][0]),
            "clause": violated["h-ignores-third-slot"][1],
        },
        "open_case_report.json": {
            "model": model_to_spec(fixtures.open_case_model()),
        },
    }
    for name, payload in configs.items():
        path = os.path.join(args.dir, name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print("wrote %s" % path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
