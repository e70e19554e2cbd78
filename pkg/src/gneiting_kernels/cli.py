"""Command-line front end.

Subcommands: ``eval``, ``gram``, ``certify``, ``report``, ``counterexample``,
``suite``.  Structured input is JSON (``--config``), matrices and grids are
emitted as CSV, reports as JSON lines.  All randomness flows from the
configured seed, so identical configurations produce byte-identical output.

Exit codes: 0 success, 1 certification/suite failure, 2 configuration error,
3 domain error, 4 runtime or trial error.
"""

import argparse
import itertools
import json
import sys

from . import acceptance
from .errors import ConvergenceError, DomainError, ParameterError, SamplingError
from .models import counterexample_2x2, spd_report
from .spaces import points_to_csv, sample_distinct
from .specio import model_to_spec, parse_grid, parse_model
from .validation import certify, gram, worst_report

EXIT_OK = 0
EXIT_CERTIFICATION_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_DOMAIN_ERROR = 3
EXIT_RUNTIME_ERROR = 4

_SLOT_NAMES = ("t", "u", "v", "w")


def _load_config(path):
    if path is None:
        raise ParameterError("--config PATH is required for this command")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ParameterError("config file not found: %s" % path)
    except json.JSONDecodeError as exc:
        raise ParameterError("config is not valid JSON: %s" % exc)


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_line(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _cmd_eval(args):
    config = _load_config(args.config)
    model = parse_model(config["model"])
    axes = parse_grid(config.get("grid", {"axes": [[0.0]] * model.n_slots}), model.n_slots)
    names = _SLOT_NAMES[: model.n_slots]
    if args.format == "json":
        rows = [
            dict(zip(list(names) + ["value"], list(combo) + [model.evaluate(*combo)]))
            for combo in itertools.product(*axes)
        ]
        _emit(json.dumps(rows, sort_keys=True) + "\n", args.output)
        return EXIT_OK
    lines = [",".join(list(names) + ["value"])]
    for combo in itertools.product(*axes):
        value = model.evaluate(*combo)
        lines.append(",".join([repr(c) for c in combo] + [repr(value)]))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_gram(args):
    config = _load_config(args.config)
    model = parse_model(config["model"])
    n = args.n if args.n is not None else int(config.get("n", 10))
    seed = args.seed if args.seed is not None else int(config.get("seed", 0))
    min_sep = float(config.get("min_sep", 1e-6))
    points = sample_distinct(model.spaces, n, seed, min_sep=min_sep)
    matrix = gram(model, points)
    if args.format == "json":
        payload = {"n": n, "seed": seed, "matrix": [[float(v) for v in row] for row in matrix]}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.output)
    else:
        lines = ["n=%d" % n]
        for row in matrix:
            lines.append(",".join(repr(float(v)) for v in row))
        _emit("\n".join(lines) + "\n", args.output)
    if config.get("points_csv"):
        with open(config["points_csv"], "w", encoding="utf-8") as fh:
            fh.write(points_to_csv(model.spaces, points))
    return EXIT_OK


def _cmd_certify(args):
    config = _load_config(args.config)
    model = parse_model(config["model"])
    n = args.n if args.n is not None else int(config.get("n", 30))
    trials = args.trials if args.trials is not None else int(config.get("trials", 100))
    seed = args.seed if args.seed is not None else int(config.get("seed", 0))
    mode = args.mode or config.get("mode", "psd")
    min_sep = config.get("min_sep")
    reports = certify(
        model,
        n=n,
        trials=trials,
        seed=seed,
        mode=mode,
        min_sep=None if min_sep is None else float(min_sep),
        embed_clause=config.get("embed_clause"),
    )
    lines = [_json_line(rep.to_dict()) for rep in reports]
    worst = worst_report(reports)
    all_pass = all(rep.passed for rep in reports)
    summary = {
        "summary": True,
        "trials": trials,
        "all_pass": all_pass,
        "worst_min_eig": worst.min_eig,
        "worst_seed": worst.seed,
        "mode": worst.mode,
    }
    lines.append(_json_line(summary))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all_pass else EXIT_CERTIFICATION_FAILED


def _cmd_report(args):
    config = _load_config(args.config)
    model = parse_model(config["model"])
    report = spd_report(model)
    payload = report.to_dict()
    payload["model"] = model_to_spec(model)
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_counterexample(args):
    config = _load_config(args.config)
    model = parse_model(config["model"])
    clause = config.get("clause")
    if not clause:
        raise ParameterError("config must name the violated 'clause'")
    ce = counterexample_2x2(model, clause)
    payload = {
        "clause": ce.clause,
        "distances": list(ce.distances),
        "matrix": [[float(v) for v in row] for row in ce.matrix],
        "det_abs": ce.det_abs,
        "points": [
            [space.flatten_point(comp) for space, comp in zip(model.spaces, point)]
            for point in ce.points
        ],
    }
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_suite(args):
    seed = args.seed if args.seed is not None else 0
    results = acceptance.run_all(seed=seed, name_filter=args.filter)
    if not results:
        raise ParameterError("no criteria match filter %r" % (args.filter,))
    lines = [res.line() for res in results]
    failed = sum(1 for res in results if not res.passed)
    lines.append(
        "suite: %d criteria, %d failed, seed=%d" % (len(results), failed, seed)
    )
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if failed == 0 else EXIT_CERTIFICATION_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gneiting-kernels",
        description="Build and numerically certify positive definite kernels "
        "on products of metric spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "eval": (_cmd_eval, "evaluate a model over a grid (CSV)"),
        "gram": (_cmd_gram, "sample points and emit the Gram matrix (CSV)"),
        "certify": (_cmd_certify, "run PSD/SPD certification trials (JSON lines)"),
        "report": (_cmd_report, "emit the SPD condition report (JSON)"),
        "counterexample": (_cmd_counterexample, "emit a singular 2x2 counterexample (JSON)"),
        "suite": (_cmd_suite, "run the full acceptance suite"),
    }
    for name, (fn, help_text) in specs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON config path")
        p.add_argument("--output", help="write output here instead of stdout")
        p.add_argument("--format", choices=("csv", "json"), help="output format hint")
        p.add_argument("--seed", type=int, help="base 64-bit seed")
        p.add_argument("--trials", type=int, help="number of certification trials")
        p.add_argument("--n", type=int, help="points per configuration")
        p.add_argument("--mode", choices=("psd", "spd"), help="certification mode")
        p.add_argument("--filter", help="substring filter for suite criteria")
        p.set_defaults(fn=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        if args.trials is not None and args.trials < 1:
            raise ParameterError("trials must be >= 1")
        if args.n is not None and args.n < 1:
            raise ParameterError("n must be >= 1")
        return args.fn(args)
    except ParameterError as exc:
        sys.stderr.write("config error: %s\n" % exc)
        return EXIT_CONFIG_ERROR
    except DomainError as exc:
        sys.stderr.write("domain error: %s\n" % exc)
        return EXIT_DOMAIN_ERROR
    except (SamplingError, ConvergenceError, KeyError, OSError) as exc:
        sys.stderr.write("runtime error: %r\n" % (exc,))
        return EXIT_RUNTIME_ERROR


if __name__ == "__main__":
    sys.exit(main())
