"""The acceptance suite: one callable per criterion, shared by CLI and tests.

Every criterion is deterministic given the base seed; per-trial seeds are
derived with XOR so results are reproducible trial by trial.  Each function
returns a :class:`CriterionResult` with a machine-readable pass flag and a
stable one-line detail string (no timings, so repeated runs are
byte-identical).
"""

import zlib
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np

from . import fixtures
from .cnd import check_cnd_empirical
from .linalg import sturm_eig_extremes, sym_eig_extremes
from .models import VERDICT_OPEN, VERDICT_SPD, counterexample_2x2, spd_report
from .rng import SplitMix64, derive_seed
from .spaces import sample_distinct
from .special_functions import (
    DiscreteMeasure,
    StieltjesFunction,
    check_complete_monotonicity,
    stieltjes_kernel_identity_check,
)
from .validation import certify, embed_counterexample, gram_report, worst_report


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return "%s %s: %s" % ("PASS" if self.passed else "FAIL", self.name, self.detail)


def _fixture_seed(base_seed: int, label: str) -> int:
    return derive_seed(base_seed, zlib.crc32(label.encode("utf-8")))


def criterion_pd_certification(seed: int = 0) -> CriterionResult:
    """PSD of the Gneiting family across bounded/unbounded and critical/supercritical r."""
    worst_ratio = np.inf
    worst_name = ""
    ok = True
    for name, model in fixtures.pd_certification_models().items():
        reports = certify(
            model, n=30, trials=100, seed=_fixture_seed(seed, name), mode="psd"
        )
        rep = worst_report(reports)
        ratio = rep.min_eig / (rep.n * rep.scale)
        if ratio < worst_ratio:
            worst_ratio = ratio
            worst_name = name
        ok = ok and all(r.passed for r in reports)
    return CriterionResult(
        "pd-certification",
        ok,
        "worst min_eig/(n*scale) = %.3e (%s), threshold -1e-12" % (worst_ratio, worst_name),
    )


def criterion_spd_certification(seed: int = 0, trials: int = 100) -> CriterionResult:
    """Strict PD for every fixture whose condition report guarantees it."""
    worst_ratio = np.inf
    worst_name = ""
    ok = True
    for name, model in fixtures.spd_guaranteed_models().items():
        report = spd_report(model)
        if report.verdict != VERDICT_SPD:
            return CriterionResult(
                "spd-certification",
                False,
                "fixture %s unexpectedly reported %s" % (name, report.verdict),
            )
        reports = certify(
            model,
            n=30,
            trials=trials,
            seed=_fixture_seed(seed, name),
            mode="spd",
            min_sep=0.05,
        )
        rep = worst_report(reports)
        ratio = rep.min_eig / rep.scale
        if ratio < worst_ratio:
            worst_ratio = ratio
            worst_name = name
        ok = ok and all(r.passed for r in reports)
    return CriterionResult(
        "spd-certification",
        ok,
        "worst min_eig/scale = %.3e (%s), floor 1e-12" % (worst_ratio, worst_name),
    )


def criterion_counterexamples(seed: int = 0) -> CriterionResult:
    """Singular pairs for every violated clause, alone and embedded in 30 points."""
    ok = True
    worst_det = 0.0
    worst_embedded = -np.inf
    for name, (model, clause) in fixtures.violated_models().items():
        ce = counterexample_2x2(model, clause)
        scale = max(1.0, float(np.max(np.abs(ce.matrix))))
        det_ratio = ce.det_abs / scale ** 2
        worst_det = max(worst_det, det_ratio)
        ok = ok and det_ratio <= 1e-12
        points = embed_counterexample(model, clause, 30, _fixture_seed(seed, name))
        rep = gram_report(model, points, mode="spd", seed=seed)
        ratio = rep.min_eig / rep.scale
        worst_embedded = max(worst_embedded, ratio)
        ok = ok and ratio <= 1e-10
    return CriterionResult(
        "counterexamples",
        ok,
        "worst |det|/scale^2 = %.3e, worst embedded min_eig/scale = %.3e"
        % (worst_det, worst_embedded),
    )


def criterion_cnd_certification(seed: int = 0, configs: int = 50) -> CriterionResult:
    """Empirical CND of every combinator fixture on seeded 20-point samples."""
    ok = True
    worst = -np.inf
    worst_name = ""
    for name, (phi, spaces) in fixtures.cnd_fixtures().items():
        base = _fixture_seed(seed, name)
        for k in range(configs):
            points = sample_distinct(spaces, 20, derive_seed(base, k))
            verdict = check_cnd_empirical(phi, spaces, points, tol=1e-9)
            ratio = verdict.max_projected_eig / verdict.scale
            if ratio > worst:
                worst = ratio
                worst_name = name
            ok = ok and verdict.passed
    return CriterionResult(
        "cnd-certification",
        ok,
        "worst max_eig/scale = %.3e (%s), tol 1e-9" % (worst, worst_name),
    )


def criterion_complete_monotonicity(seed: int = 0, draws: int = 20) -> CriterionResult:
    """Order-8 divided-difference test on randomly drawn Stieltjes functions."""
    rng = SplitMix64(_fixture_seed(seed, "complete-monotonicity"))
    grid = np.linspace(0.1, 5.0, 12)
    ok = True
    worst = np.inf
    for _ in range(draws):
        order = rng.uniform(0.3, 3.0)
        const = rng.uniform(0.0, 5.0)
        power = rng.uniform(0.0, 5.0)
        atoms = tuple(
            (rng.uniform(0.05, 10.0), rng.uniform(0.05, 10.0))
            for _ in range(rng.randint(5))
        )
        f = StieltjesFunction(order, const, power, DiscreteMeasure(atoms))
        report = check_complete_monotonicity(f, grid, max_order=8)
        worst = min(worst, min(report.margins) / report.tolerance)
        ok = ok and report.passed
    return CriterionResult(
        "complete-monotonicity",
        ok,
        "%d random functions, worst margin/tolerance = %.3e (pass > -1)" % (draws, worst),
    )


def criterion_gamma_identity(seed: int = 0) -> CriterionResult:
    """Quadrature against the closed form over the 3 x 3 x 3 parameter grid."""
    worst = 0.0
    for lam in (0.5, 1.0, 2.0):
        for s in (0.5, 1.0, 2.0):
            for t in (0.5, 1.0, 2.0):
                worst = max(worst, stieltjes_kernel_identity_check(lam, s, t, n_quad=64))
    return CriterionResult(
        "gamma-identity",
        worst <= 1e-8,
        "worst relative error %.3e over 27 parameter triples, bound 1e-8" % worst,
    )


def criterion_integration_fixtures(seed: int = 0) -> CriterionResult:
    """Both concrete model families report SPD_guaranteed and survive sampling."""
    names = [
        name
        for name in fixtures.spd_guaranteed_models()
        if name.startswith(("f1-s", "f2-"))
    ]
    models = fixtures.spd_guaranteed_models()
    ok = True
    worst_ratio = np.inf
    for name in names:
        model = models[name]
        report = spd_report(model)
        if report.verdict != VERDICT_SPD:
            return CriterionResult(
                "integration-fixtures",
                False,
                "%s reported %s instead of SPD_guaranteed" % (name, report.verdict),
            )
        reports = certify(
            model, n=30, trials=10, seed=_fixture_seed(seed, name), mode="spd", min_sep=0.05
        )
        rep = worst_report(reports)
        worst_ratio = min(worst_ratio, rep.min_eig / rep.scale)
        ok = ok and all(r.passed for r in reports)
    return CriterionResult(
        "integration-fixtures",
        ok,
        "%d family fixtures SPD_guaranteed, worst sampled min_eig/scale = %.3e"
        % (len(names), worst_ratio),
    )


def criterion_eigensolver_oracle(seed: int = 0, matrices: int = 200) -> CriterionResult:
    """Jacobi extremes against the Sturm-bisection oracle on random symmetric input."""
    rng = SplitMix64(_fixture_seed(seed, "eigensolver-oracle"))
    worst = 0.0
    for i in range(matrices):
        n = 2 + (i % 7)
        raw = np.array([[rng.uniform(-1.0, 1.0) for _ in range(n)] for _ in range(n)])
        a = (raw + raw.T) / 2.0
        lo_j, hi_j = sym_eig_extremes(a)
        lo_s, hi_s = sturm_eig_extremes(a)
        worst = max(worst, abs(lo_j - lo_s), abs(hi_j - hi_s))
    return CriterionResult(
        "eigensolver-oracle",
        worst <= 1e-10,
        "%d matrices (n <= 8), worst extreme-eigenvalue deviation %.3e" % (matrices, worst),
    )


def criterion_open_case(seed: int = 0) -> CriterionResult:
    """The critical power-plus-constant configuration must stay an open case."""
    report = spd_report(fixtures.open_case_model())
    ok = report.verdict == VERDICT_OPEN
    return CriterionResult(
        "open-case",
        ok,
        "verdict %s (must be open_case, never a guarantee or a violation)" % report.verdict,
    )


CRITERIA: Dict[str, Callable[[int], CriterionResult]] = {
    "pd-certification": criterion_pd_certification,
    "spd-certification": criterion_spd_certification,
    "counterexamples": criterion_counterexamples,
    "cnd-certification": criterion_cnd_certification,
    "complete-monotonicity": criterion_complete_monotonicity,
    "gamma-identity": criterion_gamma_identity,
    "integration-fixtures": criterion_integration_fixtures,
    "eigensolver-oracle": criterion_eigensolver_oracle,
    "open-case": criterion_open_case,
}


def run_all(seed: int = 0, name_filter: Optional[str] = None) -> List[CriterionResult]:
    results = []
    for name, fn in CRITERIA.items():
        if name_filter and name_filter not in name:
            continue
        results.append(fn(seed))
    return results
