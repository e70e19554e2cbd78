"""Gram-matrix assembly and empirical PSD / strict-PD certification.

Certification is evidence, not proof: a pass means every seeded trial
produced a Gram matrix whose minimum eigenvalue cleared the documented
threshold.  PSD tolerance scales with n * max|A_jk| because raw
machine-epsilon thresholds misfire as matrices grow; strict-PD requires the
minimum eigenvalue to sit strictly above a small positive floor, so
near-singular matrices fail SPD while still passing PSD.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .errors import ParameterError
from .linalg import sturm_eig_extremes, sym_eig_extremes  # noqa: F401  (re-exported)
from .models import KernelModel, counterexample_2x2
from .rng import derive_seed
from .spaces import ProductPoint, product_distances, sample_distinct

DEFAULT_TOL_PSD = 1e-12
DEFAULT_TOL_SPD = 1e-12


@dataclass(frozen=True)
class GramReport:
    n: int
    min_eig: float
    max_eig: float
    symmetry_residual: float
    scale: float
    verdict: str
    seed: int
    space: str
    model: str
    mode: str
    tol: float

    @property
    def passed(self) -> bool:
        return self.verdict.endswith("_pass")

    def to_dict(self):
        return {
            "n": self.n,
            "min_eig": self.min_eig,
            "max_eig": self.max_eig,
            "symmetry_residual": self.symmetry_residual,
            "scale": self.scale,
            "verdict": self.verdict,
            "seed": self.seed,
            "space": self.space,
            "model": self.model,
            "mode": self.mode,
            "tol": self.tol,
        }


def gram(model: KernelModel, points: Sequence[ProductPoint]) -> np.ndarray:
    """Gram matrix A_jk = model(distances(p_j, p_k)).

    Distances are computed once per unordered pair and mirrored, so the
    matrix is exactly symmetric, and the diagonal goes through the same
    evaluation path with exactly-zero distances.
    """
    n = len(points)
    if n < 1:
        raise ParameterError("need at least one point")
    k = model.n_slots
    dist = [np.zeros((n, n)) for _ in range(k)]
    for j in range(n):
        for l in range(j + 1, n):
            ds = product_distances(model.spaces, points[j], points[l])
            for m in range(k):
                dist[m][j, l] = ds[m]
                dist[m][l, j] = ds[m]
    a = np.asarray(model.evaluate(*dist), dtype=float)
    return a


def gram_report(
    model: KernelModel,
    points: Sequence[ProductPoint],
    mode: str = "psd",
    seed: int = 0,
    tol_psd: float = DEFAULT_TOL_PSD,
    tol_spd: float = DEFAULT_TOL_SPD,
) -> GramReport:
    """Assemble the Gram matrix of a point set and certify one mode."""
    mode = mode.lower()
    if mode not in ("psd", "spd"):
        raise ParameterError("mode must be 'psd' or 'spd'")
    a = gram(model, points)
    residual = float(np.max(np.abs(a - a.T))) if len(points) > 1 else 0.0
    min_eig, max_eig = sym_eig_extremes(a)
    scale = max(1.0, float(np.max(np.abs(a))))
    n = len(points)
    if mode == "psd":
        tol = tol_psd * n * scale
        verdict = "PSD_pass" if min_eig >= -tol else "PSD_fail"
    else:
        tol = tol_spd * scale
        verdict = "SPD_pass" if min_eig > tol else "SPD_fail"
    return GramReport(
        n=n,
        min_eig=min_eig,
        max_eig=max_eig,
        symmetry_residual=residual,
        scale=scale,
        verdict=verdict,
        seed=seed,
        space=", ".join(s.describe() for s in model.spaces),
        model=model.describe(),
        mode=mode,
        tol=tol,
    )


def certify(
    model: KernelModel,
    n: int = 30,
    trials: int = 100,
    seed: int = 0,
    mode: str = "psd",
    min_sep: Optional[float] = None,
    tol_psd: float = DEFAULT_TOL_PSD,
    tol_spd: float = DEFAULT_TOL_SPD,
    embed_clause: Optional[str] = None,
) -> List[GramReport]:
    """Sample, assemble, and certify ``trials`` independent configurations.

    Trial ``i`` draws its points with the derived seed ``seed XOR i``, so
    trials are reproducible individually and may run concurrently.  SPD mode
    requires a positive separation so that sampled points are genuinely
    distinct.  With ``embed_clause`` set, every configuration embeds the
    singular pair of that violated clause instead of being sampled freely.
    """
    if n < 2:
        raise ParameterError("need n >= 2 points per trial")
    if trials < 1:
        raise ParameterError("need at least one trial")
    mode = mode.lower()
    if min_sep is None:
        min_sep = 0.05 if mode == "spd" else 1e-6
    if mode == "spd" and min_sep <= 0.0:
        raise ParameterError("SPD certification requires min_sep > 0")
    reports = []
    for trial in range(trials):
        trial_seed = derive_seed(seed, trial)
        if embed_clause is None:
            points = sample_distinct(model.spaces, n, trial_seed, min_sep=min_sep)
        else:
            points = embed_counterexample(
                model, embed_clause, n, trial_seed, min_sep=min_sep
            )
        reports.append(
            gram_report(
                model, points, mode=mode, seed=trial_seed, tol_psd=tol_psd, tol_spd=tol_spd
            )
        )
    return reports


def worst_report(reports: Sequence[GramReport]) -> GramReport:
    """The trial with the smallest minimum eigenvalue."""
    if not reports:
        raise ParameterError("no reports to aggregate")
    return min(reports, key=lambda rep: rep.min_eig)


def embed_counterexample(
    model: KernelModel,
    clause: str,
    n: int,
    seed: int,
    min_sep: float = 0.05,
) -> List[ProductPoint]:
    """A singular pair embedded into an n-point sampled configuration.

    The remaining points copy the first pair point's components in the slots
    where the pair differs, so the two pair rows of the Gram matrix stay
    identical and the matrix is numerically singular regardless of the
    filler points.
    """
    if n < 2:
        raise ParameterError("need n >= 2")
    ce = counterexample_2x2(model, clause)
    p1, p2 = ce.points
    pinned = [i for i, d in enumerate(ce.distances) if d != 0.0]
    free = [i for i in range(len(model.spaces)) if i not in pinned]
    if not free:
        raise ParameterError("counterexample pins every slot; nothing to sample")
    free_spaces = [model.spaces[i] for i in free]
    raw = sample_distinct(free_spaces, n, seed, min_sep=min_sep)
    points = [p1, p2]
    for candidate in raw:
        if len(points) >= n:
            break
        comps = list(p1.components)
        for slot, value in zip(free, candidate.components):
            comps[slot] = value
        spliced = ProductPoint(tuple(comps))
        distinct = all(
            any(d > min_sep for d in product_distances(model.spaces, spliced, q))
            for q in points
        )
        if distinct:
            points.append(spliced)
    if len(points) < n:
        raise ParameterError(
            "could not embed the counterexample into %d distinct points" % n
        )
    return points
