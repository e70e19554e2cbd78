"""Gneiting-type positive definite kernels on products of metric spaces.

Construction of non-separable kernels from generalized Stieltjes and
complete Bernstein functions composed with conditionally negative definite
distance transforms, plus numerical certification of positive definiteness,
strict positive definiteness, and conditional negative definiteness on
sampled point configurations.
"""

from .cnd import (
    CNDFunction,
    Constant,
    CosineComplement,
    GeodesicDistance,
    PowerDistance,
    SineDistance,
    bernstein_compose,
    bounded_complement,
    check_cnd_empirical,
    euclidean_cross,
    shifted,
    strictness_check,
)
from .errors import ConvergenceError, DomainError, ParameterError, SamplingError
from .linalg import sturm_eig_extremes, sym_eig_extremes
from .models import (
    GneitingModel,
    KernelModel,
    ProductModel,
    SPDConditionReport,
    TwoSpaceGneiting,
    counterexample_2x2,
    spd_report,
)
from .spaces import (
    Circle,
    Discrete,
    Euclidean,
    Interval,
    ProductPoint,
    SphereGeodesic,
    points_to_csv,
    product_distances,
    sample_distinct,
)
from .special_functions import (
    BernsteinFunction,
    CompleteBernsteinFunction,
    CompletelyMonotoneFunction,
    DiscreteMeasure,
    StieltjesFunction,
    check_complete_monotonicity,
    eval_bernstein,
    eval_complete_bernstein,
    eval_stieltjes,
    gamma,
    stieltjes_kernel_identity_check,
)
from .validation import GramReport, certify, embed_counterexample, gram, gram_report

__version__ = "0.1.0"

__all__ = [
    "BernsteinFunction",
    "CNDFunction",
    "Circle",
    "CompleteBernsteinFunction",
    "CompletelyMonotoneFunction",
    "Constant",
    "ConvergenceError",
    "CosineComplement",
    "Discrete",
    "DiscreteMeasure",
    "DomainError",
    "Euclidean",
    "GeodesicDistance",
    "GneitingModel",
    "GramReport",
    "Interval",
    "KernelModel",
    "ParameterError",
    "PowerDistance",
    "ProductModel",
    "ProductPoint",
    "SPDConditionReport",
    "SamplingError",
    "SineDistance",
    "SphereGeodesic",
    "StieltjesFunction",
    "TwoSpaceGneiting",
    "bernstein_compose",
    "bounded_complement",
    "certify",
    "check_cnd_empirical",
    "check_complete_monotonicity",
    "counterexample_2x2",
    "embed_counterexample",
    "euclidean_cross",
    "eval_bernstein",
    "eval_complete_bernstein",
    "eval_stieltjes",
    "gamma",
    "gram",
    "gram_report",
    "points_to_csv",
    "product_distances",
    "sample_distinct",
    "shifted",
    "spd_report",
    "stieltjes_kernel_identity_check",
    "strictness_check",
    "sturm_eig_extremes",
    "sym_eig_extremes",
]
