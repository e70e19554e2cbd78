"""Named fixture models used by the acceptance suite, tests, and the CLI.

Two integration families are covered:

* family 1: sphere x interval x plane, with g = 3 - cos(t) and
  h = 1 + sin(u) + v^s for shape exponents s in {1, 1.5, 2};
* family 2: line x sphere x sphere, with g = c + t^s and h = c + u + v.
"""

import math
from typing import Dict, Tuple

from .cnd import (
    CNDFunction,
    Constant,
    CosineComplement,
    GeodesicDistance,
    PowerDistance,
    SineDistance,
    bernstein_compose,
    bounded_complement,
    euclidean_cross,
    shifted,
)
from .models import (
    CLAUSE_CRITICAL_NO_ATOMS,
    CLAUSE_F_CONSTANT,
    CLAUSE_G_NOT_STRICT,
    CLAUSE_H_NOT_STRICT,
    GneitingModel,
    KernelModel,
    ProductModel,
    TwoSpaceGneiting,
)
from .spaces import Euclidean, Interval, SphereGeodesic
from .special_functions import (
    BernsteinFunction,
    CompleteBernsteinFunction,
    CompletelyMonotoneFunction,
    DiscreteMeasure,
    IDENTITY_BERNSTEIN,
    StieltjesFunction,
)

# ---------------------------------------------------------------------------
# outer functions
# ---------------------------------------------------------------------------


def inverse_power_stieltjes(order: float = 1.0) -> StieltjesFunction:
    """f(w) = 1 / w^order: unbounded, no atoms."""
    return StieltjesFunction(order=order, power=1.0)


def bounded_atom_stieltjes() -> StieltjesFunction:
    """f(w) = 1 + 2 / (w + 1): bounded with one atom."""
    return StieltjesFunction(order=1.0, const=1.0, measure=DiscreteMeasure(((1.0, 2.0),)))


def mixed_stieltjes() -> StieltjesFunction:
    """f(w) = 1/4 + w^(-1/2) + 3 (w + 2)^(-1/2)."""
    return StieltjesFunction(
        order=0.5, const=0.25, power=1.0, measure=DiscreteMeasure(((2.0, 3.0),))
    )


def open_case_stieltjes() -> StieltjesFunction:
    """f(w) = 1 + 1/w: positive constant and power parts, no atoms."""
    return StieltjesFunction(order=1.0, const=1.0, power=1.0)


def identity_complete_bernstein() -> CompleteBernsteinFunction:
    """f(w) = w."""
    return CompleteBernsteinFunction(order=1.0, power=1.0)


def bounded_atom_complete_bernstein() -> CompleteBernsteinFunction:
    """f(w) = 1/2 + w / (w + 1)."""
    return CompleteBernsteinFunction(
        order=1.0, const=0.5, measure=DiscreteMeasure(((1.0, 1.0),))
    )


def atom_complete_bernstein() -> CompleteBernsteinFunction:
    """f(w) = w + w / (w + 2)."""
    return CompleteBernsteinFunction(
        order=1.0, power=1.0, measure=DiscreteMeasure(((2.0, 1.0),))
    )


def exp_decay_cm() -> CompletelyMonotoneFunction:
    return CompletelyMonotoneFunction.exp_mixture([(1.0, 1.0)])


# ---------------------------------------------------------------------------
# family 1: sphere x interval x plane
# ---------------------------------------------------------------------------


def family1_spaces(euclidean_dim: int = 2):
    return (SphereGeodesic(2), Interval(math.pi / 2.0), Euclidean(euclidean_dim))


def family1_g() -> CNDFunction:
    return CosineComplement()


def family1_h(s: float = 1.5) -> CNDFunction:
    # 1 + sin(u) + v^s
    return shifted(
        bernstein_compose(IDENTITY_BERNSTEIN, SineDistance(), PowerDistance(s)), 1.0
    )


# ---------------------------------------------------------------------------
# family 2: line x sphere x sphere
# ---------------------------------------------------------------------------


def family2_spaces():
    return (Euclidean(1), SphereGeodesic(2), SphereGeodesic(2))


def family2_g(c: float = 1.0, s: float = 1.5) -> CNDFunction:
    return shifted(PowerDistance(s), c)


def family2_h(c: float = 1.0) -> CNDFunction:
    return shifted(
        bernstein_compose(IDENTITY_BERNSTEIN, GeodesicDistance(), GeodesicDistance()), c
    )


# ---------------------------------------------------------------------------
# model registries
# ---------------------------------------------------------------------------


def pd_certification_models() -> Dict[str, KernelModel]:
    """Five kernels spanning {unbounded, bounded} x {critical, supercritical} r."""
    spaces = family1_spaces()
    g = family1_g()
    h = family1_h(1.5)
    return {
        "f1-Gr-unbounded-critical": GneitingModel(
            "G_r", inverse_power_stieltjes(), g, h, 1.0, spaces
        ),
        "f1-Gr-unbounded-supercritical": GneitingModel(
            "G_r", inverse_power_stieltjes(), g, h, 2.0, spaces
        ),
        "f1-Gr-bounded-critical": GneitingModel(
            "G_r", bounded_atom_stieltjes(), g, h, 1.0, spaces
        ),
        "f1-Gr-bounded-supercritical": GneitingModel(
            "G_r", bounded_atom_stieltjes(), g, h, 2.0, spaces
        ),
        "f1-Gr-mixed-supercritical": GneitingModel(
            "G_r", mixed_stieltjes(), g, h, 1.5, spaces
        ),
    }


def spd_guaranteed_models() -> Dict[str, KernelModel]:
    """Fixtures whose condition report must say SPD_guaranteed."""
    models: Dict[str, KernelModel] = {}
    for s in (1.0, 1.5, 2.0):
        spaces = family1_spaces()
        g = family1_g()
        h = family1_h(s)
        models["f1-s%g-Gr-unbounded-supercritical" % s] = GneitingModel(
            "G_r", inverse_power_stieltjes(), g, h, 2.0, spaces
        )
        models["f1-s%g-Gr-bounded-critical" % s] = GneitingModel(
            "G_r", bounded_atom_stieltjes(), g, h, 1.0, spaces
        )
    spaces = family1_spaces()
    g = family1_g()
    h = family1_h(1.5)
    models["f1-Gr-critical-atoms"] = GneitingModel(
        "G_r", mixed_stieltjes(), g, h, 0.5, spaces
    )
    models["f1-Hr-unbounded-supercritical"] = GneitingModel(
        "H_r", inverse_power_stieltjes(), g, h, 2.0, spaces
    )
    models["f1-Ir-unbounded-supercritical"] = GneitingModel(
        "I_r", identity_complete_bernstein(), g, h, 2.0, spaces
    )
    models["f1-Ir-bounded-critical"] = GneitingModel(
        "I_r", bounded_atom_complete_bernstein(), g, h, 1.0, spaces
    )
    models["f1-Jr-critical-atoms"] = GneitingModel(
        "J_r", atom_complete_bernstein(), g, h, 1.0, spaces
    )
    models["f2-Gr-unbounded-supercritical"] = GneitingModel(
        "G_r", inverse_power_stieltjes(), family2_g(), family2_h(), 2.0, family2_spaces()
    )
    models["f2-Gr-bounded-critical"] = GneitingModel(
        "G_r", bounded_atom_stieltjes(), family2_g(), family2_h(), 1.0, family2_spaces()
    )
    models["two-space-Fr-bounded"] = TwoSpaceGneiting(
        f=bounded_atom_stieltjes(),
        g=CosineComplement(),
        h=shifted(SineDistance(), 1.0),
        r=1.0,
        spaces=(SphereGeodesic(2), Interval(math.pi / 2.0)),
    )
    models["product-exp-factors"] = ProductModel(
        f1=exp_decay_cm(),
        f2=CompletelyMonotoneFunction.from_stieltjes(bounded_atom_stieltjes()),
        g=family1_g(),
        h=family1_h(1.5),
        spaces=family1_spaces(),
    )
    return models


def violated_models() -> Dict[str, Tuple[KernelModel, str]]:
    """Fixtures violating one named necessary condition each."""
    spaces = family1_spaces()
    h = family1_h(1.5)
    return {
        "constant-g": (
            GneitingModel(
                "G_r", inverse_power_stieltjes(), Constant(2.0), h, 2.0, spaces
            ),
            CLAUSE_G_NOT_STRICT,
        ),
        "h-ignores-third-slot": (
            GneitingModel(
                "G_r",
                inverse_power_stieltjes(),
                family1_g(),
                shifted(
                    bernstein_compose(IDENTITY_BERNSTEIN, SineDistance(), Constant(0.0)),
                    1.0,
                ),
                2.0,
                spaces,
            ),
            CLAUSE_H_NOT_STRICT,
        ),
        "constant-f": (
            GneitingModel(
                "G_r",
                StieltjesFunction(order=1.0, const=2.0),
                family1_g(),
                h,
                1.0,
                spaces,
            ),
            CLAUSE_F_CONSTANT,
        ),
        "critical-pure-power": (
            GneitingModel(
                "G_r", inverse_power_stieltjes(), family1_g(), h, 1.0, spaces
            ),
            CLAUSE_CRITICAL_NO_ATOMS,
        ),
    }


def open_case_model() -> KernelModel:
    """Critical exponent with positive constant and power parts, no atoms."""
    return GneitingModel(
        "G_r", open_case_stieltjes(), family1_g(), family1_h(1.5), 1.0, family1_spaces()
    )


def cnd_fixtures() -> Dict[str, Tuple[CNDFunction, tuple]]:
    """CND functions built through each combinator, with their space products."""
    sphere = SphereGeodesic(2)
    segment = Interval(math.pi / 2.0)
    fr = TwoSpaceGneiting(
        f=StieltjesFunction(order=1.0, measure=DiscreteMeasure(((1.0, 1.0),))),
        g=GeodesicDistance(),
        h=shifted(GeodesicDistance(), 1.0),
        r=1.0,
        spaces=(sphere, sphere),
    )
    return {
        "compose-exp-sum": (
            bernstein_compose(
                BernsteinFunction(measure=DiscreteMeasure(((1.0, 1.0),))),
                GeodesicDistance(),
                GeodesicDistance(),
            ),
            (sphere, sphere),
        ),
        "compose-identity-sum": (
            bernstein_compose(IDENTITY_BERNSTEIN, CosineComplement(), SineDistance()),
            (sphere, segment),
        ),
        "compose-slope-and-atom": (
            bernstein_compose(
                BernsteinFunction(slope=1.0, measure=DiscreteMeasure(((2.0, 0.5),))),
                PowerDistance(1.5),
                GeodesicDistance(),
            ),
            (Euclidean(2), sphere),
        ),
        "cross-interval": (
            euclidean_cross(
                BernsteinFunction(const=0.5, slope=1.0), shifted(SineDistance(), 1.0), 1
            ),
            (Euclidean(1), segment),
        ),
        "cross-sphere": (
            euclidean_cross(
                BernsteinFunction(const=1.0, measure=DiscreteMeasure(((1.0, 2.0),))),
                shifted(GeodesicDistance(), 1.0),
                2,
            ),
            (Euclidean(2), sphere),
        ),
        "complement-two-space": (
            bounded_complement(fr.value_at_origin(), fr),
            (sphere, sphere),
        ),
    }
