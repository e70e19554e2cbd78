import math

import numpy as np
import pytest

from gneiting_kernels.cnd import (
    CNDFunction,
    Constant,
    CosineComplement,
    GeodesicDistance,
    PowerDistance,
    SineDistance,
    SlotSpec,
    bernstein_compose,
    bounded_complement,
    check_cnd_empirical,
    default_strictness_grids,
    euclidean_cross,
    shifted,
    strictness_check,
)
from gneiting_kernels.errors import ParameterError
from gneiting_kernels.models import TwoSpaceGneiting
from gneiting_kernels.spaces import (
    Euclidean,
    Interval,
    ProductPoint,
    SphereGeodesic,
    sample_distinct,
)
from gneiting_kernels.special_functions import (
    BernsteinFunction,
    DiscreteMeasure,
    IDENTITY_BERNSTEIN,
    StieltjesFunction,
)

SPHERE = SphereGeodesic(2)
SEGMENT = Interval(math.pi / 2.0)


class NegativeStub(CNDFunction):
    """Test-only stand-in whose nonnegativity flag is down."""

    slots = (SlotSpec(),)
    nonnegative = False
    positive = False

    def evaluate(self, *dists):
        return np.asarray(dists[0], dtype=float)

    def describe(self):
        return "negative-stub"


# ---------------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------------


def test_identity_compose_is_bitwise_sum():
    phi = bernstein_compose(IDENTITY_BERNSTEIN, PowerDistance(2.0), GeodesicDistance())
    for t, u in [(0.0, 0.0), (0.7, 2.1), (1.9, 0.3), (2.0, math.pi)]:
        assert float(phi.evaluate(t, u)) == t ** 2.0 + u


def test_compose_exponential_atom_matches_closed_form():
    f = BernsteinFunction(measure=DiscreteMeasure(((1.0, 1.0),)))
    phi = bernstein_compose(f, GeodesicDistance(), GeodesicDistance())
    assert float(phi.evaluate(0.0, 0.0)) == 0.0
    # 1 - e^{-1.5}, frozen from the high-precision oracle
    assert float(phi.evaluate(0.3, 1.2)) == pytest.approx(
        0.7768698398515701710667195292359874787, rel=1e-15
    )


def test_compose_zero_inputs_gives_zero_function():
    f = BernsteinFunction(measure=DiscreteMeasure(((1.0, 1.0),)))
    phi = bernstein_compose(f, Constant(0.0), Constant(0.0))
    assert float(phi.evaluate(0.4, 2.2)) == 0.0


def test_compose_rejects_unflagged_inputs():
    with pytest.raises(ParameterError):
        bernstein_compose(IDENTITY_BERNSTEIN, NegativeStub(), GeodesicDistance())
    with pytest.raises(ParameterError):
        bernstein_compose(IDENTITY_BERNSTEIN, GeodesicDistance(), NegativeStub())


def test_compose_flag_propagation():
    strict = bernstein_compose(IDENTITY_BERNSTEIN, CosineComplement(), SineDistance())
    assert strict.strict_at_zero and strict.nonnegative and not strict.positive
    lazy_f = BernsteinFunction(const=1.0)  # constant outer function
    blunt = bernstein_compose(lazy_f, CosineComplement(), SineDistance())
    assert not blunt.strict_at_zero and blunt.positive


def test_euclidean_cross_origin_value_and_closed_form():
    h = Constant(1.0)
    with pytest.raises(ParameterError):
        euclidean_cross(IDENTITY_BERNSTEIN, Constant(0.0), 2)  # h not positive
    with pytest.raises(ParameterError):
        euclidean_cross(BernsteinFunction(), h, 2)  # zero Bernstein function
    phi = euclidean_cross(IDENTITY_BERNSTEIN, h, 2)
    # h == 1, f = id, n = 2: phi(t, u) = 1 - exp(-t^2)
    assert float(phi.evaluate(0.0, 0.0)) == 0.0
    for t in (0.3, 1.0, 2.5):
        assert float(phi.evaluate(t, 0.7)) == pytest.approx(1.0 - math.exp(-t * t), rel=1e-15)


def test_euclidean_cross_origin_formula_general():
    f = BernsteinFunction(const=0.5, slope=1.0)
    h = shifted(SineDistance(), 1.0)
    phi = euclidean_cross(f, h, 1)
    h0 = float(h.evaluate(0.0))
    expected = h0 ** -0.5 * (1.0 - math.exp(-0.5))
    assert float(phi.evaluate(0.0, 0.0)) == pytest.approx(expected, rel=1e-15)
    assert phi.positive and phi.strict_at_zero


def make_fr(f=None, r=1.0):
    f = f or StieltjesFunction(order=1.0, measure=DiscreteMeasure(((1.0, 1.0),)))
    return TwoSpaceGneiting(
        f=f,
        g=GeodesicDistance(),
        h=shifted(GeodesicDistance(), 1.0),
        r=r,
        spaces=(SPHERE, SPHERE),
    )


def test_bounded_complement_zero_at_origin_when_tight():
    fr = make_fr()
    phi = bounded_complement(fr.value_at_origin(), fr)
    assert float(phi.evaluate(0.0, 0.0)) == 0.0
    grids = default_strictness_grids((SPHERE, SPHERE))
    for t in grids[0]:
        for u in grids[1]:
            assert float(phi.evaluate(t, u)) >= 0.0


def test_bounded_complement_constant_kernel_is_zero_function():
    fr = TwoSpaceGneiting(
        f=StieltjesFunction(order=1.0, const=2.0),
        g=GeodesicDistance(),
        h=Constant(1.0),
        r=1.0,
        spaces=(SPHERE, SPHERE),
    )
    phi = bounded_complement(2.0, fr)
    assert float(phi.evaluate(1.0, 2.0)) == 0.0


def test_bounded_complement_precondition():
    fr = make_fr()
    with pytest.raises(ParameterError):
        bounded_complement(fr.value_at_origin() - 0.25, fr)
    unbounded = TwoSpaceGneiting(
        f=StieltjesFunction(order=1.0, power=1.0),
        g=CosineComplement(),
        h=shifted(GeodesicDistance(), 1.0),
        r=1.0,
        spaces=(SPHERE, SPHERE),
    )
    with pytest.raises(ParameterError):
        bounded_complement(10.0, unbounded)


# ---------------------------------------------------------------------------
# empirical CND certification
# ---------------------------------------------------------------------------


def test_constant_function_passes_with_zero_eigenvalue():
    pts = sample_distinct(SPHERE, 6, seed=3)
    verdict = check_cnd_empirical(Constant(2.5), SPHERE, pts, tol=1e-9)
    assert verdict.passed
    assert verdict.max_projected_eig == pytest.approx(0.0, abs=1e-14)


def test_collinear_points_projected_spectrum():
    line = Euclidean(1)
    pts = [ProductPoint((np.array([float(v)]),)) for v in (0.0, 1.0, 2.0)]
    phi = PowerDistance(1.0)
    verdict = check_cnd_empirical(phi, line, pts, tol=1e-9)
    assert verdict.passed
    # independent 3x3 oracle for max eig of P A P with A = [[0,1,2],[1,0,1],[2,1,0]]
    a = np.array([[0.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 0.0]])
    proj = np.eye(3) - np.ones((3, 3)) / 3.0
    ref = np.linalg.eigvalsh(proj @ a @ proj).max()
    assert verdict.max_projected_eig == pytest.approx(ref, abs=1e-12)
    assert ref <= 1e-12


def test_squared_distance_on_random_points():
    line = Euclidean(1)
    for seed in range(5):
        pts = sample_distinct(line, 10, seed=seed)
        verdict = check_cnd_empirical(PowerDistance(2.0), line, pts, tol=1e-9)
        assert verdict.passed


@pytest.mark.parametrize(
    "atom,space",
    [
        (PowerDistance(0.5), Euclidean(2)),
        (PowerDistance(1.5), Euclidean(3)),
        (PowerDistance(2.0), Euclidean(2)),
        (GeodesicDistance(), SPHERE),
        (CosineComplement(), SPHERE),
        (SineDistance(), SEGMENT),
    ],
    ids=str,
)
def test_atoms_are_empirically_cnd(atom, space):
    for seed in (0, 1, 2):
        pts = sample_distinct(space, 15, seed=seed)
        assert check_cnd_empirical(atom, space, pts, tol=1e-9).passed


def test_check_requires_two_points():
    pts = sample_distinct(SPHERE, 1, seed=0)
    with pytest.raises(ParameterError):
        check_cnd_empirical(GeodesicDistance(), SPHERE, pts)


def test_verdict_serialization():
    pts = sample_distinct(SPHERE, 5, seed=1)
    verdict = check_cnd_empirical(GeodesicDistance(), SPHERE, pts, tol=1e-9, seed=1)
    d = verdict.to_dict()
    assert set(d) == {"max_eig", "tol", "pass", "n", "scale", "seed"}
    assert d["n"] == 5 and d["seed"] == 1


# ---------------------------------------------------------------------------
# strictness
# ---------------------------------------------------------------------------


def test_strictness_of_cosine_complement():
    verdict = strictness_check(CosineComplement(), [np.linspace(0.0, math.pi, 60)])
    assert verdict.passed
    # margin oracle: min over the grid of cos(0) - cos(t)
    grid = np.linspace(0.0, math.pi, 60)
    expected = min(1.0 - math.cos(t) for t in grid if t > 0.0)
    assert verdict.min_margin == pytest.approx(expected, rel=1e-12)


def test_strictness_fails_when_one_slot_is_ignored():
    phi = bernstein_compose(IDENTITY_BERNSTEIN, GeodesicDistance(), Constant(0.0))
    grids = [np.linspace(0.0, math.pi, 9), np.linspace(0.0, math.pi, 9)]
    verdict = strictness_check(phi, grids)
    assert not verdict.passed
    assert verdict.witness is not None
    t0, u0 = verdict.witness
    assert t0 == 0.0 and u0 > 0.0


def test_strictness_of_family1_h_on_dense_grid():
    phi = shifted(
        bernstein_compose(IDENTITY_BERNSTEIN, SineDistance(), PowerDistance(1.5)), 1.0
    )
    grids = [np.linspace(0.0, math.pi / 2.0, 50), np.linspace(0.0, 10.0, 50)]
    verdict = strictness_check(phi, grids)
    assert verdict.passed
    # grid-minimum oracle: smallest nonzero increment over the same grid
    best = min(
        math.sin(u) + v ** 1.5
        for u in grids[0]
        for v in grids[1]
        if u > 0.0 or v > 0.0
    )
    assert verdict.min_margin == pytest.approx(best, rel=1e-12)


def test_strictness_grid_arity_checked():
    with pytest.raises(ParameterError):
        strictness_check(CosineComplement(), [np.array([0.0, 1.0]), np.array([0.0])])


# ---------------------------------------------------------------------------
# slot validation
# ---------------------------------------------------------------------------


def test_atom_space_compatibility():
    SineDistance().validate_spaces(SEGMENT)
    with pytest.raises(ParameterError):
        SineDistance().validate_spaces(Euclidean(1))  # unbounded slot
    with pytest.raises(ParameterError):
        SineDistance().validate_spaces(Interval(2.0))  # diameter above pi/2
    with pytest.raises(ParameterError):
        GeodesicDistance().validate_spaces(Euclidean(2))
    with pytest.raises(ParameterError):
        CosineComplement().validate_spaces((SPHERE, SPHERE))  # arity mismatch


def test_power_exponent_range():
    with pytest.raises(ParameterError):
        PowerDistance(0.0)
    with pytest.raises(ParameterError):
        PowerDistance(2.5)
    PowerDistance(2.0)


def test_shift_validation_and_flags():
    with pytest.raises(ParameterError):
        shifted(GeodesicDistance(), -0.5)
    phi = shifted(SineDistance(), 2.0)
    assert phi.positive and phi.strict_at_zero
    assert float(phi.evaluate(0.25)) == pytest.approx(2.0 + math.sin(0.25), rel=1e-15)
