import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gneiting_kernels.errors import DomainError, ParameterError
from gneiting_kernels.special_functions import (
    BernsteinFunction,
    CompleteBernsteinFunction,
    CompletelyMonotoneFunction,
    DiscreteMeasure,
    StieltjesFunction,
    check_complete_monotonicity,
    eval_bernstein,
    eval_complete_bernstein,
    eval_stieltjes,
    exponential_product_integral,
    gamma,
    stieltjes_kernel_identity_check,
)

# Values marked "frozen" were computed once with a 40-digit arbitrary
# precision evaluation of the same closed forms and pasted in as literals.


def atoms(*pairs):
    return DiscreteMeasure(tuple(pairs))


# ---------------------------------------------------------------------------
# strategies
# ---------------------------------------------------------------------------

stieltjes_functions = st.builds(
    StieltjesFunction,
    order=st.floats(0.3, 3.0),
    const=st.floats(0.0, 5.0),
    power=st.floats(0.0, 5.0),
    measure=st.lists(
        st.tuples(st.floats(0.05, 10.0), st.floats(0.05, 10.0)), max_size=4
    ).map(lambda pairs: DiscreteMeasure(tuple(pairs))),
)

bernstein_functions = st.builds(
    BernsteinFunction,
    const=st.floats(0.0, 3.0),
    slope=st.floats(0.0, 3.0),
    measure=st.lists(
        st.tuples(st.floats(0.05, 5.0), st.floats(0.05, 5.0)), max_size=4
    ).map(lambda pairs: DiscreteMeasure(tuple(pairs))),
)


# ---------------------------------------------------------------------------
# discrete measures
# ---------------------------------------------------------------------------


def test_measure_canonical_form_sorts_and_merges():
    m = atoms((3.0, 1.0), (1.0, 2.0), (3.0, 0.5))
    assert m.atoms == ((1.0, 2.0), (3.0, 1.5))
    assert not m.is_zero
    assert m.total_weight == 3.5


def test_measure_rejects_bad_atoms():
    with pytest.raises(ParameterError):
        atoms((0.0, 1.0))
    with pytest.raises(ParameterError):
        atoms((1.0, 0.0))
    with pytest.raises(ParameterError):
        atoms((-1.0, 1.0))


# ---------------------------------------------------------------------------
# Stieltjes evaluation
# ---------------------------------------------------------------------------


def test_stieltjes_pure_power():
    f = StieltjesFunction(order=1.0, power=1.0)
    assert eval_stieltjes(f, 2.0) == 0.5


def test_stieltjes_single_atom():
    f = StieltjesFunction(order=1.0, measure=atoms((1.0, 1.0)))
    assert eval_stieltjes(f, 1.0) == 0.5


def test_stieltjes_mixed_frozen_value():
    # 0.25 + 4^(-1/2) + 3 * 6^(-1/2), frozen from the high-precision oracle
    f = StieltjesFunction(order=0.5, const=0.25, power=1.0, measure=atoms((2.0, 3.0)))
    assert eval_stieltjes(f, 4.0) == pytest.approx(
        1.974744871391589049098642037352945696, rel=1e-15
    )


def test_stieltjes_domain_error():
    f = StieltjesFunction(order=1.0, power=1.0)
    with pytest.raises(DomainError):
        eval_stieltjes(f, 0.0)
    with pytest.raises(DomainError):
        eval_stieltjes(f, -1.0)


def test_stieltjes_boundedness_and_constants():
    assert StieltjesFunction(order=1.0, const=2.0).is_constant
    assert not StieltjesFunction(order=1.0, power=1.0).is_bounded
    f = StieltjesFunction(order=2.0, const=1.0, measure=atoms((2.0, 4.0)))
    assert f.is_bounded and not f.is_constant
    assert f.value_at_zero() == pytest.approx(1.0 + 4.0 / 4.0)
    with pytest.raises(ParameterError):
        StieltjesFunction(order=0.0, const=1.0)
    with pytest.raises(ParameterError):
        StieltjesFunction(order=1.0, const=-0.5)


@given(stieltjes_functions)
def test_stieltjes_nonincreasing(f):
    grid = np.linspace(0.05, 20.0, 40)
    values = eval_stieltjes(f, grid)
    assert np.all(np.diff(values) <= 0.0)


@given(stieltjes_functions)
def test_stieltjes_is_completely_monotone(f):
    report = check_complete_monotonicity(f, np.linspace(0.1, 5.0, 12), max_order=8)
    assert report.passed, report


@given(
    st.floats(1.5, 3.0),
    st.floats(0.0, 5.0),
    st.floats(0.0, 2.0),
    st.lists(st.tuples(st.floats(0.05, 100.0), st.floats(0.05, 100.0)), max_size=4),
)
def test_stieltjes_limit_at_infinity(order, const, power, pairs):
    # decay of the non-constant parts is 10^(-6*order) times bounded weights,
    # which sits far below the 1e-5 acceptance band for order >= 1.5
    f = StieltjesFunction(order, const, power, DiscreteMeasure(tuple(pairs)))
    assert abs(eval_stieltjes(f, 1e6) - const) <= 1e-5 * (1.0 + const)


# ---------------------------------------------------------------------------
# complete Bernstein evaluation
# ---------------------------------------------------------------------------


def test_complete_bernstein_identity():
    f = CompleteBernsteinFunction(order=1.0, power=1.0)
    assert eval_complete_bernstein(f, 3.0) == 3.0


def test_complete_bernstein_constant():
    f = CompleteBernsteinFunction(order=1.0, const=2.0)
    assert eval_complete_bernstein(f, 17.3) == 2.0
    assert f.is_constant


def test_complete_bernstein_atom():
    f = CompleteBernsteinFunction(order=2.0, measure=atoms((1.0, 1.0)))
    assert eval_complete_bernstein(f, 1.0) == 0.25


def test_complete_bernstein_domain_and_monotone():
    f = CompleteBernsteinFunction(order=1.5, const=0.5, power=0.25, measure=atoms((2.0, 1.0)))
    with pytest.raises(DomainError):
        eval_complete_bernstein(f, 0.0)
    grid = np.linspace(0.01, 10.0, 50)
    assert np.all(np.diff(eval_complete_bernstein(f, grid)) >= 0.0)


# ---------------------------------------------------------------------------
# Bernstein evaluation
# ---------------------------------------------------------------------------


def test_bernstein_at_zero_is_constant_term():
    f = BernsteinFunction(measure=atoms((1.0, 1.0)))
    assert eval_bernstein(f, 0.0) == 0.0


def test_bernstein_linear():
    f = BernsteinFunction(slope=2.0)
    assert eval_bernstein(f, 5.0) == 10.0


def test_bernstein_frozen_value():
    # 1 + 3 (1 - e^-2), frozen from the high-precision oracle
    f = BernsteinFunction(const=1.0, measure=atoms((2.0, 3.0)))
    assert eval_bernstein(f, 1.0) == pytest.approx(
        3.593994150290161924318001515082546790, rel=1e-15
    )


def test_bernstein_domain_error():
    with pytest.raises(DomainError):
        eval_bernstein(BernsteinFunction(slope=1.0), -0.1)


@given(bernstein_functions)
def test_bernstein_increasing_and_concave(f):
    grid = np.linspace(0.0, 8.0, 30)
    values = eval_bernstein(f, grid)
    first = np.diff(values) / np.diff(grid)
    assert np.all(first >= -1e-12)
    assert np.all(np.diff(first) <= 1e-12)


# ---------------------------------------------------------------------------
# completely monotone wrappers
# ---------------------------------------------------------------------------


def test_cm_mixture_folds_zero_rate_into_constant():
    f = CompletelyMonotoneFunction.exp_mixture([(0.0, 2.0), (1.0, 1.0)])
    assert f.const == 2.0
    assert f(0.0) == 3.0
    assert f.is_bounded and not f.is_constant
    assert CompletelyMonotoneFunction.exp_mixture([(0.0, 1.5)]).is_constant


def test_cm_from_stieltjes_delegates():
    inner = StieltjesFunction(order=1.0, power=1.0)
    f = CompletelyMonotoneFunction.from_stieltjes(inner)
    assert f(2.0) == 0.5
    assert not f.is_bounded


def test_cm_rejects_double_representation():
    with pytest.raises(ParameterError):
        CompletelyMonotoneFunction(
            stieltjes=StieltjesFunction(order=1.0, power=1.0), const=1.0
        )


# ---------------------------------------------------------------------------
# complete monotonicity checker
# ---------------------------------------------------------------------------


def test_cm_check_passes_for_exponential():
    report = check_complete_monotonicity(
        lambda w: math.exp(-w), np.linspace(0.1, 5.0, 12), max_order=8
    )
    assert report.passed


def test_cm_check_fails_for_increasing_function():
    report = check_complete_monotonicity(
        lambda w: w, np.linspace(0.1, 5.0, 12), max_order=8
    )
    assert not report.passed
    assert report.first_violation_order == 1


def test_cm_check_passes_for_stieltjes_atoms():
    f = StieltjesFunction(order=2.0, measure=atoms((1.0, 1.0), (3.0, 2.0)))
    report = check_complete_monotonicity(f, np.linspace(0.1, 5.0, 12), max_order=8)
    assert report.passed


def test_cm_check_argument_validation():
    with pytest.raises(ParameterError):
        check_complete_monotonicity(math.exp, np.linspace(0.1, 1.0, 5), max_order=8)
    with pytest.raises(ParameterError):
        check_complete_monotonicity(math.exp, np.array([0.1, 0.1, 0.2]), max_order=1)
    with pytest.raises(ParameterError):
        check_complete_monotonicity(math.exp, np.linspace(0.1, 1.0, 12), max_order=9)


# ---------------------------------------------------------------------------
# gamma and the product-exponential integral identity
# ---------------------------------------------------------------------------


def test_gamma_against_math_gamma():
    for x in (0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 7.25, 12.0):
        assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)
    with pytest.raises(DomainError):
        gamma(0.0)


def test_identity_trivial_cases():
    assert gamma(1.0) / 2.0 == pytest.approx(0.5, rel=1e-14)
    assert stieltjes_kernel_identity_check(1.0, 1.0, 1.0) <= 1e-8
    assert stieltjes_kernel_identity_check(2.0, 0.5, 1.5) <= 1e-8


def test_identity_half_order_frozen_value():
    # Gamma(1/2)/4^(1/2) with sqrt(pi) frozen from the high-precision oracle
    approx = exponential_product_integral(0.5, 2.0, 2.0)
    assert approx == pytest.approx(1.772453850905516027 / 2.0, rel=1e-10)
    assert stieltjes_kernel_identity_check(0.5, 2.0, 2.0) <= 1e-8


def test_identity_full_parameter_grid():
    worst = max(
        stieltjes_kernel_identity_check(lam, s, t)
        for lam in (0.5, 1.0, 2.0)
        for s in (0.5, 1.0, 2.0)
        for t in (0.5, 1.0, 2.0)
    )
    assert worst <= 1e-8


@given(st.floats(0.3, 5.0), st.floats(0.2, 3.0), st.floats(0.2, 3.0))
def test_identity_generic_orders(lam, s, t):
    assert stieltjes_kernel_identity_check(lam, s, t) <= 1e-8


def test_identity_parameter_validation():
    with pytest.raises(DomainError):
        stieltjes_kernel_identity_check(0.0, 1.0, 1.0)
    with pytest.raises(ParameterError):
        stieltjes_kernel_identity_check(1.0, 1.0, 1.0, n_quad=32)
