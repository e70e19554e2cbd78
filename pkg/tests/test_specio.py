import math

import pytest

from gneiting_kernels import fixtures
from gneiting_kernels.errors import ParameterError
from gneiting_kernels.spaces import Circle, Discrete, Euclidean, Interval, SphereGeodesic
from gneiting_kernels.specio import (
    cnd_to_spec,
    function_to_spec,
    model_to_spec,
    parse_cnd,
    parse_function,
    parse_grid,
    parse_model,
    parse_space,
    space_to_spec,
)
from gneiting_kernels.special_functions import (
    BernsteinFunction,
    CompleteBernsteinFunction,
    CompletelyMonotoneFunction,
    DiscreteMeasure,
    StieltjesFunction,
)


def test_function_round_trips():
    functions = [
        StieltjesFunction(order=0.5, const=0.25, power=1.0, measure=DiscreteMeasure(((2.0, 3.0),))),
        CompleteBernsteinFunction(order=2.0, const=0.5, power=0.25),
        BernsteinFunction(const=0.5, slope=1.0, measure=DiscreteMeasure(((1.0, 1.0),))),
        CompletelyMonotoneFunction.exp_mixture([(0.0, 0.5), (2.0, 1.0)]),
    ]
    for fn in functions:
        spec = function_to_spec(fn)
        back = parse_function(spec)
        if isinstance(fn, CompletelyMonotoneFunction):
            assert back.const == fn.const and back.measure == fn.measure
        else:
            assert back == fn


def test_function_spec_errors():
    with pytest.raises(ParameterError):
        parse_function({"no_class": True})
    with pytest.raises(ParameterError):
        parse_function({"class": "mystery"})
    with pytest.raises(ParameterError):
        parse_function({"class": "stieltjes", "lambda": 1.0, "atoms": [[1.0]]})


def test_space_round_trips():
    spaces = [Euclidean(3), SphereGeodesic(2), Interval(1.5), Circle(), Discrete(("a", "b"))]
    for space in spaces:
        assert parse_space(space_to_spec(space)) == space
    with pytest.raises(ParameterError):
        parse_space({"kind": "hyperbolic", "param": 2})
    with pytest.raises(ParameterError):
        parse_space({"kind": "discrete", "param": "ab"})


def test_cnd_round_trips():
    for name, (phi, _) in fixtures.cnd_fixtures().items():
        spec = cnd_to_spec(phi)
        back = parse_cnd(spec)
        assert back.describe() == phi.describe(), name


def test_cnd_parse_errors():
    with pytest.raises(ParameterError):
        parse_cnd({"type": "unknown"})
    with pytest.raises(ParameterError):
        parse_cnd(
            {
                "type": "bernstein_compose",
                "f": {"class": "stieltjes", "lambda": 1.0, "constants": {"D": 1.0}},
                "g": {"type": "geodesic"},
                "h": {"type": "geodesic"},
            }
        )


def test_bounded_complement_spec_defaults_bound_to_peak():
    phi, _ = fixtures.cnd_fixtures()["complement-two-space"]
    spec = cnd_to_spec(phi)
    spec_no_bound = dict(spec)
    spec_no_bound["bound"] = None
    back = parse_cnd(spec_no_bound)
    assert back.bound == pytest.approx(phi.bound, rel=1e-15)


def test_model_round_trips():
    registries = [
        fixtures.pd_certification_models(),
        fixtures.spd_guaranteed_models(),
    ]
    for registry in registries:
        for name, model in registry.items():
            spec = model_to_spec(model)
            back = parse_model(spec)
            assert back.describe() == model.describe(), name
            assert back.spaces == model.spaces


def test_model_spec_errors():
    with pytest.raises(ParameterError):
        parse_model({"variant": "G_r"})
    good = model_to_spec(fixtures.open_case_model())
    bad = dict(good)
    bad["variant"] = "Z_r"
    with pytest.raises(ParameterError):
        parse_model(bad)
    mismatched = dict(good)
    mismatched["f"] = function_to_spec(fixtures.identity_complete_bernstein())
    with pytest.raises(ParameterError):
        parse_model(mismatched)


def test_grid_parsing():
    axes = parse_grid(
        {
            "axes": [
                [0.0, 1.0],
                {"start": 0.0, "stop": 1.0, "count": 11},
                {"start": 2.0, "stop": 2.0, "count": 1},
            ]
        },
        3,
    )
    assert axes[0] == [0.0, 1.0]
    assert len(axes[1]) == 11
    assert axes[1][-1] == pytest.approx(1.0)
    assert axes[2] == [2.0]
    with pytest.raises(ParameterError):
        parse_grid({"axes": [[0.0]]}, 2)
    with pytest.raises(ParameterError):
        parse_grid({"axes": [[0.0], [math.inf]]}, 2)
    with pytest.raises(ParameterError):
        parse_grid({"axes": [[0.0], {"start": 0, "stop": 1, "count": 0}]}, 2)
