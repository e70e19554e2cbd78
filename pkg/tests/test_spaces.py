import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gneiting_kernels.errors import ParameterError, SamplingError
from gneiting_kernels.rng import SplitMix64
from gneiting_kernels.spaces import (
    Circle,
    Discrete,
    Euclidean,
    Interval,
    ProductPoint,
    SphereGeodesic,
    pair_at_distance,
    points_to_csv,
    product_distances,
    sample_distinct,
)

ALL_SPACES = [
    Euclidean(2),
    SphereGeodesic(2),
    Interval(math.pi / 2.0),
    Circle(),
    Discrete(("a", "b", "c")),
]


def test_euclidean_pythagorean():
    assert Euclidean(2).distance(np.array([0.0, 0.0]), np.array([3.0, 4.0])) == 5.0


def test_sphere_antipodal():
    x = np.array([1.0, 0.0, 0.0])
    assert SphereGeodesic(2).distance(x, -x) == pytest.approx(math.pi, abs=1e-15)


def test_circle_shorter_arc():
    assert Circle().distance(0.0, 3.0 * math.pi / 2.0) == pytest.approx(math.pi / 2.0)


def test_discrete_metric():
    d = Discrete(("x", "y"))
    assert d.distance("x", "x") == 0.0
    assert d.distance("x", "y") == 1.0
    with pytest.raises(ParameterError):
        d.distance("x", "zz")


def test_interval_bounds_checked():
    seg = Interval(1.0)
    assert seg.distance(0.25, 1.0) == 0.75
    with pytest.raises(ParameterError):
        seg.distance(-0.1, 0.5)


@pytest.mark.parametrize("space", ALL_SPACES, ids=lambda s: s.kind)
def test_quasi_metric_axioms_on_random_pairs(space):
    rng = SplitMix64(2024)
    for _ in range(1000):
        x = space.sample_point(rng)
        y = space.sample_point(rng)
        dxy = space.distance(x, y)
        assert dxy >= 0.0
        assert space.distance(x, x) == 0.0
        assert space.distance(y, x) == dxy  # symmetry, exact
        bound = space.diameter_bound
        if bound is not None:
            assert dxy <= bound + 1e-12


@pytest.mark.parametrize("space", ALL_SPACES, ids=lambda s: s.kind)
def test_triangle_inequality_on_random_triples(space):
    rng = SplitMix64(99)
    for _ in range(1000):
        x, y, z = (space.sample_point(rng) for _ in range(3))
        assert space.distance(x, z) <= space.distance(x, y) + space.distance(y, z) + 1e-12


def test_sample_discrete_exhaustive_is_canonical():
    pts = sample_distinct(Discrete(("c", "a", "b")), 3, seed=123)
    assert [p[0] for p in pts] == ["a", "b", "c"]


def test_sample_sphere_two_points_respect_min_sep():
    sphere = SphereGeodesic(2)
    pts = sample_distinct(sphere, 2, seed=5, min_sep=0.1)
    assert sphere.distance(pts[0][0], pts[1][0]) > 0.1


def test_sample_product_pairwise_distinct_oracle():
    spaces = (SphereGeodesic(2), Interval(math.pi / 2.0), Euclidean(1))
    pts = sample_distinct(spaces, 30, seed=42, min_sep=1e-6)
    assert len(pts) == 30
    # O(n^2) pairwise verification
    for j in range(30):
        for k in range(j + 1, 30):
            assert any(d > 1e-6 for d in product_distances(spaces, pts[j], pts[k]))


def test_sample_deterministic_in_seed():
    spaces = (Euclidean(2), Circle())
    a = sample_distinct(spaces, 8, seed=7)
    b = sample_distinct(spaces, 8, seed=7)
    for p, q in zip(a, b):
        assert np.array_equal(p[0], q[0]) and p[1] == q[1]
    c = sample_distinct(spaces, 8, seed=8)
    assert any(
        not np.array_equal(p[0], q[0]) or p[1] != q[1] for p, q in zip(a, c)
    )


def test_sample_budget_exhaustion_names_spaces():
    with pytest.raises(SamplingError, match="discrete"):
        sample_distinct(Discrete(("a", "b")), 5, seed=1)


def test_sample_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        sample_distinct(Euclidean(1), 0, seed=1)
    with pytest.raises(ParameterError):
        sample_distinct(Euclidean(1), 2, seed=1, min_sep=-1.0)


@given(st.integers(min_value=0, max_value=2**64 - 1))
def test_sampling_distinctness_property(seed):
    spaces = (SphereGeodesic(1), Interval(1.0))
    pts = sample_distinct(spaces, 6, seed=seed, min_sep=1e-3)
    for j in range(6):
        for k in range(j + 1, 6):
            assert any(d > 1e-3 for d in product_distances(spaces, pts[j], pts[k]))


@pytest.mark.parametrize("space", ALL_SPACES, ids=lambda s: s.kind)
def test_pair_at_distance_realizes_request(space):
    want = 1.0 if space.diameter_bound is None else space.diameter_bound / 2.0
    if space.kind == "discrete":
        want = 1.0
    a, b = pair_at_distance(space, want)
    assert space.distance(a, b) == pytest.approx(want, abs=1e-12)
    a, b = pair_at_distance(space, 0.0)
    assert space.distance(a, b) == 0.0


def test_points_to_csv_layout():
    spaces = (Euclidean(2), Discrete(("a", "b")))
    pts = [
        ProductPoint((np.array([0.0, 1.0]), "a")),
        ProductPoint((np.array([2.0, 3.0]), "b")),
    ]
    text = points_to_csv(spaces, pts)
    lines = text.strip().splitlines()
    assert lines[0] == "euclidean0_x0,euclidean0_x1,discrete1_label"
    assert lines[1] == "0.0,1.0,a"
    assert len(lines) == 3


def test_nontriviality_flags():
    assert Euclidean(1).nontrivial
    assert not Discrete(("only",)).nontrivial
    assert Discrete(("a", "b")).nontrivial
