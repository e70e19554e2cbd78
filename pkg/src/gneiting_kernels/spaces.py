"""Concrete (quasi-)metric spaces, product points, and deterministic sampling.

All built-in spaces are genuine metric spaces.  Distances are exactly
symmetric and exactly zero on the diagonal: each ``distance`` implementation
short-circuits on componentwise-equal inputs, so Gram diagonals are computed
from an exact 0.0 rather than a rounded arccos.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import ParameterError, SamplingError
from .rng import SplitMix64


class Space:
    """Base class; subclasses provide distance, sampling, and descriptors."""

    kind: str = "abstract"
    is_metric: bool = True

    @property
    def diameter_bound(self) -> Optional[float]:
        return None

    @property
    def nontrivial(self) -> bool:
        """True when the space contains at least two points."""
        return True

    def distance(self, x, y) -> float:
        raise NotImplementedError

    def sample_point(self, rng: SplitMix64):
        raise NotImplementedError

    def coordinate_labels(self, index: int) -> List[str]:
        raise NotImplementedError

    def flatten_point(self, point) -> List:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.describe()


@dataclass(frozen=True, repr=False)
class Euclidean(Space):
    """R^dim with the usual Euclidean distance; points are float vectors."""

    dim: int
    kind: str = "euclidean"

    def __post_init__(self):
        if self.dim < 1:
            raise ParameterError("Euclidean dimension must be >= 1")

    def distance(self, x, y) -> float:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != (self.dim,) or y.shape != (self.dim,):
            raise ParameterError("point has wrong shape for %s" % self.describe())
        if np.array_equal(x, y):
            return 0.0
        return float(np.sqrt(((x - y) ** 2).sum()))

    def sample_point(self, rng):
        # standard normal coordinates: O(1) typical separations
        return np.array([rng.normal() for _ in range(self.dim)])

    def coordinate_labels(self, index):
        return ["euclidean%d_x%d" % (index, j) for j in range(self.dim)]

    def flatten_point(self, point):
        return [float(v) for v in point]

    def describe(self):
        return "euclidean(dim=%d)" % self.dim


@dataclass(frozen=True, repr=False)
class SphereGeodesic(Space):
    """Unit sphere S^dim in R^(dim+1) with geodesic distance arccos(x . y)."""

    dim: int
    kind: str = "sphere"

    def __post_init__(self):
        if self.dim < 1:
            raise ParameterError("sphere dimension must be >= 1")

    @property
    def diameter_bound(self):
        return math.pi

    def distance(self, x, y) -> float:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != (self.dim + 1,) or y.shape != (self.dim + 1,):
            raise ParameterError("point has wrong shape for %s" % self.describe())
        if np.array_equal(x, y):
            return 0.0
        # clamping keeps round-off at |x.y| ~ 1 + 1e-16 from producing NaN
        return float(math.acos(min(1.0, max(-1.0, float(x @ y)))))

    def sample_point(self, rng):
        while True:
            v = np.array([rng.normal() for _ in range(self.dim + 1)])
            norm = float(np.sqrt((v * v).sum()))
            if norm > 1e-12:
                return v / norm

    def coordinate_labels(self, index):
        return ["sphere%d_x%d" % (index, j) for j in range(self.dim + 1)]

    def flatten_point(self, point):
        return [float(v) for v in point]

    def describe(self):
        return "sphere(dim=%d)" % self.dim


@dataclass(frozen=True, repr=False)
class Interval(Space):
    """The segment [0, length] with distance |x - y|."""

    length: float
    kind: str = "interval"

    def __post_init__(self):
        if not (self.length > 0.0):
            raise ParameterError("interval length must be positive")

    @property
    def diameter_bound(self):
        return self.length

    def distance(self, x, y) -> float:
        x = float(x)
        y = float(y)
        if not (0.0 <= x <= self.length and 0.0 <= y <= self.length):
            raise ParameterError("point outside %s" % self.describe())
        return abs(x - y)

    def sample_point(self, rng):
        return rng.uniform(0.0, self.length)

    def coordinate_labels(self, index):
        return ["interval%d_t" % index]

    def flatten_point(self, point):
        return [float(point)]

    def describe(self):
        return "interval(length=%g)" % self.length


@dataclass(frozen=True, repr=False)
class Circle(Space):
    """Unit circle (circumference 2*pi) with geodesic distance; points are angles."""

    kind: str = "circle"

    @property
    def diameter_bound(self):
        return math.pi

    def distance(self, x, y) -> float:
        x = float(x)
        y = float(y)
        if x == y:
            return 0.0
        delta = abs(x - y) % (2.0 * math.pi)
        return min(delta, 2.0 * math.pi - delta)

    def sample_point(self, rng):
        return rng.uniform(0.0, 2.0 * math.pi)

    def coordinate_labels(self, index):
        return ["circle%d_angle" % index]

    def flatten_point(self, point):
        return [float(point)]

    def describe(self):
        return "circle()"


@dataclass(frozen=True, repr=False)
class Discrete(Space):
    """Finite label set with the discrete 0/1 metric."""

    labels: Tuple[str, ...]
    kind: str = "discrete"

    def __post_init__(self):
        labels = tuple(str(v) for v in self.labels)
        if len(labels) == 0:
            raise ParameterError("discrete space needs at least one label")
        if len(set(labels)) != len(labels):
            raise ParameterError("discrete labels must be unique")
        object.__setattr__(self, "labels", tuple(sorted(labels)))

    @property
    def diameter_bound(self):
        return 1.0

    @property
    def nontrivial(self):
        return len(self.labels) >= 2

    def distance(self, x, y) -> float:
        if x not in self.labels or y not in self.labels:
            raise ParameterError("unknown label for %s" % self.describe())
        return 0.0 if x == y else 1.0

    def sample_point(self, rng):
        return self.labels[rng.randint(len(self.labels))]

    def coordinate_labels(self, index):
        return ["discrete%d_label" % index]

    def flatten_point(self, point):
        return [point]

    def describe(self):
        return "discrete(%s)" % ",".join(self.labels)


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProductPoint:
    """Ordered components, one per factor space (kept heterogeneous, never flattened)."""

    components: Tuple

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]


SpacesLike = Union[Space, Sequence[Space]]


def as_space_tuple(spaces: SpacesLike) -> Tuple[Space, ...]:
    if isinstance(spaces, Space):
        return (spaces,)
    spaces = tuple(spaces)
    if not spaces or not all(isinstance(s, Space) for s in spaces):
        raise ParameterError("expected a Space or a nonempty sequence of Spaces")
    return spaces


def product_distances(spaces: SpacesLike, p: ProductPoint, q: ProductPoint) -> Tuple[float, ...]:
    """Per-component distances of two product points."""
    spaces = as_space_tuple(spaces)
    if len(p) != len(spaces) or len(q) != len(spaces):
        raise ParameterError("point arity does not match the space product")
    return tuple(s.distance(x, y) for s, x, y in zip(spaces, p, q))


def _product_distinct(spaces, p, q, min_sep: float) -> bool:
    """At least one component pair separated by more than min_sep."""
    return any(d > min_sep for d in product_distances(spaces, p, q))


def sample_distinct(
    spaces: SpacesLike,
    n: int,
    seed: int,
    min_sep: float = 1e-6,
) -> List[ProductPoint]:
    """n pairwise product-distinct points, deterministic in the seed.

    Distinctness means at least one component differs by more than
    ``min_sep``; candidates violating it are rejected and redrawn, with a
    total budget of 10^4 * n draws.  A single discrete space asked for
    exactly all of its labels returns them in canonical order.
    """
    spaces = as_space_tuple(spaces)
    if n < 1:
        raise ParameterError("need n >= 1 points")
    if min_sep < 0.0:
        raise ParameterError("min_sep must be nonnegative")

    if len(spaces) == 1 and isinstance(spaces[0], Discrete):
        labels = spaces[0].labels
        if n == len(labels):
            return [ProductPoint((lab,)) for lab in labels]

    rng = SplitMix64(seed)
    budget = 10_000 * n
    accepted: List[ProductPoint] = []
    draws = 0
    while len(accepted) < n:
        if draws >= budget:
            raise SamplingError(
                "rejection budget exhausted sampling %d points from (%s)"
                % (n, ", ".join(s.describe() for s in spaces))
            )
        draws += 1
        candidate = ProductPoint(tuple(s.sample_point(rng) for s in spaces))
        if all(_product_distinct(spaces, candidate, acc, min_sep) for acc in accepted):
            accepted.append(candidate)
    return accepted


def pair_at_distance(space: Space, d: float) -> Tuple:
    """Two points of the space at the prescribed distance (d in its diameter set)."""
    if d < 0.0:
        raise ParameterError("distance must be nonnegative")
    if isinstance(space, Euclidean):
        a = np.zeros(space.dim)
        b = np.zeros(space.dim)
        b[0] = d
        return a, b
    if isinstance(space, SphereGeodesic):
        if d > math.pi + 1e-12:
            raise ParameterError("sphere distances cannot exceed pi")
        a = np.zeros(space.dim + 1)
        a[0] = 1.0
        b = np.zeros(space.dim + 1)
        b[0] = math.cos(d)
        b[1] = math.sin(d)
        return a, b
    if isinstance(space, Interval):
        if d > space.length + 1e-12:
            raise ParameterError("distance exceeds the interval length")
        return 0.0, min(d, space.length)
    if isinstance(space, Circle):
        if d > math.pi + 1e-12:
            raise ParameterError("circle geodesic distances cannot exceed pi")
        return 0.0, d
    if isinstance(space, Discrete):
        if d == 0.0:
            return space.labels[0], space.labels[0]
        if not space.nontrivial:
            raise ParameterError("trivial discrete space has no positive distances")
        return space.labels[0], space.labels[1]
    raise ParameterError("unsupported space %r" % (space,))


def points_to_csv(spaces: SpacesLike, points: Sequence[ProductPoint]) -> str:
    """One point per row; components flattened with named coordinates."""
    spaces = as_space_tuple(spaces)
    header = []
    for i, s in enumerate(spaces):
        header.extend(s.coordinate_labels(i))
    lines = [",".join(header)]
    for p in points:
        row = []
        for s, comp in zip(spaces, p):
            row.extend(
                v if isinstance(v, str) else repr(v) for v in s.flatten_point(comp)
            )
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
