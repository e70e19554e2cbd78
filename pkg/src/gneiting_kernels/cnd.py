"""Conditionally negative definite functions on single and product spaces.

A CND function here is an immutable expression tree.  Leaves are a small
catalog of distance transforms whose conditional negative definiteness on
their declared space kinds is classical (and re-certified empirically by the
test suite); internal nodes are the three closure operations:

* ``bernstein_compose``  — f(g(t) + h(u)) for a Bernstein function f,
* ``euclidean_cross``    — the bounded Gaussian-mixture cross term coupling
  R^n with another space,
* ``bounded_complement`` — M minus a two-space Gneiting kernel.

Each node carries conservative structural flags (``nonnegative``,
``positive``, ``strict_at_zero``).  A flag is set only when a sufficient
syntactic condition guarantees the property; when a flag is False the
property may still hold and can be established at runtime with
:func:`strictness_check`.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, ParameterError
from .linalg import sym_eig_extremes
from .spaces import Discrete, Space, as_space_tuple, product_distances
from .special_functions import BernsteinFunction, eval_bernstein


def _as_distance(d):
    arr = np.asarray(d, dtype=float)
    if np.any(arr < 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError("distances must be finite and nonnegative")
    return arr


@dataclass(frozen=True)
class SlotSpec:
    """Constraint a CND function places on one factor space."""

    kinds: Optional[frozenset] = None  # None: any space kind
    max_diameter: Optional[float] = None

    def accepts(self, space: Space) -> bool:
        if self.kinds is not None and space.kind not in self.kinds:
            return False
        if self.max_diameter is not None:
            bound = space.diameter_bound
            if bound is None or bound > self.max_diameter + 1e-12:
                return False
        return True


ANY_SLOT = SlotSpec()


class CNDFunction:
    """Base class for CND expression trees; evaluation accepts arrays."""

    slots: Tuple[SlotSpec, ...] = (ANY_SLOT,)
    nonnegative: bool = True
    positive: bool = False
    strict_at_zero: bool = False

    @property
    def n_slots(self) -> int:
        return len(self.slots)

    def evaluate(self, *dists):
        raise NotImplementedError

    def __call__(self, *dists):
        return self.evaluate(*dists)

    def value_at_origin(self) -> float:
        return float(self.evaluate(*([0.0] * self.n_slots)))

    def validate_spaces(self, spaces) -> None:
        spaces = as_space_tuple(spaces)
        if len(spaces) != self.n_slots:
            raise ParameterError(
                "%s consumes %d distance slots but got %d spaces"
                % (self.describe(), self.n_slots, len(spaces))
            )
        for slot, space in zip(self.slots, spaces):
            if not slot.accepts(space):
                raise ParameterError(
                    "%s is not admissible on %s" % (self.describe(), space.describe())
                )

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.describe()


def _check_arity(fn: CNDFunction, dists):
    if len(dists) != fn.n_slots:
        raise ParameterError(
            "%s expects %d distances, got %d" % (fn.describe(), fn.n_slots, len(dists))
        )


# ---------------------------------------------------------------------------
# atoms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerDistance(CNDFunction):
    """t^exponent on Euclidean-type distances; CND for exponent in (0, 2]."""

    exponent: float

    def __post_init__(self):
        if not (0.0 < self.exponent <= 2.0):
            raise ParameterError("power exponent must lie in (0, 2]")

    slots = (SlotSpec(kinds=frozenset({"euclidean", "interval"})),)
    nonnegative = True
    positive = False
    strict_at_zero = True

    def evaluate(self, *dists):
        _check_arity(self, dists)
        return _as_distance(dists[0]) ** self.exponent

    def describe(self):
        return "power(s=%g)" % self.exponent


@dataclass(frozen=True)
class GeodesicDistance(CNDFunction):
    """The geodesic distance itself, t on [0, pi]; CND on spheres and circles."""

    slots = (SlotSpec(kinds=frozenset({"sphere", "circle"}), max_diameter=math.pi),)
    nonnegative = True
    positive = False
    strict_at_zero = True

    def evaluate(self, *dists):
        _check_arity(self, dists)
        return _as_distance(dists[0]) + 0.0

    def describe(self):
        return "geodesic"


@dataclass(frozen=True)
class CosineComplement(CNDFunction):
    """3 - cos t on geodesic distances.

    CND because sum c_j c_k (3 - cos d_jk) = -|sum c_j x_j|^2 under zero-sum
    coefficients, with x_j the unit vectors realizing the distances.
    """

    slots = (SlotSpec(kinds=frozenset({"sphere", "circle"}), max_diameter=math.pi),)
    nonnegative = True
    positive = True
    strict_at_zero = True

    def evaluate(self, *dists):
        _check_arity(self, dists)
        return 3.0 - np.cos(_as_distance(dists[0]))

    def describe(self):
        return "three_minus_cos"


@dataclass(frozen=True)
class SineDistance(CNDFunction):
    """sin u on interval distances up to pi/2.

    A known member of the CND catalog for segments of the real line; it is
    re-certified empirically by the projected-eigenvalue tests.
    """

    slots = (SlotSpec(kinds=frozenset({"interval"}), max_diameter=math.pi / 2.0),)
    nonnegative = True
    positive = False
    strict_at_zero = True

    def evaluate(self, *dists):
        _check_arity(self, dists)
        return np.sin(_as_distance(dists[0]))

    def describe(self):
        return "sin"


@dataclass(frozen=True)
class Constant(CNDFunction):
    """A constant c >= 0 (CND: zero-sum quadratic forms annihilate constants)."""

    value: float
    arity: int = 1

    def __post_init__(self):
        if self.value < 0.0:
            raise ParameterError("constant atom must be nonnegative")
        if self.arity < 1:
            raise ParameterError("constant atom arity must be >= 1")
        object.__setattr__(self, "slots", tuple(ANY_SLOT for _ in range(self.arity)))

    nonnegative = True
    strict_at_zero = False

    @property
    def positive(self):
        return self.value > 0.0

    def evaluate(self, *dists):
        _check_arity(self, dists)
        shape = np.broadcast(*[np.asarray(d, dtype=float) for d in dists]).shape
        return np.full(shape, self.value) if shape else np.float64(self.value)

    def describe(self):
        return "constant(%g)" % self.value


@dataclass(frozen=True)
class Shifted(CNDFunction):
    """inner + offset with offset >= 0; preserves CND and strictness."""

    inner: CNDFunction
    offset: float

    def __post_init__(self):
        if self.offset < 0.0:
            raise ParameterError("shift offset must be nonnegative")
        object.__setattr__(self, "slots", self.inner.slots)

    @property
    def nonnegative(self):
        return self.inner.nonnegative

    @property
    def positive(self):
        return self.inner.positive or (self.offset > 0.0 and self.inner.nonnegative)

    @property
    def strict_at_zero(self):
        return self.inner.strict_at_zero

    def evaluate(self, *dists):
        return self.inner.evaluate(*dists) + self.offset

    def describe(self):
        return "shift(+%g, %s)" % (self.offset, self.inner.describe())


def shifted(inner: CNDFunction, offset: float) -> CNDFunction:
    return Shifted(inner, float(offset))


# ---------------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BernsteinCompose(CNDFunction):
    """phi(t, u) = f(g(t) + h(u)) for a Bernstein outer function f."""

    f: BernsteinFunction
    g: CNDFunction
    h: CNDFunction

    def __post_init__(self):
        if not self.g.nonnegative or not self.h.nonnegative:
            raise ParameterError("bernstein_compose needs nonnegative-valued g and h")
        object.__setattr__(self, "slots", self.g.slots + self.h.slots)

    nonnegative = True

    @property
    def positive(self):
        # f(w) >= f.const everywhere on [0, inf)
        return self.f.const > 0.0

    @property
    def strict_at_zero(self):
        return (
            self.f.is_strictly_increasing
            and self.g.strict_at_zero
            and self.h.strict_at_zero
        )

    def evaluate(self, *dists):
        _check_arity(self, dists)
        k = self.g.n_slots
        inner = self.g.evaluate(*dists[:k]) + self.h.evaluate(*dists[k:])
        return eval_bernstein(self.f, inner)

    def describe(self):
        return "bernstein_compose(%s, %s, %s)" % (
            self.f.describe(),
            self.g.describe(),
            self.h.describe(),
        )


def bernstein_compose(f: BernsteinFunction, g: CNDFunction, h: CNDFunction) -> CNDFunction:
    return BernsteinCompose(f, g, h)


@dataclass(frozen=True)
class EuclideanCross(CNDFunction):
    """(t, u) -> h(0)^(-n/2) - h(u)^(-n/2) exp(-f(t^2 / h(u))) on R^n x Y.

    The bounded cross construction: t is a Euclidean distance, h a
    positive-valued CND function on the second factor, f a nonzero Bernstein
    function.  Values lie in [0, h(0)^(-n/2)] because CND functions satisfy
    h(u) >= h(0).
    """

    f: BernsteinFunction
    h: CNDFunction
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ParameterError("Euclidean dimension must be >= 1")
        if not self.h.positive:
            raise ParameterError("euclidean_cross needs a positive-valued h")
        if not self.f.is_positive_on_open_axis:
            raise ParameterError("euclidean_cross needs a nonzero Bernstein function")
        object.__setattr__(
            self, "slots", (SlotSpec(kinds=frozenset({"euclidean"})),) + self.h.slots
        )

    nonnegative = True

    @property
    def positive(self):
        return self.f.const > 0.0

    @property
    def strict_at_zero(self):
        return self.f.is_strictly_increasing and self.h.strict_at_zero

    def evaluate(self, *dists):
        _check_arity(self, dists)
        t = _as_distance(dists[0])
        h_val = self.h.evaluate(*dists[1:])
        h0 = float(self.h.evaluate(*([0.0] * self.h.n_slots)))
        half_dim = 0.5 * self.dim
        return h0 ** (-half_dim) - h_val ** (-half_dim) * np.exp(
            -eval_bernstein(self.f, t * t / h_val)
        )

    def describe(self):
        return "euclidean_cross(%s, %s, dim=%d)" % (
            self.f.describe(),
            self.h.describe(),
            self.dim,
        )


def euclidean_cross(f: BernsteinFunction, h: CNDFunction, dim: int) -> CNDFunction:
    return EuclideanCross(f, h, dim)


@dataclass(frozen=True)
class BoundedComplement(CNDFunction):
    """phi(t, u) = bound - F_r(t, u) for a bounded two-space Gneiting kernel.

    The kernel attains its supremum at the origin (its Stieltjes part is
    nonincreasing and CND inputs are minimized at zero distance), so the
    precondition is checked as bound >= F_r(0, 0).
    """

    bound: float
    model: object  # TwoSpaceGneiting; duck-typed to avoid a circular import

    def __post_init__(self):
        from .models import TwoSpaceGneiting

        if not isinstance(self.model, TwoSpaceGneiting):
            raise ParameterError("bounded_complement expects a two-space Gneiting kernel")
        if not self.model.f.is_bounded:
            raise ParameterError("bounded_complement requires a bounded Stieltjes part")
        if not self.model.g.nonnegative:
            raise ParameterError("bounded_complement requires nonnegative g")
        peak = self.model.value_at_origin()
        if self.bound < peak - 1e-15 * max(1.0, abs(peak)):
            raise ParameterError(
                "bound %g is below the kernel maximum %g" % (self.bound, peak)
            )
        object.__setattr__(self, "slots", self.model.g.slots + self.model.h.slots)

    nonnegative = True
    positive = False

    @property
    def strict_at_zero(self):
        return (
            not self.model.f.measure.is_zero
            and self.model.g.strict_at_zero
            and self.model.h.strict_at_zero
        )

    def evaluate(self, *dists):
        _check_arity(self, dists)
        return self.bound - self.model.evaluate(*dists)

    def describe(self):
        return "bounded_complement(M=%g, %s)" % (self.bound, self.model.describe())


def bounded_complement(bound: float, model) -> CNDFunction:
    return BoundedComplement(float(bound), model)


# ---------------------------------------------------------------------------
# empirical certification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CNDVerdict:
    max_projected_eig: float
    tol: float
    passed: bool
    n: int
    scale: float
    seed: Optional[int] = None

    def to_dict(self):
        return {
            "max_eig": self.max_projected_eig,
            "tol": self.tol,
            "pass": self.passed,
            "n": self.n,
            "scale": self.scale,
            "seed": self.seed,
        }


def check_cnd_empirical(
    phi: CNDFunction, spaces, points, tol: float = 1e-9, seed: Optional[int] = None
) -> CNDVerdict:
    """Projected-eigenvalue test of conditional negative definiteness.

    Builds A_jk = phi(distances(p_j, p_k)) and B = P A P with the centering
    projector P = I - (1/n) 11^T.  CND means the quadratic form is
    nonpositive on the zero-sum subspace, i.e. max eig of B <= 0 up to
    round-off; we pass iff it is <= tol * max(1, max|A|).
    """
    spaces = as_space_tuple(spaces)
    phi.validate_spaces(spaces)
    n = len(points)
    if n < 2:
        raise ParameterError("need at least two points for the CND check")
    k = len(spaces)
    dist = [np.zeros((n, n)) for _ in range(k)]
    for j in range(n):
        for l in range(j + 1, n):
            ds = product_distances(spaces, points[j], points[l])
            for m in range(k):
                dist[m][j, l] = ds[m]
                dist[m][l, j] = ds[m]
    a = np.asarray(phi.evaluate(*dist), dtype=float)
    scale = max(1.0, float(np.max(np.abs(a))))
    proj = np.eye(n) - np.ones((n, n)) / n
    b = proj @ a @ proj
    b = (b + b.T) / 2.0
    _, max_eig = sym_eig_extremes(b)
    return CNDVerdict(
        max_projected_eig=max_eig,
        tol=tol,
        passed=max_eig <= tol * scale,
        n=n,
        scale=scale,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# strictness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StrictnessVerdict:
    passed: bool
    min_margin: float
    witness: Optional[Tuple[float, ...]]  # a nonzero tuple with phi(d) <= phi(0)


def default_strictness_grids(
    spaces,
    points_per_slot: int = 25,
    euclidean_cap: float = 10.0,
) -> Tuple[np.ndarray, ...]:
    """Per-slot distance grids over the declared diameter sets.

    Unbounded (Euclidean) slots are capped at ``euclidean_cap``; a trivial
    space contributes only the zero distance.
    """
    spaces = as_space_tuple(spaces)
    grids = []
    for space in spaces:
        if not space.nontrivial:
            grids.append(np.array([0.0]))
        elif isinstance(space, Discrete):
            grids.append(np.array([0.0, 1.0]))
        else:
            bound = space.diameter_bound
            top = euclidean_cap if bound is None else bound
            grids.append(np.linspace(0.0, top, points_per_slot))
    return tuple(grids)


def strictness_check(phi: CNDFunction, grids: Sequence) -> StrictnessVerdict:
    """Pass iff phi(d) > phi(0, ..., 0) at every sampled nonzero tuple."""
    grids = [np.asarray(g, dtype=float) for g in grids]
    if len(grids) != phi.n_slots:
        raise ParameterError(
            "%s expects %d grids, got %d" % (phi.describe(), phi.n_slots, len(grids))
        )
    origin = phi.value_at_origin()
    min_margin = math.inf
    argmin = None
    for combo in itertools.product(*grids):
        if all(d == 0.0 for d in combo):
            continue
        margin = float(phi.evaluate(*combo)) - origin
        if margin < min_margin:
            min_margin = margin
            argmin = tuple(float(d) for d in combo)
    if math.isinf(min_margin):
        # only the origin was sampled: strictness is vacuous
        return StrictnessVerdict(passed=True, min_margin=math.inf, witness=None)
    passed = min_margin > 0.0
    return StrictnessVerdict(
        passed=passed, min_margin=min_margin, witness=None if passed else argmin
    )
