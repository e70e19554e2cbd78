"""Kernel models on products of metric spaces, with SPD condition reports.

Six model families are provided.  Writing ``g`` for a CND function on the
first factor, ``h`` for a CND function on the remaining factor(s), ``f`` for
the outer function, and ``r`` for the coupling exponent:

* ``product``  F(t,u,v)   = f1(g(t)) * f2(h(u,v))     (f1, f2 completely monotone)
* ``F_r``      F_r(t,u)   = h(u)^-r  * f(g(t)/h(u))   (f generalized Stieltjes)
* ``G_r``      G_r(t,u,v) = h(u,v)^-r * f(g(t)/h(u,v))    (f gen. Stieltjes)
* ``H_r``      H_r(t,u,v) = g(t)^-r   * f(h(u,v)/g(t))    (f gen. Stieltjes)
* ``I_r``      I_r(t,u,v) = g(t)^-r   * f(g(t)/h(u,v))    (f gen. complete Bernstein)
* ``J_r``      J_r(t,u,v) = h(u,v)^-r * f(h(u,v)/g(t))    (f gen. complete Bernstein)

Every Gneiting-type model requires r >= order(f).  Positive-definiteness of
all six families holds under the construction preconditions; strictness is
decided by :func:`spd_report`, which applies the known necessary and
sufficient conditions and honestly reports ``PD_only`` or ``open_case``
outside their reach.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .cnd import CNDFunction, default_strictness_grids, strictness_check
from .errors import DomainError, ParameterError
from .spaces import ProductPoint, Space, as_space_tuple, pair_at_distance
from .special_functions import (
    CompleteBernsteinFunction,
    CompletelyMonotoneFunction,
    StieltjesFunction,
    eval_complete_bernstein,
    eval_stieltjes,
)

VERDICT_SPD = "SPD_guaranteed"
VERDICT_PD = "PD_only"
VERDICT_VIOLATED = "necessary_condition_violated"
VERDICT_OPEN = "open_case"

CLAUSE_G_NOT_STRICT = "g_not_strict"
CLAUSE_H_NOT_STRICT = "h_not_strict"
CLAUSE_F_CONSTANT = "f_constant"
CLAUSE_CRITICAL_NO_ATOMS = "critical_no_atoms"
CLAUSE_F1_CONSTANT = "f1_constant"
CLAUSE_F2_CONSTANT = "f2_constant"

# variant -> (prefactor is h, ratio is g/h)
_LAYOUT = {
    "G_r": (True, True),
    "H_r": (False, False),
    "I_r": (False, True),
    "J_r": (True, False),
}

# variant -> (slot group ignored when f is constant, slot group ignored in the
# critical r == order configuration); "x" is the first factor, "yz" the rest.
_WITNESS_GROUPS = {
    "G_r": ("x", "yz"),
    "J_r": ("x", "yz"),
    "H_r": ("yz", "x"),
    "I_r": ("yz", "x"),
}

_STIELTJES_VARIANTS = ("G_r", "H_r")
_BERNSTEIN_VARIANTS = ("I_r", "J_r")


def _as_arrays(dists):
    scalar = all(np.ndim(d) == 0 for d in dists)
    return [np.atleast_1d(np.asarray(d, dtype=float)) for d in dists], scalar


def _finish(values, scalar):
    values = np.asarray(values, dtype=float)
    return float(values.reshape(-1)[0]) if scalar else values


def _stieltjes_extended(f: StieltjesFunction, arg) -> np.ndarray:
    """Stieltjes evaluation extended continuously to 0 for bounded functions."""
    arg = np.asarray(arg, dtype=float)
    if np.any(arg < 0.0):
        raise DomainError("Stieltjes argument became negative")
    flat = np.atleast_1d(arg)
    zeros = flat == 0.0
    if not zeros.any():
        return eval_stieltjes(f, arg)
    if not f.is_bounded:
        raise DomainError("pole: unbounded Stieltjes part evaluated at argument 0")
    out = np.empty_like(flat)
    out[zeros] = f.value_at_zero()
    if (~zeros).any():
        out[~zeros] = eval_stieltjes(f, flat[~zeros])
    return out.reshape(arg.shape)


def _cm_values(f: CompletelyMonotoneFunction, arg: np.ndarray) -> np.ndarray:
    if f.stieltjes is not None:
        return _stieltjes_extended(f.stieltjes, arg)
    return np.asarray(f(arg), dtype=float)


def gneiting_formula(variant: str, f, r: float, g_value, h_value):
    """Shared evaluation of the four Gneiting layouts on raw values."""
    prefactor_is_h, ratio_g_over_h = _LAYOUT[variant]
    g_value = np.asarray(g_value, dtype=float)
    h_value = np.asarray(h_value, dtype=float)
    base = h_value if prefactor_is_h else g_value
    num, den = (g_value, h_value) if ratio_g_over_h else (h_value, g_value)
    if np.any(den <= 0.0):
        raise DomainError("pole: ratio denominator reached 0 in %s" % variant)
    if np.any(base <= 0.0):
        raise DomainError("pole: prefactor base reached 0 in %s" % variant)
    arg = num / den
    if isinstance(f, StieltjesFunction):
        f_vals = _stieltjes_extended(f, arg)
    else:
        if np.any(arg <= 0.0):
            raise DomainError("pole: complete Bernstein argument reached 0")
        f_vals = eval_complete_bernstein(f, arg)
    return base ** (-r) * f_vals


def _require(condition: bool, message: str):
    if not condition:
        raise ParameterError(message)


class KernelModel:
    """Base class: immutable models evaluable on distance tuples or arrays."""

    spaces: Tuple[Space, ...]

    @property
    def n_slots(self) -> int:
        return len(self.spaces)

    def evaluate(self, *dists):
        raise NotImplementedError

    def __call__(self, *dists):
        return self.evaluate(*dists)

    def value_at_origin(self) -> float:
        return float(self.evaluate(*([0.0] * self.n_slots)))

    def describe(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.describe()


def _validate_gneiting_inputs(variant, f, g, h, r, spaces, h_slots):
    _require(r >= f.order, "need r >= order, got r=%g < order=%g" % (r, f.order))
    _require(g.n_slots == 1, "g must consume exactly one distance slot")
    _require(h.n_slots == h_slots, "h must consume %d distance slot(s)" % h_slots)
    g.validate_spaces(spaces[:1])
    h.validate_spaces(spaces[1:])
    prefactor_is_h, ratio_g_over_h = _LAYOUT[variant]
    unbounded = f.power > 0.0
    # a function must be strictly positive when it is the prefactor base or
    # the ratio denominator; a pure ratio numerator may touch zero when f
    # extends continuously to 0 (bounded case)
    h_pinned = prefactor_is_h or ratio_g_over_h
    g_pinned = (not prefactor_is_h) or (not ratio_g_over_h)
    for fn, label, pinned in ((g, "g", g_pinned), (h, "h", h_pinned)):
        if pinned or unbounded:
            _require(
                fn.positive,
                "%s needs a positive-valued %s here" % (variant, label),
            )
        else:
            _require(
                fn.nonnegative,
                "%s needs a nonnegative-valued %s" % (variant, label),
            )


@dataclass(frozen=True)
class GneitingModel(KernelModel):
    """The four non-separable three-space models G_r, H_r, I_r, J_r."""

    variant: str
    f: object
    g: CNDFunction
    h: CNDFunction
    r: float
    spaces: Tuple[Space, ...]

    def __post_init__(self):
        object.__setattr__(self, "spaces", as_space_tuple(self.spaces))
        if self.variant not in _LAYOUT:
            raise ParameterError("unknown Gneiting variant %r" % (self.variant,))
        if self.variant in _STIELTJES_VARIANTS:
            _require(
                isinstance(self.f, StieltjesFunction),
                "%s requires a generalized Stieltjes function" % self.variant,
            )
        else:
            _require(
                isinstance(self.f, CompleteBernsteinFunction),
                "%s requires a generalized complete Bernstein function" % self.variant,
            )
        _require(len(self.spaces) == 3, "three factor spaces expected")
        _validate_gneiting_inputs(
            self.variant, self.f, self.g, self.h, self.r, self.spaces, h_slots=2
        )

    def evaluate(self, t, u=None, v=None):
        if u is None or v is None:
            raise ParameterError("%s expects three distances" % self.variant)
        (t, u, v), scalar = _as_arrays((t, u, v))
        g_val = self.g.evaluate(t)
        h_val = self.h.evaluate(u, v)
        return _finish(gneiting_formula(self.variant, self.f, self.r, g_val, h_val), scalar)

    def describe(self):
        return "%s(r=%g, f=%s, g=%s, h=%s)" % (
            self.variant,
            self.r,
            self.f.describe(),
            self.g.describe(),
            self.h.describe(),
        )


@dataclass(frozen=True)
class TwoSpaceGneiting(KernelModel):
    """F_r(t, u) = h(u)^-r f(g(t)/h(u)) on a product of two spaces."""

    f: StieltjesFunction
    g: CNDFunction
    h: CNDFunction
    r: float
    spaces: Tuple[Space, ...]

    def __post_init__(self):
        object.__setattr__(self, "spaces", as_space_tuple(self.spaces))
        _require(isinstance(self.f, StieltjesFunction), "F_r requires a Stieltjes function")
        _require(len(self.spaces) == 2, "two factor spaces expected")
        _validate_gneiting_inputs(
            "G_r", self.f, self.g, self.h, self.r, self.spaces, h_slots=1
        )

    def evaluate(self, t, u=None):
        if u is None:
            raise ParameterError("F_r expects two distances")
        (t, u), scalar = _as_arrays((t, u))
        g_val = self.g.evaluate(t)
        h_val = self.h.evaluate(u)
        return _finish(gneiting_formula("G_r", self.f, self.r, g_val, h_val), scalar)

    def describe(self):
        return "F_r(r=%g, f=%s, g=%s, h=%s)" % (
            self.r,
            self.f.describe(),
            self.g.describe(),
            self.h.describe(),
        )


@dataclass(frozen=True)
class ProductModel(KernelModel):
    """Separable product F(t,u,v) = f1(g(t)) * f2(h(u,v))."""

    f1: CompletelyMonotoneFunction
    f2: CompletelyMonotoneFunction
    g: CNDFunction
    h: CNDFunction
    spaces: Tuple[Space, ...]

    def __post_init__(self):
        object.__setattr__(self, "spaces", as_space_tuple(self.spaces))
        _require(len(self.spaces) == 3, "three factor spaces expected")
        _require(self.g.n_slots == 1, "g must consume exactly one distance slot")
        _require(self.h.n_slots == 2, "h must consume two distance slots")
        self.g.validate_spaces(self.spaces[:1])
        self.h.validate_spaces(self.spaces[1:])
        for fn, inner, label in ((self.f1, self.g, "g"), (self.f2, self.h, "h")):
            if not inner.nonnegative:
                raise ParameterError("product model needs nonnegative %s" % label)
            if not fn.is_bounded and not inner.positive:
                raise ParameterError(
                    "unbounded factor requires a positive-valued %s" % label
                )

    def evaluate(self, t, u=None, v=None):
        if u is None or v is None:
            raise ParameterError("product model expects three distances")
        (t, u, v), scalar = _as_arrays((t, u, v))
        g_val = np.asarray(self.g.evaluate(t), dtype=float)
        h_val = np.asarray(self.h.evaluate(u, v), dtype=float)
        values = _cm_values(self.f1, g_val) * _cm_values(self.f2, h_val)
        return _finish(values, scalar)

    def describe(self):
        return "product(f1=%s, f2=%s, g=%s, h=%s)" % (
            self.f1.describe(),
            self.f2.describe(),
            self.g.describe(),
            self.h.describe(),
        )


# ---------------------------------------------------------------------------
# SPD condition reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    """One decision-table row: a named condition with its checked hypotheses.

    ``kind`` is "necessary" (triggered = a singular pair exists, SPD is
    impossible), "sufficient" (triggered = SPD is guaranteed) or "open"
    (triggered = the configuration whose SPD status is an open question).
    """

    name: str
    kind: str
    hypotheses: Tuple[Tuple[str, bool], ...]
    triggered: bool


@dataclass(frozen=True)
class SPDConditionReport:
    verdict: str
    violated_clauses: Tuple[str, ...]
    checks: Tuple[TheoremCheck, ...]
    g_strict: bool
    h_strict: bool
    strictness_source: str

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "violated_clauses": list(self.violated_clauses),
            "g_strict": self.g_strict,
            "h_strict": self.h_strict,
            "strictness_source": self.strictness_source,
            "checks": [
                {
                    "name": c.name,
                    "kind": c.kind,
                    "hypotheses": dict(c.hypotheses),
                    "triggered": c.triggered,
                }
                for c in self.checks
            ],
        }


def _strictness_of(fn: CNDFunction, spaces) -> Tuple[bool, str]:
    """Strictness from conservative flags, falling back to a grid check."""
    if fn.strict_at_zero:
        return True, "flag"
    verdict = strictness_check(fn, default_strictness_grids(spaces))
    return verdict.passed, "grid"


def _group_nontrivial(spaces, group: str) -> bool:
    if group == "x":
        return spaces[0].nontrivial
    return any(s.nontrivial for s in spaces[1:])


def _gneiting_checks(variant, f, r, spaces, g_strict, h_strict):
    unbounded = f.power  # D for Stieltjes variants, B for complete Bernstein
    const = f.const
    has_atoms = not f.measure.is_zero
    critical = r == f.order
    metric = all(s.is_metric for s in spaces)
    const_group, critical_group = _WITNESS_GROUPS[variant]
    const_nontrivial = _group_nontrivial(spaces, const_group)
    critical_nontrivial = _group_nontrivial(spaces, critical_group)

    checks = []
    clauses = []

    strict_hyp = (("g strict at zero", g_strict), ("h strict at zero", h_strict))
    triggered = not (g_strict and h_strict)
    checks.append(
        TheoremCheck("strict-inputs-necessary", "necessary", strict_hyp, triggered)
    )
    if not g_strict:
        clauses.append(CLAUSE_G_NOT_STRICT)
    if not h_strict:
        clauses.append(CLAUSE_H_NOT_STRICT)

    f_constant = unbounded == 0.0 and not has_atoms
    hyp = (
        ("f constant", f_constant),
        ("witness spaces nontrivial", const_nontrivial),
    )
    triggered = f_constant and const_nontrivial
    checks.append(
        TheoremCheck("nondegenerate-f-necessary", "necessary", hyp, triggered)
    )
    if triggered:
        clauses.append(CLAUSE_F_CONSTANT)

    critical_degenerate = (
        critical and unbounded > 0.0 and const == 0.0 and not has_atoms
    )
    hyp = (
        ("r equals order", critical),
        ("unbounded coefficient positive", unbounded > 0.0),
        ("constant part zero", const == 0.0),
        ("measure zero", not has_atoms),
        ("witness spaces nontrivial", critical_nontrivial),
    )
    triggered = critical_degenerate and critical_nontrivial
    checks.append(
        TheoremCheck("critical-pure-power-necessary", "necessary", hyp, triggered)
    )
    if triggered:
        clauses.append(CLAUSE_CRITICAL_NO_ATOMS)

    open_config = critical and unbounded > 0.0 and const > 0.0 and not has_atoms
    hyp = (
        ("r equals order", critical),
        ("unbounded coefficient positive", unbounded > 0.0),
        ("constant part positive", const > 0.0),
        ("measure zero", not has_atoms),
    )
    checks.append(
        TheoremCheck("critical-power-plus-constant-open", "open", hyp, open_config)
    )

    hyp = (
        ("unbounded coefficient positive", unbounded > 0.0),
        ("r above order", r > f.order),
        ("g strict at zero", g_strict),
        ("h strict at zero", h_strict),
        ("metric spaces", metric),
    )
    checks.append(
        TheoremCheck(
            "supercritical-unbounded-sufficient",
            "sufficient",
            hyp,
            all(flag for _, flag in hyp),
        )
    )

    hyp = (
        ("unbounded coefficient zero", unbounded == 0.0),
        ("measure nonzero", has_atoms),
        ("witness spaces nontrivial", const_nontrivial),
        ("g strict at zero", g_strict),
        ("h strict at zero", h_strict),
        ("metric spaces", metric),
    )
    checks.append(
        TheoremCheck(
            "bounded-nonconstant-sufficient",
            "sufficient",
            hyp,
            all(flag for _, flag in hyp),
        )
    )

    hyp = (
        ("unbounded coefficient positive", unbounded > 0.0),
        ("r equals order", critical),
        ("measure nonzero", has_atoms),
        ("g strict at zero", g_strict),
        ("h strict at zero", h_strict),
        ("metric spaces", metric),
    )
    checks.append(
        TheoremCheck(
            "critical-with-atoms-sufficient",
            "sufficient",
            hyp,
            all(flag for _, flag in hyp),
        )
    )
    return checks, clauses


def _resolve_verdict(checks, clauses):
    if clauses:
        return VERDICT_VIOLATED
    if any(c.kind == "open" and c.triggered for c in checks):
        return VERDICT_OPEN
    if any(c.kind == "sufficient" and c.triggered for c in checks):
        return VERDICT_SPD
    return VERDICT_PD


def spd_report(model: KernelModel) -> SPDConditionReport:
    """Decision table for strict positive definiteness of a model.

    ``SPD_guaranteed`` is returned only when all hypotheses of a sufficiency
    condition hold; a failed necessary condition yields
    ``necessary_condition_violated`` with the violated clauses named;
    the critical power-plus-constant configuration is reported as
    ``open_case``; anything else is honestly ``PD_only``.
    """
    if isinstance(model, GneitingModel):
        g_strict, src_g = _strictness_of(model.g, model.spaces[:1])
        h_strict, src_h = _strictness_of(model.h, model.spaces[1:])
        checks, clauses = _gneiting_checks(
            model.variant, model.f, model.r, model.spaces, g_strict, h_strict
        )
    elif isinstance(model, TwoSpaceGneiting):
        g_strict, src_g = _strictness_of(model.g, model.spaces[:1])
        h_strict, src_h = _strictness_of(model.h, model.spaces[1:])
        checks, clauses = _gneiting_checks(
            "G_r", model.f, model.r, model.spaces, g_strict, h_strict
        )
    elif isinstance(model, ProductModel):
        g_strict, src_g = _strictness_of(model.g, model.spaces[:1])
        h_strict, src_h = _strictness_of(model.h, model.spaces[1:])
        checks, clauses = _product_checks(model, g_strict, h_strict)
    else:
        raise ParameterError("unsupported model type %r" % type(model).__name__)
    return SPDConditionReport(
        verdict=_resolve_verdict(checks, clauses),
        violated_clauses=tuple(clauses),
        checks=tuple(checks),
        g_strict=g_strict,
        h_strict=h_strict,
        strictness_source="g:%s,h:%s" % (src_g, src_h),
    )


def _product_checks(model: ProductModel, g_strict, h_strict):
    metric = all(s.is_metric for s in model.spaces)
    x_nontrivial = model.spaces[0].nontrivial
    yz_nontrivial = any(s.nontrivial for s in model.spaces[1:])
    checks = []
    clauses = []

    strict_hyp = (("g strict at zero", g_strict), ("h strict at zero", h_strict))
    checks.append(
        TheoremCheck(
            "strict-inputs-necessary",
            "necessary",
            strict_hyp,
            not (g_strict and h_strict),
        )
    )
    if not g_strict:
        clauses.append(CLAUSE_G_NOT_STRICT)
    if not h_strict:
        clauses.append(CLAUSE_H_NOT_STRICT)

    for fn, label, nontrivial, clause in (
        (model.f1, "f1", x_nontrivial, CLAUSE_F1_CONSTANT),
        (model.f2, "f2", yz_nontrivial, CLAUSE_F2_CONSTANT),
    ):
        hyp = (
            ("%s constant" % label, fn.is_constant),
            ("witness spaces nontrivial", nontrivial),
        )
        triggered = fn.is_constant and nontrivial
        checks.append(
            TheoremCheck(
                "nonconstant-%s-necessary" % label, "necessary", hyp, triggered
            )
        )
        if triggered:
            clauses.append(clause)

    hyp = (
        ("f1 nonconstant", not model.f1.is_constant),
        ("f2 nonconstant", not model.f2.is_constant),
        ("g strict at zero", g_strict),
        ("h strict at zero", h_strict),
        ("metric spaces", metric),
    )
    checks.append(
        TheoremCheck(
            "nonconstant-strict-product-sufficient",
            "sufficient",
            hyp,
            all(flag for _, flag in hyp),
        )
    )
    return checks, clauses


# ---------------------------------------------------------------------------
# singular 2x2 counterexamples
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    clause: str
    points: Tuple[ProductPoint, ProductPoint]
    matrix: np.ndarray
    det_abs: float
    distances: Tuple[float, ...]


def _default_pair_distance(space: Space) -> float:
    bound = space.diameter_bound
    if bound is None:
        return 1.0
    return bound / 2.0 if space.kind != "discrete" else 1.0


def _differing_slots_for_clause(model, clause) -> Tuple[Tuple[int, float], ...]:
    """Slots in which the singular pair differs, with the distances to use."""
    spaces = model.spaces
    n = len(spaces)

    def group_slots(group):
        ids = [0] if group == "x" else list(range(1, n))
        for i in ids:
            if spaces[i].nontrivial:
                return ((i, _default_pair_distance(spaces[i])),)
        raise ParameterError("no nontrivial space available for the singular pair")

    if clause == CLAUSE_G_NOT_STRICT:
        verdict = strictness_check(model.g, default_strictness_grids(spaces[:1]))
        if verdict.witness is None:
            raise ParameterError("g shows no strictness violation on the default grid")
        return ((0, verdict.witness[0]),)
    if clause == CLAUSE_H_NOT_STRICT:
        verdict = strictness_check(model.h, default_strictness_grids(spaces[1:]))
        if verdict.witness is None:
            raise ParameterError("h shows no strictness violation on the default grid")
        return tuple(
            (i + 1, d) for i, d in enumerate(verdict.witness) if d != 0.0
        )
    if clause in (CLAUSE_F_CONSTANT, CLAUSE_F1_CONSTANT):
        if isinstance(model, ProductModel):
            return group_slots("x")
        const_group, _ = _WITNESS_GROUPS[getattr(model, "variant", "G_r")]
        return group_slots(const_group)
    if clause == CLAUSE_F2_CONSTANT:
        return group_slots("yz")
    if clause == CLAUSE_CRITICAL_NO_ATOMS:
        _, critical_group = _WITNESS_GROUPS[getattr(model, "variant", "G_r")]
        return group_slots(critical_group)
    raise ParameterError("unknown clause %r" % (clause,))


def counterexample_2x2(model: KernelModel, clause: str) -> Counterexample:
    """Two points realizing the singular 2x2 Gram matrix for a violated clause.

    The pair is equal in every slot except those that witness the violation,
    so both Gram entries collapse to the same value and the determinant
    vanishes up to round-off.
    """
    report = spd_report(model)
    if clause not in report.violated_clauses:
        raise ParameterError(
            "clause %r is not violated by this model (violated: %s)"
            % (clause, list(report.violated_clauses))
        )
    differing = _differing_slots_for_clause(model, clause)
    diff_map = dict(differing)
    first = []
    second = []
    dists = []
    for i, space in enumerate(model.spaces):
        d = diff_map.get(i, 0.0)
        a, b = pair_at_distance(space, d)
        first.append(a)
        second.append(b)
        dists.append(d)
    p1 = ProductPoint(tuple(first))
    p2 = ProductPoint(tuple(second))
    diag = model.value_at_origin()
    off = float(model.evaluate(*dists))
    matrix = np.array([[diag, off], [off, diag]])
    det_abs = abs(diag * diag - off * off)
    return Counterexample(
        clause=clause,
        points=(p1, p2),
        matrix=matrix,
        det_abs=det_abs,
        distances=tuple(dists),
    )
