"""JSON wire formats for functions, spaces, CND trees, and kernel models.

Schemas (all plain JSON objects):

function spec::

    {"class": "stieltjes",          "lambda": L, "constants": {"C": c, "D": d}, "atoms": [[s, w], ...]}
    {"class": "complete_bernstein", "lambda": L, "constants": {"A": a, "B": b}, "atoms": [[s, w], ...]}
    {"class": "bernstein",                       "constants": {"a": a, "b": b}, "atoms": [[s, w], ...]}
    {"class": "cm_mixture",                      "constants": {"const": c},     "atoms": [[s, w], ...]}

space spec::

    {"kind": "euclidean" | "sphere" | "interval" | "circle" | "discrete", "param": ...}

CND spec (expression tree mirroring the constructor names)::

    {"type": "power", "exponent": s}
    {"type": "geodesic"} | {"type": "three_minus_cos"} | {"type": "sin"}
    {"type": "constant", "value": c, "arity": k}
    {"type": "shift", "offset": c, "inner": <cnd>}
    {"type": "bernstein_compose", "f": <function>, "g": <cnd>, "h": <cnd>}
    {"type": "euclidean_cross", "f": <function>, "h": <cnd>, "dim": n}
    {"type": "bounded_complement", "bound": M | null, "model": <F_r model>}

model spec::

    {"variant": "G_r"|"H_r"|"I_r"|"J_r"|"F_r", "f": ..., "g": ..., "h": ..., "r": ..., "spaces": [...]}
    {"variant": "product", "f1": ..., "f2": ..., "g": ..., "h": ..., "spaces": [...]}
"""

import math

from . import cnd as cnd_mod
from .errors import ParameterError
from .models import GneitingModel, ProductModel, TwoSpaceGneiting
from .spaces import Circle, Discrete, Euclidean, Interval, SphereGeodesic
from .special_functions import (
    BernsteinFunction,
    CompleteBernsteinFunction,
    CompletelyMonotoneFunction,
    DiscreteMeasure,
    StieltjesFunction,
)


def _atoms(spec):
    atoms = spec.get("atoms", [])
    if not isinstance(atoms, list) or not all(
        isinstance(a, (list, tuple)) and len(a) == 2 for a in atoms
    ):
        raise ParameterError("atoms must be a list of [location, weight] pairs")
    return [(float(s), float(w)) for s, w in atoms]


def _constants(spec):
    constants = spec.get("constants", {})
    if not isinstance(constants, dict):
        raise ParameterError("constants must be an object")
    return constants


def parse_function(spec):
    if not isinstance(spec, dict) or "class" not in spec:
        raise ParameterError("function spec must be an object with a 'class' key")
    cls = spec["class"]
    constants = _constants(spec)
    atoms = _atoms(spec)
    if cls == "stieltjes":
        return StieltjesFunction(
            order=float(spec["lambda"]),
            const=float(constants.get("C", 0.0)),
            power=float(constants.get("D", 0.0)),
            measure=DiscreteMeasure(tuple(atoms)),
        )
    if cls == "complete_bernstein":
        return CompleteBernsteinFunction(
            order=float(spec["lambda"]),
            const=float(constants.get("A", 0.0)),
            power=float(constants.get("B", 0.0)),
            measure=DiscreteMeasure(tuple(atoms)),
        )
    if cls == "bernstein":
        return BernsteinFunction(
            const=float(constants.get("a", 0.0)),
            slope=float(constants.get("b", 0.0)),
            measure=DiscreteMeasure(tuple(atoms)),
        )
    if cls == "cm_mixture":
        return CompletelyMonotoneFunction.exp_mixture(
            atoms, const=float(constants.get("const", 0.0))
        )
    raise ParameterError("unknown function class %r" % (cls,))


def function_to_spec(fn):
    if isinstance(fn, StieltjesFunction):
        return {
            "class": "stieltjes",
            "lambda": fn.order,
            "constants": {"C": fn.const, "D": fn.power},
            "atoms": [list(a) for a in fn.measure.atoms],
        }
    if isinstance(fn, CompleteBernsteinFunction):
        return {
            "class": "complete_bernstein",
            "lambda": fn.order,
            "constants": {"A": fn.const, "B": fn.power},
            "atoms": [list(a) for a in fn.measure.atoms],
        }
    if isinstance(fn, BernsteinFunction):
        return {
            "class": "bernstein",
            "constants": {"a": fn.const, "b": fn.slope},
            "atoms": [list(a) for a in fn.measure.atoms],
        }
    if isinstance(fn, CompletelyMonotoneFunction):
        if fn.stieltjes is not None:
            return function_to_spec(fn.stieltjes)
        return {
            "class": "cm_mixture",
            "constants": {"const": fn.const},
            "atoms": [list(a) for a in fn.measure.atoms],
        }
    raise ParameterError("cannot serialize %r" % type(fn).__name__)


def parse_space(spec):
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParameterError("space spec must be an object with a 'kind' key")
    kind = spec["kind"]
    param = spec.get("param")
    if kind == "euclidean":
        return Euclidean(dim=int(param))
    if kind == "sphere":
        return SphereGeodesic(dim=int(param))
    if kind == "interval":
        return Interval(length=float(param))
    if kind == "circle":
        return Circle()
    if kind == "discrete":
        if not isinstance(param, (list, tuple)):
            raise ParameterError("discrete space param must be a list of labels")
        return Discrete(labels=tuple(param))
    raise ParameterError("unknown space kind %r" % (kind,))


def space_to_spec(space):
    if isinstance(space, Euclidean):
        return {"kind": "euclidean", "param": space.dim}
    if isinstance(space, SphereGeodesic):
        return {"kind": "sphere", "param": space.dim}
    if isinstance(space, Interval):
        return {"kind": "interval", "param": space.length}
    if isinstance(space, Circle):
        return {"kind": "circle", "param": None}
    if isinstance(space, Discrete):
        return {"kind": "discrete", "param": list(space.labels)}
    raise ParameterError("cannot serialize %r" % type(space).__name__)


def parse_cnd(spec):
    if not isinstance(spec, dict) or "type" not in spec:
        raise ParameterError("cnd spec must be an object with a 'type' key")
    node = spec["type"]
    if node == "power":
        return cnd_mod.PowerDistance(exponent=float(spec["exponent"]))
    if node == "geodesic":
        return cnd_mod.GeodesicDistance()
    if node == "three_minus_cos":
        return cnd_mod.CosineComplement()
    if node == "sin":
        return cnd_mod.SineDistance()
    if node == "constant":
        return cnd_mod.Constant(value=float(spec["value"]), arity=int(spec.get("arity", 1)))
    if node == "shift":
        return cnd_mod.Shifted(parse_cnd(spec["inner"]), float(spec["offset"]))
    if node == "bernstein_compose":
        f = parse_function(spec["f"])
        if not isinstance(f, BernsteinFunction):
            raise ParameterError("bernstein_compose needs a 'bernstein' function spec")
        return cnd_mod.bernstein_compose(f, parse_cnd(spec["g"]), parse_cnd(spec["h"]))
    if node == "euclidean_cross":
        f = parse_function(spec["f"])
        if not isinstance(f, BernsteinFunction):
            raise ParameterError("euclidean_cross needs a 'bernstein' function spec")
        return cnd_mod.euclidean_cross(f, parse_cnd(spec["h"]), int(spec["dim"]))
    if node == "bounded_complement":
        model = parse_model(spec["model"])
        if not isinstance(model, TwoSpaceGneiting):
            raise ParameterError("bounded_complement needs an 'F_r' model spec")
        bound = spec.get("bound")
        if bound is None:
            bound = model.value_at_origin()
        return cnd_mod.bounded_complement(float(bound), model)
    raise ParameterError("unknown cnd node type %r" % (node,))


def cnd_to_spec(fn):
    if isinstance(fn, cnd_mod.PowerDistance):
        return {"type": "power", "exponent": fn.exponent}
    if isinstance(fn, cnd_mod.GeodesicDistance):
        return {"type": "geodesic"}
    if isinstance(fn, cnd_mod.CosineComplement):
        return {"type": "three_minus_cos"}
    if isinstance(fn, cnd_mod.SineDistance):
        return {"type": "sin"}
    if isinstance(fn, cnd_mod.Constant):
        return {"type": "constant", "value": fn.value, "arity": fn.arity}
    if isinstance(fn, cnd_mod.Shifted):
        return {"type": "shift", "offset": fn.offset, "inner": cnd_to_spec(fn.inner)}
    if isinstance(fn, cnd_mod.BernsteinCompose):
        return {
            "type": "bernstein_compose",
            "f": function_to_spec(fn.f),
            "g": cnd_to_spec(fn.g),
            "h": cnd_to_spec(fn.h),
        }
    if isinstance(fn, cnd_mod.EuclideanCross):
        return {
            "type": "euclidean_cross",
            "f": function_to_spec(fn.f),
            "h": cnd_to_spec(fn.h),
            "dim": fn.dim,
        }
    if isinstance(fn, cnd_mod.BoundedComplement):
        return {
            "type": "bounded_complement",
            "bound": fn.bound,
            "model": model_to_spec(fn.model),
        }
    raise ParameterError("cannot serialize %r" % type(fn).__name__)


def parse_model(spec):
    if not isinstance(spec, dict) or "variant" not in spec:
        raise ParameterError("model spec must be an object with a 'variant' key")
    variant = spec["variant"]
    spaces = spec.get("spaces")
    if not isinstance(spaces, list) or not spaces:
        raise ParameterError("model spec needs a nonempty 'spaces' list")
    spaces = tuple(parse_space(s) for s in spaces)
    if variant == "product":
        return ProductModel(
            f1=_as_cm(spec["f1"]),
            f2=_as_cm(spec["f2"]),
            g=parse_cnd(spec["g"]),
            h=parse_cnd(spec["h"]),
            spaces=spaces,
        )
    f = parse_function(spec["f"])
    g = parse_cnd(spec["g"])
    h = parse_cnd(spec["h"])
    r = float(spec["r"])
    if variant == "F_r":
        if not isinstance(f, StieltjesFunction):
            raise ParameterError("F_r requires a 'stieltjes' function spec")
        return TwoSpaceGneiting(f=f, g=g, h=h, r=r, spaces=spaces)
    if variant in ("G_r", "H_r", "I_r", "J_r"):
        return GneitingModel(variant=variant, f=f, g=g, h=h, r=r, spaces=spaces)
    raise ParameterError("unknown model variant %r" % (variant,))


def _as_cm(function_spec):
    fn = parse_function(function_spec)
    if isinstance(fn, CompletelyMonotoneFunction):
        return fn
    if isinstance(fn, StieltjesFunction):
        return CompletelyMonotoneFunction.from_stieltjes(fn)
    raise ParameterError(
        "product factors must be completely monotone ('cm_mixture' or 'stieltjes')"
    )


def model_to_spec(model):
    if isinstance(model, ProductModel):
        return {
            "variant": "product",
            "f1": function_to_spec(model.f1),
            "f2": function_to_spec(model.f2),
            "g": cnd_to_spec(model.g),
            "h": cnd_to_spec(model.h),
            "spaces": [space_to_spec(s) for s in model.spaces],
        }
    if isinstance(model, TwoSpaceGneiting):
        return {
            "variant": "F_r",
            "f": function_to_spec(model.f),
            "g": cnd_to_spec(model.g),
            "h": cnd_to_spec(model.h),
            "r": model.r,
            "spaces": [space_to_spec(s) for s in model.spaces],
        }
    if isinstance(model, GneitingModel):
        return {
            "variant": model.variant,
            "f": function_to_spec(model.f),
            "g": cnd_to_spec(model.g),
            "h": cnd_to_spec(model.h),
            "r": model.r,
            "spaces": [space_to_spec(s) for s in model.spaces],
        }
    raise ParameterError("cannot serialize %r" % type(model).__name__)


def parse_grid(spec, n_slots):
    """Grid spec: either explicit per-axis value lists or linspace objects.

    ``{"axes": [[0, 1], {"start": 0, "stop": 2, "count": 11}, ...]}``
    """
    if not isinstance(spec, dict) or "axes" not in spec:
        raise ParameterError("grid spec must be an object with an 'axes' list")
    axes = spec["axes"]
    if not isinstance(axes, list) or len(axes) != n_slots:
        raise ParameterError("grid needs exactly %d axes" % n_slots)
    out = []
    for axis in axes:
        if isinstance(axis, list):
            out.append([float(v) for v in axis])
        elif isinstance(axis, dict):
            start = float(axis["start"])
            stop = float(axis["stop"])
            count = int(axis["count"])
            if count < 1:
                raise ParameterError("grid axis count must be >= 1")
            if count == 1:
                out.append([start])
            else:
                step = (stop - start) / (count - 1)
                out.append([start + i * step for i in range(count)])
        else:
            raise ParameterError("grid axis must be a list or a linspace object")
    if any(not axis for axis in out):
        raise ParameterError("grid axes must be nonempty")
    if any(any(not math.isfinite(v) for v in axis) for axis in out):
        raise ParameterError("grid values must be finite")
    return out
