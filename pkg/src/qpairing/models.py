"""Fixed-point data for torus actions and the localization terms they produce.

An ``ActionModel`` records, for each component ``F`` of the torus-fixed set,
its moment value, its normal weights and the restriction of each ring
generator to ``F``.  Built-in families:

* ``model_circle_pn``: a circle acting linearly on ``P^n`` with given weights;
* ``model_su2_p1n``: SU(2) acting diagonally on ``(P^1)^n``;
* ``model_su2_pn``: SU(2) acting on ``P(S^n C^2)``, with blow-up data at the
  strictly semistable point when ``n`` is even.

Positive-dimensional components are projective spaces ``P^d`` whose
restrictions are polynomials in ``X`` and the hyperplane class ``h``; each
normal line ``j`` has first Chern class ``normal_chern[j] * h``.  The
integral over ``F`` is assembled from ``1/(beta + c h) = sum (-c h)^r / beta^(r+1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import gcd
from pathlib import Path
from typing import Any, Mapping, Sequence

from .errors import ValidationError
from .exactalg import (
    REAL_EXP,
    GaussianRational,
    LinearForm,
    LocalizationTerm,
    MultiPoly,
    exponential_coefficient,
    parse_rational,
    rational_pair,
)

GROUPS = ("u1", "su2", "torus")


@dataclass(frozen=True, eq=True)
class FixedComponent:
    id: str
    moment: LinearForm
    normal_weights: tuple
    restriction: Mapping[str, MultiPoly]
    strictly_semistable: bool = False
    fiber_dim: int = 0
    normal_chern: tuple = ()
    symplectic_fiber: Fraction = Fraction(0)

    __hash__ = None  # restriction is a mapping

    def __post_init__(self):
        object.__setattr__(self, "normal_weights", tuple(self.normal_weights))
        object.__setattr__(self, "restriction", dict(self.restriction))
        object.__setattr__(self, "symplectic_fiber", Fraction(self.symplectic_fiber))
        rank = self.moment.rank
        for w in self.normal_weights:
            if w.rank != rank:
                raise ValidationError(f"component {self.id}: normal weight {w} has the wrong rank")
            if w.is_zero():
                raise ValidationError(f"component {self.id}: zero normal weight")
        if self.fiber_dim < 0:
            raise ValidationError(f"component {self.id}: negative fiber dimension")
        chern = tuple(Fraction(c) for c in self.normal_chern)
        if self.fiber_dim and len(chern) != len(self.normal_weights):
            raise ValidationError(
                f"component {self.id}: need one normal Chern coefficient per normal weight"
            )
        object.__setattr__(self, "normal_chern", chern)
        nvars = rank + (1 if self.fiber_dim else 0)
        for gen, poly in self.restriction.items():
            if poly.nvars != nvars:
                raise ValidationError(
                    f"component {self.id}: restriction of {gen} has {poly.nvars} variables, expected {nvars}"
                )

    @property
    def rank(self) -> int:
        return self.moment.rank

    @property
    def complex_dim_ambient(self) -> int:
        return self.fiber_dim + len(self.normal_weights)

    def euler_poly(self) -> MultiPoly:
        """Product of the normal weights as a polynomial in X (equivariant part)."""
        out = MultiPoly.one(self.rank)
        for w in self.normal_weights:
            out = out * w.as_poly()
        return out


@dataclass(frozen=True)
class ActionModel:
    rank: int
    group: str
    generators: tuple
    components: tuple
    positive_roots: tuple = ()
    n0: int = 1
    n0T: int = 1
    weyl: int = 1
    s: int = 1
    nplus: int = 0
    residue_scale: Fraction | None = None
    generator_degrees: tuple = ()
    name: str = ""
    blowup: Mapping[str, tuple] = field(default_factory=dict)

    __hash__ = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "positive_roots", tuple(self.positive_roots))
        object.__setattr__(self, "blowup", {k: tuple(v) for k, v in dict(self.blowup).items()})
        degs = tuple(self.generator_degrees) or (2,) * len(self.generators)
        object.__setattr__(self, "generator_degrees", degs)
        if self.residue_scale is not None:
            object.__setattr__(self, "residue_scale", Fraction(self.residue_scale))
        self.validate()

    def validate(self) -> None:
        if self.group not in GROUPS:
            raise ValidationError(f"group must be one of {GROUPS}, got {self.group!r}")
        if self.rank < 1:
            raise ValidationError("rank must be at least 1")
        if self.group in ("u1", "su2") and self.rank != 1:
            raise ValidationError(f"group {self.group} has rank 1, got rank {self.rank}")
        if 2 * self.nplus != self.s - self.rank:
            raise ValidationError("constants violate nplus = (s - rank)/2")
        if len(self.positive_roots) != self.nplus:
            raise ValidationError("number of positive roots must equal nplus")
        expected_weyl = {"u1": 1, "su2": 2}.get(self.group)
        if expected_weyl is not None and self.weyl != expected_weyl:
            raise ValidationError(f"|W| must be {expected_weyl} for group {self.group}")
        if self.group == "torus" and self.residue_scale is None:
            raise ValidationError("torus models need constants.residue_scale")
        if self.n0 <= 0 or self.n0T <= 0 or self.weyl <= 0:
            raise ValidationError("n0, n0T and weyl must be positive")
        if len(set(self.generators)) != len(self.generators):
            raise ValidationError("generator names must be distinct")
        if len(self.generator_degrees) != len(self.generators):
            raise ValidationError("need one degree per generator")
        if not self.components:
            raise ValidationError("model needs at least one fixed component")
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise ValidationError("component ids must be distinct")
        for root in self.positive_roots:
            if root.rank != self.rank or root.is_zero():
                raise ValidationError("positive roots must be nonzero forms of the model rank")
        for comp in self.components + tuple(c for cs in self.blowup.values() for c in cs):
            if comp.rank != self.rank:
                raise ValidationError(f"component {comp.id}: moment has rank {comp.rank}, expected {self.rank}")
            missing = [g for g in self.generators if g not in comp.restriction]
            if missing:
                raise ValidationError(f"component {comp.id}: no restriction given for {missing}")
        for key in self.blowup:
            if key not in ids:
                raise ValidationError(f"blow-up data refers to unknown component {key!r}")
        dims = {c.complex_dim_ambient for c in self.components}
        if len(dims) > 1:
            raise ValidationError(f"components disagree on the ambient dimension: {sorted(dims)}")

    @property
    def complex_dim(self) -> int:
        return self.components[0].complex_dim_ambient

    @property
    def quotient_real_dim(self) -> int:
        return 2 * (self.complex_dim - self.s)

    def root_product(self) -> MultiPoly:
        """``D(X)``, the product of the positive roots."""
        out = MultiPoly.one(self.rank)
        for root in self.positive_roots:
            out = out * root.as_poly()
        return out

    def component(self, cid: str) -> FixedComponent:
        for c in self.components:
            if c.id == cid:
                return c
        raise ValidationError(f"no component with id {cid!r}")

    def flagged(self) -> list[FixedComponent]:
        return [c for c in self.components if c.strictly_semistable]

    def class_degree(self, eta: MultiPoly) -> int:
        """Cohomological degree of a homogeneous class; -1 for zero."""
        self.check_class(eta)
        if not eta:
            return -1
        degs = eta.weighted_degrees(self.generator_degrees)
        if len(degs) != 1:
            raise ValidationError("class is not homogeneous")
        return degs.pop()

    def check_class(self, eta: MultiPoly) -> None:
        if eta.nvars != len(self.generators):
            raise ValidationError(
                f"class has {eta.nvars} variables but the model has generators {list(self.generators)}"
            )

    def generator_poly(self, name: str) -> MultiPoly:
        if name not in self.generators:
            raise ValidationError(f"generator {name!r} not in model")
        return MultiPoly.variable(len(self.generators), self.generators.index(name))


def restrict(model: ActionModel, comp: FixedComponent, eta: MultiPoly) -> MultiPoly:
    """Pull ``eta`` back to ``comp`` (a polynomial in X, plus h if positive-dimensional)."""
    model.check_class(eta)
    images = [comp.restriction[g] for g in model.generators]
    if not images:
        return MultiPoly.constant(comp.rank, eta.constant_term())
    return eta.substitute(images)


def _integrate_over_fiber(comp: FixedComponent, numerator: MultiPoly, include_exponential: bool,
                          convention: str) -> tuple[MultiPoly, tuple]:
    """Integrate over ``F = P^d``; returns a numerator in X and the denominator."""
    d = comp.fiber_dim
    rank = comp.rank
    h_index = rank
    h = MultiPoly.variable(rank + 1, h_index)
    if include_exponential and comp.symplectic_fiber:
        series = MultiPoly.zero(rank + 1)
        for k in range(d + 1):
            series = series + h**k * exponential_coefficient(comp.symplectic_fiber, k, convention)
        numerator = numerator * series
    for weight, chern in zip(comp.normal_weights, comp.normal_chern):
        beta = weight.as_poly().extend(1)
        factor = MultiPoly.zero(rank + 1)
        for r in range(d + 1):
            factor = factor + (h * (-chern)) ** r * beta ** (d - r)
        numerator = numerator * factor
    top = numerator.split_variable(h_index).get(d, MultiPoly.zero(rank))
    return top, tuple((w, d + 1) for w in comp.normal_weights)


def component_term(model: ActionModel, comp: FixedComponent, eta: MultiPoly,
                   exponent: LinearForm | None = None, convention: str = REAL_EXP,
                   include_exponential: bool = True) -> LocalizationTerm:
    numerator = restrict(model, comp, eta)
    exponent = exponent if exponent is not None else LinearForm.zero(model.rank)
    if comp.fiber_dim:
        numerator, denominator = _integrate_over_fiber(comp, numerator, include_exponential, convention)
    else:
        denominator = tuple((w, 1) for w in comp.normal_weights)
    return LocalizationTerm(numerator, exponent, denominator, convention)


def localized_terms(model: ActionModel, eta: MultiPoly, shift: LinearForm | None = None,
                    include_exponential: bool = True, convention: str = REAL_EXP,
                    components: Sequence[FixedComponent] | None = None
                    ) -> list[tuple[FixedComponent, LocalizationTerm]]:
    """One localization term per fixed component.

    The exponent is ``mu(F) - shift`` when ``include_exponential`` is set and
    zero otherwise.
    """
    shift = shift if shift is not None else LinearForm.zero(model.rank)
    if shift.rank != model.rank:
        raise ValidationError("shift has the wrong rank")
    comps = model.components if components is None else components
    out = []
    for comp in comps:
        exponent = comp.moment - shift if include_exponential else LinearForm.zero(model.rank)
        out.append((comp, component_term(model, comp, eta, exponent, convention, include_exponential)))
    return out


# built-in families

def _x_times(c, nvars: int = 1) -> MultiPoly:
    mono = [0] * nvars
    mono[0] = 1
    return MultiPoly(nvars, {tuple(mono): c})


def _circle_stabilizer(weights: Sequence[int]) -> int:
    diffs = [abs(a - b) for a, b in combinations(weights, 2)]
    return reduce(gcd, diffs, 0)


def model_circle_pn(weights: Sequence[int]) -> ActionModel:
    """Circle acting on ``P^n`` with weights ``r_0..r_n``.

    The point ``p_j`` has moment ``r_j``, normal weights ``r_k - r_j`` and
    ``xi -> r_j X``, ``rho -> X``.  A weight ``v`` of multiplicity ``d+1 > 1``
    gives the component ``P^d`` with ``xi -> vX - h``, normal weights
    ``r_k - v`` and normal bundle ``O(1)``; ``omega`` restricts to ``-h``
    there so that the equivariant symplectic class agrees with ``xi``.
    """
    weights = [int(w) for w in weights]
    if not weights:
        raise ValidationError("weight list is empty")
    if len(weights) < 2:
        raise ValidationError("need n >= 1, i.e. at least two weights")
    n0 = _circle_stabilizer(weights)
    if n0 == 0:
        raise ValidationError("all weights are equal, so the circle acts trivially")
    values = list(dict.fromkeys(weights))
    distinct = len(values) == len(weights)
    comps = []
    for idx, v in enumerate(values):
        mult = weights.count(v)
        others = [r for r in weights if r != v]
        normal = tuple(LinearForm.of(r - v) for r in others)
        if mult == 1:
            restriction = {"xi": _x_times(v), "rho": _x_times(1)}
            comps.append(FixedComponent(
                id=f"p{weights.index(v)}" if distinct else f"F{v}",
                moment=LinearForm.of(v), normal_weights=normal,
                restriction=restriction, strictly_semistable=(v == 0),
            ))
        else:
            h = MultiPoly.variable(2, 1)
            restriction = {"xi": _x_times(v, 2) - h, "rho": _x_times(1, 2)}
            comps.append(FixedComponent(
                id=f"F{v}", moment=LinearForm.of(v), normal_weights=normal,
                restriction=restriction, strictly_semistable=(v == 0),
                fiber_dim=mult - 1, normal_chern=(1,) * len(normal), symplectic_fiber=-1,
            ))
    return ActionModel(
        rank=1, group="u1", generators=("xi", "rho"), components=tuple(comps),
        n0=n0, n0T=n0, weyl=1, s=1, nplus=0, generator_degrees=(2, 2),
        name="circle:" + ",".join(str(w) for w in weights),
    )


def _su2_common() -> dict:
    return dict(rank=1, group="su2", positive_roots=(LinearForm.of(2),), n0=2, n0T=2,
                weyl=2, s=3, nplus=1)


def model_su2_p1n(n: int) -> ActionModel:
    """SU(2) on ``(P^1)^n``: fixed points indexed by signs ``delta``.

    Moment ``sum delta_j``; Euler class ``(prod delta_j) X^n`` realized by the
    normal weights ``delta_j X``; ``xi_i -> delta_i X``, ``zeta2 -> X^2``.
    """
    if n < 1:
        raise ValidationError("n must be at least 1")
    gens = tuple(f"xi{i + 1}" for i in range(n)) + ("zeta2",)
    comps = []
    for delta in product((1, -1), repeat=n):
        restriction = {f"xi{i + 1}": _x_times(d) for i, d in enumerate(delta)}
        restriction["zeta2"] = MultiPoly.monomial((2,))
        comps.append(FixedComponent(
            id="d" + "".join("+" if d > 0 else "-" for d in delta),
            moment=LinearForm.of(sum(delta)),
            normal_weights=tuple(LinearForm.of(d) for d in delta),
            restriction=restriction,
            strictly_semistable=(sum(delta) == 0),
        ))
    return ActionModel(generators=gens, components=tuple(comps),
                       generator_degrees=(2,) * n + (4,), name=f"su2_p1n:{n}", **_su2_common())


def su2_pn_exceptional(n: int) -> tuple[FixedComponent, ...]:
    """Torus-fixed points of the exceptional divisor over the semistable point.

    The fiber carries weights ``n - 2j`` with ``0, 2, -2`` omitted.  Normal
    weights: differences inside the fiber, the fiber weight itself (normal
    direction of the divisor) and the two orbit directions ``2X``, ``-2X``.
    """
    if n % 2:
        raise ValidationError("exceptional data exists only for even n")
    half = n // 2
    fiber = [j for j in range(n + 1) if j not in (half - 1, half, half + 1)]
    comps = []
    for j in fiber:
        w = n - 2 * j
        normal = [LinearForm.of((n - 2 * k) - w) for k in fiber if k != j]
        normal += [LinearForm.of(w), LinearForm.of(2), LinearForm.of(-2)]
        comps.append(FixedComponent(
            id=f"e{j}", moment=LinearForm.of(w), normal_weights=tuple(normal),
            restriction={"xi": MultiPoly.zero(1), "zeta2": MultiPoly.monomial((2,))},
        ))
    return tuple(comps)


def model_su2_pn(n: int) -> ActionModel:
    """SU(2) on ``P(S^n C^2)``: points ``p_j`` with moment ``n - 2j``."""
    if n < 2:
        raise ValidationError("n must be at least 2")
    comps = []
    for j in range(n + 1):
        comps.append(FixedComponent(
            id=f"p{j}", moment=LinearForm.of(n - 2 * j),
            normal_weights=tuple(LinearForm.of(2 * (j - k)) for k in range(n + 1) if k != j),
            restriction={"xi": _x_times(n - 2 * j), "zeta2": MultiPoly.monomial((2,))},
            strictly_semistable=(2 * j == n),
        ))
    blowup = {f"p{n // 2}": su2_pn_exceptional(n)} if n % 2 == 0 else {}
    return ActionModel(generators=("xi", "zeta2"), components=tuple(comps),
                       generator_degrees=(2, 4), name=f"su2_pn:{n}", blowup=blowup,
                       **_su2_common())


P7_WEIGHTS = (1, 1, 1, 0, 0, -1, -1, -1)


def builtin_model(spec: str) -> ActionModel:
    """Resolve names such as ``circle:1,-1``, ``su2_pn:5``, ``su2_p1n:3``, ``p7``."""
    name, _, arg = spec.partition(":")
    try:
        if name == "circle":
            return model_circle_pn([int(w) for w in arg.split(",") if w.strip()])
        if name == "su2_pn":
            return model_su2_pn(int(arg))
        if name == "su2_p1n":
            return model_su2_p1n(int(arg))
        if name == "p7" and not arg:
            return model_circle_pn(P7_WEIGHTS)
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"bad built-in model argument in {spec!r}") from exc
    raise ValidationError(f"unknown built-in model {spec!r}")


# JSON round trip

def _poly_to_json(p: MultiPoly) -> dict:
    out = {}
    for mono, c in sorted(p.terms.items()):
        key = ",".join(str(e) for e in mono)
        out[key] = rational_pair(c.re) if c.is_real else {"re": rational_pair(c.re), "im": rational_pair(c.im)}
    return out


def _poly_from_json(data: Any, nvars: int, where: str) -> MultiPoly:
    if not isinstance(data, dict):
        raise ValidationError(f"{where}: expected a coefficient map")
    terms = {}
    for key, value in data.items():
        try:
            mono = tuple(int(e) for e in key.split(",")) if key != "" else ()
        except ValueError as exc:
            raise ValidationError(f"{where}: bad exponent key {key!r}") from exc
        if len(mono) != nvars:
            raise ValidationError(f"{where}: exponent key {key!r} needs {nvars} entries")
        if isinstance(value, dict):
            c = GaussianRational(parse_rational(value.get("re", 0)), parse_rational(value.get("im", 0)))
        else:
            c = parse_rational(value)
        terms[mono] = c
    return MultiPoly(nvars, terms)


def _form_from_json(data: Any, rank: int, where: str) -> LinearForm:
    if not isinstance(data, list) or len(data) != rank:
        raise ValidationError(f"{where}: expected a list of {rank} rationals")
    return LinearForm(tuple(parse_rational(v) for v in data))


def _component_to_json(c: FixedComponent, generators: Sequence[str]) -> dict:
    out = {
        "id": c.id,
        "moment": [rational_pair(v) for v in c.moment.coeffs],
        "normal_weights": [[rational_pair(v) for v in w.coeffs] for w in c.normal_weights],
        "restriction": {g: _poly_to_json(c.restriction[g]) for g in generators},
        "strictly_semistable": c.strictly_semistable,
    }
    if c.fiber_dim:
        out["fiber_dim"] = c.fiber_dim
        out["normal_chern"] = [rational_pair(v) for v in c.normal_chern]
        out["symplectic_fiber"] = rational_pair(c.symplectic_fiber)
    return out


def _component_from_json(data: Any, rank: int, generators: Sequence[str], where: str) -> FixedComponent:
    if not isinstance(data, dict):
        raise ValidationError(f"{where}: expected an object")
    cid = data.get("id")
    if not isinstance(cid, str):
        raise ValidationError(f"{where}: missing or non-string field 'id'")
    where = f"{where} (id {cid!r})"
    for key in ("moment", "normal_weights", "restriction"):
        if key not in data:
            raise ValidationError(f"{where}: missing field {key!r}")
    fiber_dim = data.get("fiber_dim", 0)
    if not isinstance(fiber_dim, int) or isinstance(fiber_dim, bool) or fiber_dim < 0:
        raise ValidationError(f"{where}: 'fiber_dim' must be a non-negative integer")
    nvars = rank + (1 if fiber_dim else 0)
    moment = _form_from_json(data["moment"], rank, f"{where}.moment")
    if not isinstance(data["normal_weights"], list):
        raise ValidationError(f"{where}.normal_weights: expected a list")
    normal = []
    for k, w in enumerate(data["normal_weights"]):
        form = _form_from_json(w, rank, f"{where}.normal_weights[{k}]")
        if form.is_zero():
            raise ValidationError(f"{where}.normal_weights[{k}]: zero normal weight")
        normal.append(form)
    restriction_data = data["restriction"]
    if not isinstance(restriction_data, dict):
        raise ValidationError(f"{where}.restriction: expected an object")
    unknown = [g for g in restriction_data if g not in generators]
    if unknown:
        raise ValidationError(f"{where}.restriction: unknown generators {unknown}")
    restriction = {
        g: _poly_from_json(restriction_data[g], nvars, f"{where}.restriction.{g}")
        for g in generators if g in restriction_data
    }
    flag = data.get("strictly_semistable", False)
    if not isinstance(flag, bool):
        raise ValidationError(f"{where}.strictly_semistable: expected a boolean")
    chern = [parse_rational(v) for v in data.get("normal_chern", [])]
    sympl = parse_rational(data.get("symplectic_fiber", 0))
    try:
        return FixedComponent(cid, moment, tuple(normal), restriction, flag, fiber_dim, tuple(chern), sympl)
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from exc


def dump_model(model: ActionModel) -> dict:
    constants = {"n0": model.n0, "n0T": model.n0T, "weyl": model.weyl, "s": model.s, "nplus": model.nplus}
    if model.residue_scale is not None:
        constants["residue_scale"] = rational_pair(model.residue_scale)
    out = {
        "name": model.name,
        "rank": model.rank,
        "group": model.group,
        "constants": constants,
        "generators": list(model.generators),
        "generator_degrees": list(model.generator_degrees),
        "positive_roots": [[rational_pair(v) for v in r.coeffs] for r in model.positive_roots],
        "components": [_component_to_json(c, model.generators) for c in model.components],
    }
    if model.blowup:
        out["blowup"] = {
            k: [_component_to_json(c, model.generators) for c in v] for k, v in model.blowup.items()
        }
    return out


def _int_field(data: dict, key: str, where: str) -> int:
    if key not in data:
        raise ValidationError(f"{where}: missing field {key!r}")
    v = data[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValidationError(f"{where}.{key}: expected an integer")
    return v


def load_model(config: Mapping | str | Path) -> ActionModel:
    """Build a model from a JSON document (mapping, JSON text, or file path)."""
    if isinstance(config, Path) or (isinstance(config, str) and not config.lstrip().startswith("{")):
        try:
            config = json.loads(Path(config).read_text())
        except OSError as exc:
            raise ValidationError(f"cannot read model file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ValidationError(f"model file is not valid JSON: {exc}") from exc
    elif isinstance(config, str):
        try:
            config = json.loads(config)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"model document is not valid JSON: {exc}") from exc
    if not isinstance(config, Mapping):
        raise ValidationError("model document must be a JSON object")
    rank = _int_field(config, "rank", "model")
    if rank < 1:
        raise ValidationError("model.rank: must be at least 1")
    group = config.get("group")
    if group not in GROUPS:
        raise ValidationError(f"model.group: must be one of {list(GROUPS)}")
    constants = config.get("constants")
    if not isinstance(constants, Mapping):
        raise ValidationError("model: missing object field 'constants'")
    consts = {k: _int_field(constants, k, "constants") for k in ("n0", "n0T", "weyl", "s", "nplus")}
    residue_scale = None
    if "residue_scale" in constants:
        residue_scale = parse_rational(constants["residue_scale"])
    generators = config.get("generators")
    if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
        raise ValidationError("model.generators: expected a list of strings")
    degrees = config.get("generator_degrees", [2] * len(generators))
    if not isinstance(degrees, list) or len(degrees) != len(generators):
        raise ValidationError("model.generator_degrees: expected one integer per generator")
    roots_data = config.get("positive_roots", [])
    if not isinstance(roots_data, list):
        raise ValidationError("model.positive_roots: expected a list")
    roots = tuple(_form_from_json(r, rank, f"positive_roots[{k}]") for k, r in enumerate(roots_data))
    comps_data = config.get("components")
    if not isinstance(comps_data, list) or not comps_data:
        raise ValidationError("model.components: expected a non-empty list")
    comps = tuple(
        _component_from_json(c, rank, generators, f"components[{k}]") for k, c in enumerate(comps_data)
    )
    blowup = {}
    for key, lst in dict(config.get("blowup", {})).items():
        if not isinstance(lst, list):
            raise ValidationError(f"blowup.{key}: expected a list of components")
        blowup[key] = tuple(
            _component_from_json(c, rank, generators, f"blowup.{key}[{k}]") for k, c in enumerate(lst)
        )
    return ActionModel(
        rank=rank, group=group, generators=tuple(generators), components=comps,
        positive_roots=roots, residue_scale=residue_scale, generator_degrees=tuple(degrees),
        name=str(config.get("name", "")), blowup=blowup, **consts,
    )


def shipped_model_path(name: str = "p7_circle.json") -> Path:
    return Path(__file__).with_name("data") / name
