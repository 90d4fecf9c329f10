"""Pairings on quotients computed from localization data.

Rank-1 models use the explicit residue formulas

    U(1):   -n0 * res_{X=0} sum_{mu(F) > 0} h_F(X)
    SU(2):  (n0/2) * res_{X=0} (2X)^2 sum_{mu(F) > 0} h_F(X)

with ``h_F = i_F^*(eta) e^{mu(F) X} / e_F``.  The abelianized version
replaces ``n0`` by ``n0T``, multiplies by ``D(X)^2`` and shifts the exponent
by the level ``xi``.  Torus models go through ``jk_residue`` scaled by the
user-supplied ``residue_scale``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ContractViolation,
    CriticalValueError,
    DegreeMismatch,
    StrictlySemistableError,
    ValidationError,
)
from .exactalg import ZERO, GaussianRational, LinearForm, MultiPoly
from .models import ActionModel, FixedComponent, component_term, localized_terms
from .residue import Chamber, Perturbation, jk_residue, residue_1d


def martin_factor(model: ActionModel) -> Fraction:
    """``n0 (-1)^{n+} / (n0T |W|)``."""
    return Fraction(model.n0 * (-1) ** model.nplus, model.n0T * model.weyl)


def _rank1_constant(model: ActionModel) -> Fraction:
    return Fraction(model.n0 * (-1) ** (model.s + model.nplus), model.weyl)


def _mu(comp: FixedComponent) -> Fraction:
    return comp.moment.coeffs[0]


def _as_form(shift, rank: int) -> LinearForm:
    if shift is None:
        return LinearForm.zero(rank)
    if isinstance(shift, LinearForm):
        if shift.rank != rank:
            raise ValidationError("shift has the wrong rank")
        return shift
    if isinstance(shift, (int, Fraction)):
        if rank != 1:
            raise ValidationError("a scalar shift only makes sense for rank-1 models")
        return LinearForm.of(shift)
    return LinearForm(tuple(shift))


def generic_chamber(model: ActionModel, components=None) -> Chamber:
    """A chamber vector that is nonzero on every normal weight."""
    comps = model.components if components is None else components
    forms = [w for c in comps for w in c.normal_weights]
    for base in range(2, 200):
        vec = tuple(Fraction(base) ** k for k in range(model.rank))
        if all(f(vec) != 0 for f in forms):
            return Chamber(vec)
    raise ValidationError("could not find a generic chamber vector")


def generic_perturbation(chamber: Chamber) -> Perturbation:
    # -xi plus a small irregular tilt so that ties on cone walls are broken
    tilt = [Fraction(1, 997 + 7 * k * k) for k in range(chamber.rank)]
    rho = LinearForm(tuple(-v + t for v, t in zip(chamber.vector, tilt)))
    if rho(chamber.vector) >= 0:
        rho = LinearForm(tuple(-v for v in chamber.vector))
    return Perturbation(rho)


def _rank1_sum(model: ActionModel, eta: MultiPoly, shift: Fraction,
               components=None) -> GaussianRational:
    """``res_{X=0} D^2 sum_{mu(F) > shift} h_F`` with exponent ``mu(F) - shift``."""
    d2 = model.root_product() ** 2
    total = ZERO
    for comp, term in localized_terms(model, eta, LinearForm.of(shift), components=components):
        if _mu(comp) > shift:
            total = total + residue_1d(term.with_numerator(term.numerator * d2))
    return total


def _torus_residue(model: ActionModel, eta: MultiPoly, shift: LinearForm, chamber=None,
                   perturbation=None) -> GaussianRational:
    chamber = chamber or generic_chamber(model)
    perturbation = perturbation or generic_perturbation(chamber)
    d2 = model.root_product() ** 2
    terms = [t.with_numerator(t.numerator * d2) for _, t in localized_terms(model, eta, shift)]
    return jk_residue(terms, chamber, perturbation) * model.residue_scale


def pair_regular(model: ActionModel, eta: MultiPoly, chamber: Chamber | None = None,
                 perturbation: Perturbation | None = None) -> GaussianRational:
    """Pairing ``kappa(eta)[M//K]`` when 0 is a regular value."""
    model.check_class(eta)
    flagged = model.flagged()
    if flagged:
        raise StrictlySemistableError(
            f"components {[c.id for c in flagged]} are strictly semistable; "
            "use pair_ih or pair_partial_desing"
        )
    if model.group == "torus":
        return _torus_residue(model, eta, LinearForm.zero(model.rank), chamber, perturbation)
    return _rank1_sum(model, eta, Fraction(0)) * _rank1_constant(model)


def _check_regular_level(model: ActionModel, shift: LinearForm) -> None:
    for comp in model.components:
        if comp.moment == shift:
            raise CriticalValueError(f"level {shift} equals the moment of component {comp.id}")


def pair_abelianized(model: ActionModel, eta: MultiPoly, shift=None,
                     chamber: Chamber | None = None,
                     perturbation: Perturbation | None = None) -> GaussianRational:
    """Pairing of ``eta * D^2`` on the torus quotient at level ``shift``.

    ``D^2`` is applied here, so callers pass ``eta`` itself.
    """
    model.check_class(eta)
    xi = _as_form(shift, model.rank)
    _check_regular_level(model, xi)
    if model.group == "torus":
        return _torus_residue(model, eta, xi, chamber, perturbation)
    return _rank1_sum(model, eta, xi.coeffs[0]) * (-model.n0T)


def _require_rank1(model: ActionModel) -> None:
    if model.rank != 1:
        raise ValidationError("this operation is implemented for rank-1 models only")


def small_level(model: ActionModel) -> Fraction:
    """Midpoint between 0 and the smallest positive moment."""
    _require_rank1(model)
    positive = [_mu(c) for c in model.components if _mu(c) > 0]
    if not positive:
        raise ValidationError("no component has positive moment: the chamber next to 0 is empty")
    return min(positive) / 2


def pair_ih(model: ActionModel, alpha: MultiPoly, beta: MultiPoly) -> GaussianRational:
    """IH pairing of two classes via a small regular shift of the level."""
    _require_rank1(model)
    da, db = model.class_degree(alpha), model.class_degree(beta)
    if da < 0 or db < 0:
        return ZERO
    if da + db != model.quotient_real_dim:
        raise DegreeMismatch(
            f"degrees {da} + {db} do not add up to the quotient dimension {model.quotient_real_dim}"
        )
    eps = small_level(model)
    factor = martin_factor(model)
    eta = alpha * beta
    value = pair_abelianized(model, eta, eps) * factor
    check = pair_abelianized(model, eta, eps * Fraction(2, 3)) * factor
    if value != check:
        raise ContractViolation("pairing changed between two small regular levels")
    return value


@dataclass(frozen=True)
class WallCrossingReport:
    wall: Fraction
    direction: int
    jump: GaussianRational
    components: tuple

    def reversed(self) -> "WallCrossingReport":
        return WallCrossingReport(self.wall, -self.direction, -self.jump, self.components)


def wall_crossing_jump(model: ActionModel, wall, eta: MultiPoly) -> WallCrossingReport:
    """Change of ``pair_abelianized`` when the level crosses ``wall`` upwards."""
    _require_rank1(model)
    model.check_class(eta)
    w = Fraction(wall)
    comps = [c for c in model.components if _mu(c) == w]
    d2 = model.root_product() ** 2
    jump = ZERO
    for comp in comps:
        term = component_term(model, comp, eta)
        jump = jump + residue_1d(term.with_numerator(term.numerator * d2))
    return WallCrossingReport(w, 1, jump * model.n0T, tuple(c.id for c in comps))


@dataclass(frozen=True)
class DesingBreakdown:
    level: Fraction
    chamber_value: GaussianRational
    correction: GaussianRational
    total: GaussianRational


def partial_desing_breakdown(model: ActionModel, eta: MultiPoly, blowup_spec=None) -> DesingBreakdown:
    """Chamber value next to 0 plus residues on the exceptional fixed points.

    The correction is the Martin factor times the wall-crossing jumps
    ``n0T * res_{X=0} D^2 sum_{w(E) > 0} i_E^*(eta) / e_E`` over exceptional
    fixed points ``E`` lying over the flagged components.
    """
    _require_rank1(model)
    model.check_class(eta)
    spec = model.blowup if blowup_spec is None else dict(blowup_spec)
    flagged = model.flagged()
    for comp in flagged:
        if comp.id not in spec:
            raise ValidationError(f"no blow-up data for strictly semistable component {comp.id}")
    xi = small_level(model)
    chamber_value = pair_abelianized(model, eta, xi) * martin_factor(model)
    d2 = model.root_product() ** 2
    correction = ZERO
    for comp in flagged:
        for exc in spec[comp.id]:
            if _mu(exc) > 0:
                term = component_term(model, exc, eta)
                correction = correction + residue_1d(term.with_numerator(term.numerator * d2))
    correction = correction * model.n0T * martin_factor(model)
    return DesingBreakdown(xi, chamber_value, correction, chamber_value + correction)


def pair_partial_desing(model: ActionModel, eta: MultiPoly, blowup_spec=None) -> GaussianRational:
    """Pairing on the partial desingularization of a rank-1 quotient."""
    return partial_desing_breakdown(model, eta, blowup_spec).total
