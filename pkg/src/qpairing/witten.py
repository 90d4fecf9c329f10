"""The local piece ``I_0^eps`` of Witten's integral for rank-1 actions.

For each fixed component ``F`` with ``mu(F) >= 0`` the inner residue

    p_F(y) = res_{X=0} D(X) i_F^*(eta) e^{i (mu(F) - y) X} / e_F(X)

is a polynomial in ``y``.  It is integrated against ``D(y) e^{-y^2/(2 eps)}``
over both half-lines when ``mu(F) > 0`` and over ``(-inf, 0]`` when
``mu(F) = 0``.  The result, times ``eps^{-s/2}``, is a polynomial in
``sqrt(eps)`` whose coefficients live in two channels: rational and
rational times ``sqrt(pi/2)``.  The constant ``A_K`` is reported as text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping

from .errors import ValidationError
from .exactalg import (
    I,
    I_EXP,
    ZERO,
    GaussianRational,
    LinearForm,
    MultiPoly,
    format_scalar,
)
from .models import ActionModel, FixedComponent, component_term
from .residue import residue_1d

PREFACTOR = "A_K = i^l (2 pi)^(-l/2) / (|W| vol T)"


def _clean(d: Mapping[int, GaussianRational]) -> dict:
    return {k: GaussianRational.coerce(v) for k, v in sorted(d.items()) if v}


@dataclass(frozen=True)
class SqrtEpsPolynomial:
    """``sum_k (a_k + b_k sqrt(pi/2)) eps^{k/2}`` with exact ``a_k``, ``b_k``."""

    rational: Mapping[int, GaussianRational]
    pi: Mapping[int, GaussianRational]

    __hash__ = None

    def __post_init__(self):
        object.__setattr__(self, "rational", _clean(self.rational))
        object.__setattr__(self, "pi", _clean(self.pi))

    @classmethod
    def zero(cls) -> "SqrtEpsPolynomial":
        return cls({}, {})

    def __add__(self, other: "SqrtEpsPolynomial") -> "SqrtEpsPolynomial":
        rat = dict(self.rational)
        for k, v in other.rational.items():
            rat[k] = rat.get(k, ZERO) + v
        pi = dict(self.pi)
        for k, v in other.pi.items():
            pi[k] = pi.get(k, ZERO) + v
        return SqrtEpsPolynomial(rat, pi)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SqrtEpsPolynomial":
        c = GaussianRational.coerce(c)
        return SqrtEpsPolynomial({k: v * c for k, v in self.rational.items()},
                                 {k: v * c for k, v in self.pi.items()})

    def shift(self, k: int) -> "SqrtEpsPolynomial":
        """Multiply by ``eps^{k/2}``."""
        return SqrtEpsPolynomial({e + k: v for e, v in self.rational.items()},
                                 {e + k: v for e, v in self.pi.items()})

    def __mul__(self, other: "SqrtEpsPolynomial") -> "SqrtEpsPolynomial":
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if self.pi and other.pi:
            raise ValidationError("product would contain pi/2; only one sqrt(pi/2) factor is tracked")
        rat: dict[int, GaussianRational] = {}
        pi: dict[int, GaussianRational] = {}
        for a, b, target in ((self.rational, other.rational, rat), (self.rational, other.pi, pi),
                             (self.pi, other.rational, pi)):
            for e1, v1 in a.items():
                for e2, v2 in b.items():
                    target[e1 + e2] = target.get(e1 + e2, ZERO) + v1 * v2
        return SqrtEpsPolynomial(rat, pi)

    def __eq__(self, other):
        if not isinstance(other, SqrtEpsPolynomial):
            return NotImplemented
        return self.rational == other.rational and self.pi == other.pi

    def is_zero(self) -> bool:
        return not self.rational and not self.pi

    def exponents(self) -> list[int]:
        """Exponents of ``sqrt(eps)`` carrying a nonzero coefficient."""
        return sorted(set(self.rational) | set(self.pi))

    def coefficient(self, k: int) -> tuple[GaussianRational, GaussianRational]:
        return self.rational.get(k, ZERO), self.pi.get(k, ZERO)

    def is_polynomial(self) -> bool:
        return all(k >= 0 for k in self.exponents())

    def odd_part(self) -> "SqrtEpsPolynomial":
        return SqrtEpsPolynomial({k: v for k, v in self.rational.items() if k % 2},
                                 {k: v for k, v in self.pi.items() if k % 2})

    def to_json(self) -> dict:
        return {
            "rational": {str(k): format_scalar(v) for k, v in self.rational.items()},
            "sqrt_pi_over_2": {str(k): format_scalar(v) for k, v in self.pi.items()},
        }

    def format(self) -> str:
        pieces = []
        for k in self.exponents():
            a, b = self.coefficient(k)
            mono = "" if k == 0 else "eps^(1/2)" if k == 1 else f"eps^({k}/2)" if k % 2 else \
                "eps" if k == 2 else f"eps^{k // 2}"
            parts = []
            if a:
                parts.append(format_scalar(a))
            if b:
                parts.append(f"({format_scalar(b)})*sqrt(pi/2)")
            coef = " + ".join(parts)
            if len(parts) > 1:
                coef = f"({coef})"
            pieces.append(f"{coef}*{mono}" if mono else coef)
        return " + ".join(pieces) if pieces else "0"

    def __str__(self):
        return self.format()


def _double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def gaussian_halfline_moment(j: int) -> SqrtEpsPolynomial:
    """``int_0^inf y^j e^{-y^2/(2 eps)} dy``."""
    if j < 0:
        raise ValidationError("moment order must be non-negative")
    c = _double_factorial(j - 1)
    if j % 2:
        return SqrtEpsPolynomial({j + 1: c}, {})
    return SqrtEpsPolynomial({}, {j + 1: c})


def gaussian_line_moment(j: int) -> SqrtEpsPolynomial:
    """``int_R y^j e^{-y^2/(2 eps)} dy``."""
    if j % 2:
        return SqrtEpsPolynomial.zero()
    return gaussian_halfline_moment(j).scale(2)


def cone_integral(coeffs: Mapping[int, GaussianRational], cone: str) -> SqrtEpsPolynomial:
    """Integrate ``sum_j c_j y^j e^{-y^2/(2 eps)}`` over ``R+`` (``"+"``), ``R-`` or ``R``."""
    total = SqrtEpsPolynomial.zero()
    for j, c in coeffs.items():
        if cone == "+":
            m = gaussian_halfline_moment(j)
        elif cone == "-":
            m = gaussian_halfline_moment(j).scale((-1) ** j)
        elif cone == "line":
            m = gaussian_line_moment(j)
        else:
            raise ValidationError(f"unknown cone {cone!r}")
        total = total + m.scale(c)
    return total


def cones_for(mu: Fraction) -> tuple[str, ...]:
    if mu > 0:
        return ("+", "-")
    if mu == 0:
        return ("-",)
    return ()


def _poly_coeffs(p: MultiPoly) -> dict[int, GaussianRational]:
    return {m[0]: c for m, c in p.terms.items()}


def y_polynomial(model: ActionModel, comp: FixedComponent, eta: MultiPoly) -> dict[int, GaussianRational]:
    """Coefficients of ``p_F(y)``, from ``e^{-iyX} = sum (-iy)^k X^k / k!``."""
    mu = comp.moment.coeffs[0]
    term = component_term(model, comp, eta, LinearForm.of(mu), I_EXP)
    base = term.with_numerator(term.numerator * model.root_product())
    x = MultiPoly.variable(1, 0)
    out = {}
    xk = MultiPoly.one(1)
    for k in range(base.pole_order):
        r = residue_1d(base.with_numerator(base.numerator * xk))
        if r:
            out[k] = r * (-I) ** k * Fraction(1, factorial(k))
        xk = xk * x
    return out


def integrand_coefficients(model: ActionModel, comp: FixedComponent, eta: MultiPoly) -> dict[int, GaussianRational]:
    """Coefficients of ``D(y) p_F(y)``."""
    p = y_polynomial(model, comp, eta)
    d = _poly_coeffs(model.root_product())
    out: dict[int, GaussianRational] = {}
    for a, ca in d.items():
        for b, cb in p.items():
            out[a + b] = out.get(a + b, ZERO) + ca * cb
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class WittenResult:
    total: SqrtEpsPolynomial
    contributions: tuple  # (component id, cone, SqrtEpsPolynomial)
    prefactor: str = PREFACTOR

    def component_total(self, cid: str) -> SqrtEpsPolynomial:
        out = SqrtEpsPolynomial.zero()
        for c, _, poly in self.contributions:
            if c == cid:
                out = out + poly
        return out


def witten_i0(model: ActionModel, eta: MultiPoly) -> WittenResult:
    """``I_0^eps(eta e^{i omega})`` up to ``A_K``, as a polynomial in ``sqrt(eps)``."""
    if model.rank != 1:
        raise ValidationError("witten_i0 is implemented for rank-1 models only")
    model.check_class(eta)
    contributions = []
    total = SqrtEpsPolynomial.zero()
    for comp in model.components:
        cones = cones_for(comp.moment.coeffs[0])
        if not cones:
            continue
        coeffs = integrand_coefficients(model, comp, eta)
        for cone in cones:
            piece = cone_integral(coeffs, cone).shift(-model.s)
            contributions.append((comp.id, cone, piece))
            total = total + piece
    return WittenResult(total, tuple(contributions))
