"""Residues of localization terms.

``residue_1d`` and ``residue_1d_plus`` handle one variable.
``jk_residue`` evaluates the Jeffrey-Kirwan residue of a sum of terms in any
rank, with an optional perturbation for exponents on cone walls.  It works by
exact partial fractions down to linearly independent denominators, then
reads off the basis case in coordinates adapted to that basis.

``pushforward_projective_bundle`` integrates over the projectivization of a
vector bundle through a residue in the tautological class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidChamber, PerturbationRequired, ValidationError
from .exactalg import (
    ZERO,
    GaussianRational,
    LinearForm,
    LocalizationTerm,
    MultiPoly,
    exponential_coefficient,
    laurent_expand,
)
from .groebner import buchberger, normal_form


@dataclass(frozen=True)
class Chamber:
    """A connected component of regular directions, named by one vector in it."""

    vector: tuple

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(Fraction(v) for v in self.vector))
        if not self.vector or not any(self.vector):
            raise ValidationError("chamber vector must be a nonzero vector")

    @classmethod
    def of(cls, *coords) -> "Chamber":
        return cls(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.vector)


@dataclass(frozen=True)
class Perturbation:
    """Direction ``rho`` with ``rho(chamber vector) < 0``."""

    rho: LinearForm

    @classmethod
    def of(cls, *coords) -> "Perturbation":
        return cls(LinearForm(tuple(coords)))

    def check(self, chamber: Chamber) -> None:
        if self.rho.rank != chamber.rank:
            raise ValidationError("perturbation rank differs from the chamber rank")
        if not self.rho(chamber.vector) < 0:
            raise ValidationError("perturbation must be strictly negative on the chamber vector")


def default_perturbation(chamber: Chamber) -> Perturbation:
    """The perturbation ``-xi`` (coordinates of the chamber vector, negated)."""
    return Perturbation(LinearForm(tuple(-v for v in chamber.vector)))


def _single_variable(term: LocalizationTerm) -> None:
    if term.rank != 1:
        raise ValidationError("one-variable residue needs a rank-1 term; use jk_residue instead")


def residue_1d(term: LocalizationTerm) -> GaussianRational:
    """Coefficient of ``1/X`` in the Laurent expansion of a rank-1 term at 0."""
    _single_variable(term)
    coeffs = laurent_expand(term, 0, -1)
    return coeffs[-1].constant_term() if -1 in coeffs else ZERO


def residue_1d_plus(term: LocalizationTerm, mu) -> GaussianRational:
    """``residue_1d(term)`` when ``mu >= 0``, else zero."""
    _single_variable(term)
    if Fraction(mu) < 0:
        return ZERO
    return residue_1d(term)


# linear algebra over Q on short vectors

def _solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Solve ``sum_i x_i rows[i] = rhs``; return None when rhs is outside the span.

    Only the first solution found by elimination is returned, which suffices
    because callers pass linearly independent rows.
    """
    k = len(rows)
    n = len(rhs)
    # columns are the given rows; augmented system has n equations, k unknowns
    mat = [[Fraction(rows[i][r]) for i in range(k)] + [Fraction(rhs[r])] for r in range(n)]
    pivots = []
    r = 0
    for col in range(k):
        p = next((i for i in range(r, n) if mat[i][col]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(n):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    if any(mat[i][k] for i in range(r, n)):
        return None
    x = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        x[col] = mat[i][k]
    return x


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        p = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if p is None:
            continue
        mat[rank], mat[p] = mat[p], mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                f = mat[i][col] / mat[rank][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    mat = [list(map(Fraction, r)) for r in rows]
    n = len(mat)
    det = Fraction(1)
    for col in range(n):
        p = next((i for i in range(col, n) if mat[i][col]), None)
        if p is None:
            return Fraction(0)
        if p != col:
            mat[col], mat[p] = mat[p], mat[col]
            det = -det
        det *= mat[col][col]
        for i in range(col + 1, n):
            if mat[i][col]:
                f = mat[i][col] / mat[col][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return det


def _inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    mat = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        p = next(i for i in range(col, n) if mat[i][col])
        mat[col], mat[p] = mat[p], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [v * inv for v in mat[col]]
        for i in range(n):
            if i != col and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return [r[n:] for r in mat]


Support = tuple  # sorted tuple of (form coefficient tuple, multiplicity)


def _find_relation(forms: list[tuple]):
    """Return ``(r, coeffs)`` with ``forms[r] = sum coeffs[i] forms[i]`` or None.

    ``r`` is the lexicographically smallest form lying in the span of the
    remaining ones; ``coeffs`` maps indices of an independent subset to
    nonzero rationals.
    """
    for r in range(len(forms)):
        others = [i for i in range(len(forms)) if i != r]
        basis: list[int] = []
        for i in others:
            if _rank([forms[j] for j in basis + [i]]) == len(basis) + 1:
                basis.append(i)
        x = _solve([forms[i] for i in basis], forms[r])
        if x is not None:
            return r, {i: c for i, c in zip(basis, x) if c}
    return None


def _partial_fractions(numerator: MultiPoly, support: dict[tuple, int]) -> dict[Support, MultiPoly]:
    """Rewrite ``numerator / prod form^m`` as a sum over independent supports."""
    rank = numerator.nvars
    polys: dict[tuple, MultiPoly] = {}

    def poly(form: tuple) -> MultiPoly:
        if form not in polys:
            polys[form] = LinearForm(form).as_poly()
        return polys[form]

    pending: dict[Support, MultiPoly] = {tuple(sorted(support.items())): numerator}
    done: dict[Support, MultiPoly] = {}
    while pending:
        key = min(pending)
        num = pending.pop(key)
        if not num:
            continue
        forms = [f for f, _ in key]
        mults = dict(key)
        if len(forms) <= rank and _rank(forms) == len(forms):
            done[key] = done[key] + num if key in done else num
            continue
        r, coeffs = _find_relation(forms)
        # forms[r] = sum a_i forms[i]; absorb into the largest form k of the circuit:
        # 1 = (forms[r] - sum_{i != k} a_i forms[i]) / (a_k forms[k])
        k = max(coeffs, key=lambda i: forms[i])
        a_k = coeffs[k]
        pieces = [(r, Fraction(1) / a_k)] + [(i, -c / a_k) for i, c in coeffs.items() if i != k]
        for i, c in pieces:
            new = dict(mults)
            new[forms[k]] += 1
            new[forms[i]] -= 1
            if not new[forms[i]]:
                del new[forms[i]]
            # numerator is unchanged: forms[i] cancels one copy of itself
            newkey = tuple(sorted(new.items()))
            piece = num * c
            pending[newkey] = pending[newkey] + piece if newkey in pending else piece
    return {k: v for k, v in done.items() if v}


def _basis_value(numerator: MultiPoly, key: Support, exponent: LinearForm, convention: str,
                 rho: LinearForm | None) -> GaussianRational:
    forms = [f for f, _ in key]
    mults = [m for _, m in key]
    n = numerator.nvars
    inv = _inverse(forms)  # X = inv(B) u
    images = [
        MultiPoly(n, {tuple(int(i == j) for i in range(n)): inv[row][j] for j in range(n)})
        for row in range(n)
    ]
    q = numerator.substitute(images)
    lam = _solve(forms, exponent.coeffs)
    coef = ZERO
    for mono, c in q.terms.items():
        v = c
        for lam_i, m_i, a_i in zip(lam, mults, mono):
            k = m_i - 1 - a_i
            if k < 0:
                v = ZERO
                break
            v = v * exponential_coefficient(lam_i, k, convention)
            if not v:
                break
        coef = coef + v
    if not coef:
        return ZERO
    rho_c = _solve(forms, rho.coeffs) if rho is not None else None
    for i, lam_i in enumerate(lam):
        if lam_i > 0:
            continue
        if lam_i < 0:
            return ZERO
        if rho_c is None or rho_c[i] == 0:
            raise PerturbationRequired(
                "exponent lies on a wall of the cone spanned by the denominators; "
                "supply a generic perturbation"
            )
        if rho_c[i] < 0:
            return ZERO
    return coef * GaussianRational(1 / abs(_det(forms)))


def jk_residue(terms: Iterable[LocalizationTerm] | LocalizationTerm, chamber: Chamber,
               perturbation: Perturbation | None = None) -> GaussianRational:
    """Jeffrey-Kirwan residue of a sum of terms for the given chamber.

    Denominator forms are rescaled to take the value 1 on the chamber vector;
    the scalar (including any sign flip) moves into the numerator.  Exponents
    on a cone wall are resolved by ``lam + s*rho`` with ``s -> 0+``.
    """
    if isinstance(terms, LocalizationTerm):
        terms = [terms]
    xi = chamber.vector
    rho = None
    if perturbation is not None:
        perturbation.check(chamber)
        rho = perturbation.rho
    total = ZERO
    for term in terms:
        if term.rank != chamber.rank:
            raise ValidationError("term rank differs from the chamber rank")
        num = term.numerator
        support: dict[tuple, int] = {}
        scale = Fraction(1)
        for form, mult in term.denominator:
            v = form(xi)
            if v == 0:
                raise InvalidChamber(f"chamber vector vanishes on denominator form {form}")
            canon = tuple(c / v for c in form.coeffs)
            scale /= v**mult
            support[canon] = support.get(canon, 0) + mult
        num = num * scale
        for key, piece in _partial_fractions(num, support).items():
            if len(key) < chamber.rank:
                continue  # denominators do not span
            total = total + _basis_value(piece, key, term.exponent, term.convention, rho)
    return total


class PresentedRing:
    """A graded quotient ``Q[x_1..x_k]/I`` with a top-degree integration functional.

    ``fundamental`` is a monomial whose class integrates to 1; elements are
    polynomials in the generators, reduced by a lex Groebner basis of ``I``.
    """

    def __init__(self, names: Sequence[str], degrees: Sequence[int], relations: Sequence[MultiPoly],
                 fundamental: Sequence[int]):
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.nvars = len(self.names)
        if any(d <= 0 for d in self.degrees):
            raise ValidationError("generators must have positive degree")
        self.basis = buchberger(relations)
        self.fundamental = tuple(fundamental)
        self.top_degree = sum(e * d for e, d in zip(self.fundamental, self.degrees))
        nf = normal_form(MultiPoly.monomial(self.fundamental) if self.nvars else MultiPoly.one(0),
                         self.basis)
        top = [m for m in nf.terms]
        if len(top) != 1:
            raise ValidationError("fundamental monomial must reduce to a single standard monomial")
        self._top_monomial = top[0]
        self._top_scale = 1 / nf.terms[top[0]]

    @classmethod
    def point(cls) -> "PresentedRing":
        return cls((), (), (), ())

    def reduce(self, p: MultiPoly) -> MultiPoly:
        return normal_form(p, self.basis) if self.basis else p

    def integrate(self, p: MultiPoly) -> GaussianRational:
        nf = self.reduce(p)
        for mono, c in nf.terms.items():
            if mono != self._top_monomial and sum(e * d for e, d in zip(mono, self.degrees)) == self.top_degree:
                raise ValidationError("top-degree normal form is not a multiple of the fundamental class")
        return nf.coefficient(self._top_monomial) * self._top_scale

    def degree_of(self, mono: tuple) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))


def pushforward_projective_bundle(cls: MultiPoly, chern: Sequence[MultiPoly],
                                  ring: PresentedRing) -> GaussianRational:
    """Integrate ``cls`` over the projectivization of a rank-``r`` bundle.

    ``cls`` is a polynomial in the ring generators followed by one more
    variable ``y``; ``chern`` lists ``c_1..c_r`` as ring elements.  The value is
    the residue at ``y = 0`` of ``cls / p(y)`` with
    ``p(y) = y^r + c_1 y^{r-1} + ... + c_r``, integrated over the base.
    """
    r = len(chern)
    if r <= 0:
        raise ValidationError("bundle rank must be positive")
    if cls.nvars != ring.nvars + 1:
        raise ValidationError("class must be a polynomial in the ring generators and y")
    for k, c in enumerate(chern, start=1):
        if c.nvars != ring.nvars:
            raise ValidationError(f"c_{k} is not an element of the supplied ring")
        if c.constant_term():
            raise ValidationError(f"c_{k} has a degree-zero part, so 1/p(y) does not expand")
    # T = sum c_i z^i with z = 1/y; 1/p = z^r sum_k (-T)^k
    zero = MultiPoly.zero(ring.nvars)
    T = {i: ring.reduce(c) for i, c in enumerate(chern, start=1) if c}
    S: dict[int, MultiPoly] = {0: MultiPoly.one(ring.nvars)}
    power: dict[int, MultiPoly] = {0: MultiPoly.one(ring.nvars)}
    sign = 1
    for _ in range(ring.top_degree + 1):
        nxt: dict[int, MultiPoly] = {}
        for a, pa in power.items():
            for b, tb in T.items():
                nxt[a + b] = nxt.get(a + b, zero) + pa * tb
        power = {k: v for k, v in ((k, ring.reduce(v)) for k, v in nxt.items()) if v}
        if not power:
            break
        sign = -sign
        for k, v in power.items():
            S[k] = S.get(k, zero) + v * sign
    else:
        if power:
            raise ValidationError("Chern classes are not nilpotent in the supplied ring")
    total = zero
    for a, b_a in cls.split_variable(ring.nvars).items():
        idx = 1 + a - r
        if idx in S:
            total = total + b_a * S[idx]
    return ring.integrate(total)
