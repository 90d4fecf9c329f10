"""Equivariant cohomology of the semistable locus for circle actions on P^n.

For weights ``r_0..r_n`` the ring ``H_{S^1}((P^n)^{ss})`` is
``Q[xi, rho]`` modulo the classes of the unstable strata: for each nonzero
moment value ``m``, the product of ``(xi - r_i rho)`` over ``r_i < m``
(``m > 0``) or ``r_i > m`` (``m < 0``).  When the action is weakly balanced,
truncating standard monomials along the zero-weight stratum gives a
subspace ``V_M`` mapping onto intersection cohomology, and the IH pairing of
two classes is the coefficient of the top class ``tau`` in their product.

Degrees are cohomological: ``xi`` and ``rho`` have degree 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ContractViolation, DegreeMismatch, ValidationError
from .exactalg import GaussianRational, MultiPoly
from .groebner import buchberger, is_groebner, normal_form, standard_monomials

NAMES = ("xi", "rho")
XI = MultiPoly.variable(2, 0)
RHO = MultiPoly.variable(2, 1)


def weakly_balanced_check(weights: Sequence[int]) -> bool:
    """Equal numbers of positive and negative weights, with multiplicity."""
    return sum(1 for w in weights if w > 0) == sum(1 for w in weights if w < 0)


@dataclass(frozen=True)
class QuotientRingPresentation:
    weights: tuple
    ideal: tuple
    groebner: tuple

    def normal_form(self, p: MultiPoly) -> MultiPoly:
        return normal_form(p, self.groebner)

    def standard_monomials(self, degree: int) -> list[tuple]:
        """Standard monomials of cohomological degree ``degree``."""
        if degree % 2:
            return []
        return standard_monomials(self.groebner, 2, degree // 2)

    def check(self) -> None:
        """Buchberger criterion, ideal membership and idempotent normal form."""
        if not is_groebner(self.groebner):
            raise ContractViolation("basis fails the Buchberger criterion")
        for g in self.ideal:
            if self.normal_form(g):
                raise ContractViolation("an ideal generator does not reduce to zero")
        probe = (XI + RHO * 2) ** 7 + XI**3 * RHO**5
        nf = self.normal_form(probe)
        if self.normal_form(nf) != nf:
            raise ContractViolation("normal form is not idempotent")


def _linear(r: int) -> MultiPoly:
    return XI - RHO * r


def stratum_classes(weights: Sequence[int]) -> list[MultiPoly]:
    classes = []
    for m in sorted({w for w in weights if w}, reverse=True):
        factors = [r for r in weights if (r < m if m > 0 else r > m)]
        p = MultiPoly.one(2)
        for r in factors:
            p = p * _linear(r)
        classes.append(p)
    return classes


def semistable_ring(weights: Sequence[int]) -> QuotientRingPresentation:
    weights = tuple(int(w) for w in weights)
    if not any(w > 0 for w in weights) or not any(w < 0 for w in weights):
        raise ValidationError("weights of a single sign: the semistable locus is empty")
    ideal = tuple(stratum_classes(weights))
    pres = QuotientRingPresentation(weights, ideal, tuple(buchberger(ideal)))
    pres.check()
    return pres


@dataclass(frozen=True)
class VmBasis:
    weights: tuple
    q: int
    n_r: int
    top_degree: int
    per_degree: dict = field(default_factory=dict)
    presentation: QuotientRingPresentation | None = None

    __hash__ = None

    @property
    def dimensions(self) -> list[int]:
        return [len(self.per_degree.get(d, [])) for d in range(0, self.top_degree + 1, 2)]

    @property
    def tau(self) -> tuple:
        top = self.per_degree.get(self.top_degree, [])
        if len(top) != 1:
            raise ContractViolation(f"top degree of V_M has dimension {len(top)}, expected 1")
        return top[0]

    def contains(self, p: MultiPoly) -> bool:
        nf = self.presentation.normal_form(p)
        allowed = {m for monos in self.per_degree.values() for m in monos}
        return all(m in allowed for m in nf.terms)


def vm_basis(weights: Sequence[int]) -> VmBasis:
    """Standard monomials retained in ``V_M``, by cohomological degree.

    With ``q`` zero weights and ``n_R = #nonzero weights - 1``, the monomial
    ``xi^i rho^j`` is kept iff ``i >= q`` or ``2j < n_R``.
    """
    weights = tuple(int(w) for w in weights)
    if not weakly_balanced_check(weights):
        raise ValidationError("weights are not weakly balanced")
    pres = semistable_ring(weights)
    q = weights.count(0)
    n_r = sum(1 for w in weights if w) - 1
    top = 2 * (len(weights) - 2)
    per_degree = {}
    for d in range(0, top + 1, 2):
        keep = [m for m in pres.standard_monomials(d) if q == 0 or m[0] >= q or 2 * m[1] < n_r]
        per_degree[d] = sorted(keep)
    # nothing may survive above the top degree
    for d in range(top + 2, top + 8, 2):
        extra = [m for m in pres.standard_monomials(d) if q == 0 or m[0] >= q or 2 * m[1] < n_r]
        if extra:
            raise ContractViolation(f"V_M has elements in degree {d} above the top degree {top}")
    return VmBasis(weights, q, n_r, top, per_degree, pres)


def _degree(p: MultiPoly) -> int:
    degs = {2 * sum(m) for m in p.terms}
    if len(degs) > 1:
        raise DegreeMismatch("class is not homogeneous")
    return degs.pop() if degs else -1


def ih_pairing_scalar(weights: Sequence[int], alpha: MultiPoly, beta: MultiPoly,
                      basis: VmBasis | None = None) -> GaussianRational:
    """The scalar ``c`` with ``alpha * beta = c * tau`` in the semistable ring."""
    vm = basis or vm_basis(weights)
    for name, p in (("alpha", alpha), ("beta", beta)):
        if p.nvars != 2:
            raise ValidationError(f"{name} must be a polynomial in xi, rho")
        if not vm.contains(p):
            raise ContractViolation(f"{name} does not lie in V_M")
    da, db = _degree(alpha), _degree(beta)
    if da < 0 or db < 0:
        return GaussianRational(0)
    if da + db != vm.top_degree:
        raise DegreeMismatch(f"degrees {da} + {db} differ from the top degree {vm.top_degree}")
    nf = vm.presentation.normal_form(alpha * beta)
    tau = vm.tau
    if any(m != tau for m in nf.terms):
        raise ContractViolation("normal form of the product is not a multiple of tau")
    return nf.coefficient(tau)


def monomial(mono: tuple) -> MultiPoly:
    return MultiPoly.monomial(mono)


def ih_pairing_matrix(weights: Sequence[int], d: int) -> list[list[GaussianRational]]:
    """Gram matrix between ``V^d`` and ``V^{top-d}`` (basis ordered by power of xi)."""
    vm = vm_basis(weights)
    if d < 0 or d > vm.top_degree or d % 2:
        raise ValidationError(f"degree {d} is not an even degree between 0 and {vm.top_degree}")
    rows = vm.per_degree[d]
    cols = vm.per_degree[vm.top_degree - d]
    return [[ih_pairing_scalar(weights, monomial(a), monomial(b), vm) for b in cols] for a in rows]


def format_monomial(mono: tuple) -> str:
    return MultiPoly.monomial(mono).format(NAMES)


def determinant(matrix: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    n = len(matrix)
    mat = [list(r) for r in matrix]
    det = GaussianRational(1)
    for col in range(n):
        p = next((i for i in range(col, n) if mat[i][col]), None)
        if p is None:
            return GaussianRational(0)
        if p != col:
            mat[col], mat[p] = mat[p], mat[col]
            det = -det
        det = det * mat[col][col]
        for i in range(col + 1, n):
            if mat[i][col]:
                f = mat[i][col] / mat[col][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return det
