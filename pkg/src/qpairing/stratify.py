"""Equivariant Poincare series for the SL(2) families ``pn`` and ``p1n``.

``pn`` is ``P(S^n C^2)``; ``p1n`` is ``(P^1)^n``.  Series are in ``t`` with
cohomological exponents and are computed from rational-function formulas:

* total:  ``(1 + t^2 + ... + t^{2n}) / (1 - t^4)``, resp. ``(1 + t^2)^n / (1 - t^4)``;
* semistable: subtract ``t^{2(j-1)} / (1 - t^2)`` for ``n/2 < j <= n``
  (``binom(n, j)`` copies for ``p1n``);
* desingularization (``n`` even): add
  ``(t^2 + ... + t^{2(n-3)}) / (1 - t^4) - t^{n-2} (1 + ... + t^{n-4}) / (1 - t^2)``
  for ``pn``; for ``p1n`` each strictly semistable orbit adds
  ``((t^2 + ... + t^{2(n-3)}) - 2 t^{n-2} (1 + ... + t^{n-4})) / (1 - t^2)``;
* intersection Poincare polynomial (``pn``, ``n`` even): subtract the kernel
  series of ``H(desing) -> IH``, whose coefficient of ``t^{2k}`` rises as
  ``t^2 / ((1 - t^2)(1 - t^4))`` up to ``t^{n-4}`` and is mirrored about
  ``t^{n-3}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .errors import ValidationError
from .exactalg import TruncatedSeries, geom_series, series_polynomial

FAMILIES = ("pn", "p1n")


@dataclass(frozen=True)
class StratificationSpec:
    family: str
    n: int
    bound: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"family must be one of {FAMILIES}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValidationError("n must be a non-negative integer")
        bound = 2 * self.n + 4 if self.bound is None else self.bound
        if bound < 0 or bound % 2:
            raise ValidationError("series bound must be a non-negative even integer")
        object.__setattr__(self, "bound", bound)


def _poly(exponents, bound: int) -> TruncatedSeries:
    coeffs: dict[int, int] = {}
    for e in exponents:
        coeffs[e] = coeffs.get(e, 0) + 1
    return series_polynomial(coeffs, bound)


def equivariant_series_total(spec: StratificationSpec) -> TruncatedSeries:
    b = spec.bound
    if spec.family == "pn":
        base = _poly(range(0, 2 * spec.n + 1, 2), b)
    else:
        base = series_polynomial({2 * k: comb(spec.n, k) for k in range(spec.n + 1)}, b)
    return base * geom_series(4, b)


def semistable_series(spec: StratificationSpec) -> TruncatedSeries:
    b = spec.bound
    out = equivariant_series_total(spec)
    tail = geom_series(2, b)
    for j in range(spec.n // 2 + 1, spec.n + 1):
        copies = 1 if spec.family == "pn" else comb(spec.n, j)
        out = out - _poly([2 * (j - 1)], b) * tail * copies
    return out


def orbit_count(spec: StratificationSpec) -> int:
    """Number of blown-up orbits: 1 for ``pn``, ``n!/(2 ((n/2)!)^2)`` for ``p1n``."""
    if spec.family == "pn":
        return 1
    half = spec.n // 2
    return factorial(spec.n) // (2 * factorial(half) ** 2)


def is_edge_case(spec: StratificationSpec) -> bool:
    """True when the desingularization formula has empty middle ranges (n = 4)."""
    return spec.n == 4


def _require_even(spec: StratificationSpec, minimum: int) -> None:
    if spec.n % 2:
        raise ValidationError("n must be even")
    if spec.n < minimum:
        raise ValidationError(f"n must be at least {minimum}")


def desing_correction(spec: StratificationSpec) -> TruncatedSeries:
    """Change of Poincare series caused by blowing up the strictly semistable orbits.

    For ``pn`` the stabilizer is the normalizer of the torus, so only
    Weyl-invariant classes survive.  For ``p1n`` each of the
    ``orbit_count`` orbits has the torus itself as stabilizer, with normal
    weights ``+2`` and ``-2`` each of multiplicity ``n/2 - 1``; the two
    unstable strata of the exceptional fiber are then not identified.
    """
    _require_even(spec, 2)
    b, n = spec.bound, spec.n
    fiber = _poly(range(2, 2 * (n - 3) + 1, 2), b)
    strata = _poly([e + n - 2 for e in range(0, n - 3, 2)], b)
    if spec.family == "pn":
        return fiber * geom_series(4, b) - strata * geom_series(2, b)
    return (fiber - strata * 2) * geom_series(2, b) * orbit_count(spec)


def desing_series(spec: StratificationSpec) -> TruncatedSeries:
    return semistable_series(spec) + desing_correction(spec)


def ih_kernel_series(spec: StratificationSpec) -> TruncatedSeries:
    """Kernel of ``H(desing) -> IH`` for the ``pn`` family, ``n`` even."""
    _require_even(spec, 6)
    b, n = spec.bound, spec.n
    rising = series_polynomial({2: 1}, b) * geom_series(2, b) * geom_series(4, b)
    coeffs = {}
    for k in range(1, n - 3):
        mirror = k if 2 * k <= n - 4 else n - 3 - k
        if 2 * mirror <= b:
            coeffs[2 * k] = rising.coefficient(2 * mirror)
    return series_polynomial(coeffs, b)


def ip_series(spec: StratificationSpec) -> TruncatedSeries:
    if spec.family != "pn":
        raise ValidationError("intersection Poincare series is available for the pn family only")
    _require_even(spec, 6)
    return desing_series(spec) - ih_kernel_series(spec)


def quotient_top_degree(spec: StratificationSpec) -> int:
    """Real dimension of the quotient: ``2(n-3)``."""
    return 2 * (spec.n - 3)
