"""Buchberger's algorithm over Q(i) in lex order (variable 0 largest)."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import ValidationError
from .exactalg import MultiPoly


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: MultiPoly) -> MultiPoly:
    _, c = p.leading()
    return p * (1 / c)


def normal_form(p: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Fully reduce ``p`` modulo ``basis`` (remainder of multivariate division)."""
    leads = [(g.leading(), g) for g in basis if g]
    remainder: dict = {}
    work = dict(p.terms)
    n = p.nvars
    while work:
        mono = max(work)
        c = work[mono]
        for (lm, lc), g in leads:
            if _divides(lm, mono):
                shift = tuple(a - b for a, b in zip(mono, lm))
                factor = c / lc
                for gm, gc in g.terms.items():
                    m = tuple(a + b for a, b in zip(gm, shift))
                    v = work.get(m)
                    v = -factor * gc if v is None else v - factor * gc
                    if v:
                        work[m] = v
                    else:
                        work.pop(m, None)
                break
        else:
            remainder[mono] = c
            del work[mono]
    return MultiPoly(n, remainder)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    (fm, fc), (gm, gc) = f.leading(), g.leading()
    lcm = _lcm(fm, gm)
    mf = MultiPoly.monomial(tuple(a - b for a, b in zip(lcm, fm)), 1 / fc)
    mg = MultiPoly.monomial(tuple(a - b for a, b in zip(lcm, gm)), 1 / gc)
    return mf * f - mg * g


def buchberger(generators: Sequence[MultiPoly]) -> list[MultiPoly]:
    """Reduced, monic Groebner basis sorted by decreasing leading monomial."""
    basis = [_monic(g) for g in generators if g]
    if not basis:
        return []
    pairs = list(combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        lm_i, lm_j = basis[i].leading()[0], basis[j].leading()[0]
        if all(not (a and b) for a, b in zip(lm_i, lm_j)):
            continue  # coprime leading monomials reduce to zero
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if r:
            basis.append(_monic(r))
            k = len(basis) - 1
            pairs.extend((m, k) for m in range(k))
    return reduce_basis(basis)


def reduce_basis(basis: Sequence[MultiPoly]) -> list[MultiPoly]:
    minimal = []
    for k, g in enumerate(basis):
        lm = g.leading()[0]
        redundant = False
        for m, h in enumerate(basis):
            if m == k:
                continue
            hm = h.leading()[0]
            if _divides(hm, lm) and (hm != lm or m < k):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        reduced.append(_monic(normal_form(g, others)))
    return sorted(reduced, key=lambda g: g.leading()[0], reverse=True)


def is_groebner(basis: Sequence[MultiPoly]) -> bool:
    return all(not normal_form(s_polynomial(f, g), basis) for f, g in combinations(basis, 2))


def standard_monomials(basis: Sequence[MultiPoly], nvars: int, degree: int) -> list[tuple]:
    """Monomials of the given total degree not divisible by any leading monomial."""
    if degree < 0:
        raise ValidationError("degree must be non-negative")
    leads = [g.leading()[0] for g in basis]

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    if nvars == 0:
        return [()] if degree == 0 and not leads else []
    return [m for m in compositions(degree, nvars) if not any(_divides(l, m) for l in leads)]
