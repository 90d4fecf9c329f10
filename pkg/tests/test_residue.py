import random
from fractions import Fraction
from math import factorial

import pytest

from qpairing.errors import InvalidChamber, PerturbationRequired, ValidationError
from qpairing.exactalg import I, I_EXP, GaussianRational, LinearForm, LocalizationTerm, MultiPoly
from qpairing.residue import (
    Chamber,
    Perturbation,
    PresentedRing,
    jk_residue,
    pushforward_projective_bundle,
    residue_1d,
    residue_1d_plus,
)

from oracles import X, from_sympy, jk_rank2, residue0, term_to_sympy

ONE1 = MultiPoly.one(1)
X_ = LinearForm.of(1)


def term1(num, lam, pole, conv="real"):
    return LocalizationTerm(num, LinearForm.of(lam), ((X_, pole),) if pole else (), conv)


def test_residue_1d_examples():
    assert residue_1d(term1(ONE1, 1, 1)) == 1
    x = MultiPoly.variable(1, 0)
    assert residue_1d(term1(x**2 * 4, 3, 3)) == 4
    assert residue_1d(term1(ONE1, 0, 0)) == 0


@pytest.mark.parametrize("n,N", [(3, 0), (4, 1), (5, 0), (5, 2), (6, 1)])
def test_residue_1d_y_polynomial(n, N):
    x = MultiPoly.variable(1, 0)
    k = n - N - 2
    for y in (Fraction(1), Fraction(-2, 3), Fraction(5, 2)):
        t = LocalizationTerm(x**N, LinearForm.of(-y), ((X_, n - 1),), I_EXP)
        assert residue_1d(t) == (-I * y) ** k * Fraction(1, factorial(k))


def test_residue_1d_matches_sympy():
    rng = random.Random(2)
    for _ in range(15):
        num = MultiPoly(1, {(rng.randint(0, 3),): rng.randint(1, 5), (0,): rng.randint(-3, 3)})
        t = LocalizationTerm(num, LinearForm.of(Fraction(rng.randint(-7, 7), 3)),
                             ((LinearForm.of(rng.choice([1, -1, 2, -3])), rng.randint(1, 4)),),
                             rng.choice(["real", "i"]))
        assert residue_1d(t) == from_sympy(residue0(term_to_sympy(t, (X,))))


def test_residue_1d_rejects_rank2():
    t = LocalizationTerm(MultiPoly.one(2), LinearForm.zero(2), ((LinearForm.of(1, 0), 1),))
    with pytest.raises(ValidationError):
        residue_1d(t)


def test_residue_1d_plus_examples():
    assert residue_1d_plus(term1(ONE1, 2, 1), 2) == 1
    assert residue_1d_plus(term1(ONE1, -1, 1), -1) == 0
    assert residue_1d_plus(term1(ONE1, 0, 1), 0) == 1


def _random_rank1(rng):
    num = MultiPoly(1, {(rng.randint(0, 2),): rng.randint(1, 4), (0,): rng.randint(-2, 2)})
    lam = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 4))
    den = ((LinearForm.of(rng.choice([1, -1, 2, -3, Fraction(1, 2)])), rng.randint(1, 4)),)
    return LocalizationTerm(num, LinearForm.of(lam), den), lam


def test_rank1_jk_agrees_with_residue_1d_plus():
    rng = random.Random(4)
    nonzero = 0
    for _ in range(50):
        t, lam = _random_rank1(rng)
        for sign in (1, -1):
            jk = jk_residue([t], Chamber.of(sign), Perturbation.of(-sign))
            assert jk == residue_1d_plus(t, lam * sign) * sign
            nonzero += bool(jk)
    assert nonzero > 20


def test_rank1_jk_at_zero_exponent_follows_perturbation():
    t = term1(ONE1, 0, 1)
    assert jk_residue([t], Chamber.of(1), Perturbation.of(-1)) == 0
    assert residue_1d_plus(t, 0) == 1


def test_axiom_i_non_spanning():
    b1, b2 = LinearForm.of(1, 2), LinearForm.of(-2, -4)
    ch = Chamber.of(1, Fraction(1, 3))
    lam = LinearForm.of(3, 1)
    assert jk_residue(LocalizationTerm(MultiPoly.one(2), lam, ((b1, 1),)), ch) == 0
    assert jk_residue(LocalizationTerm(MultiPoly.one(2), lam, ((b1, 2), (b2, 1))), ch) == 0


def test_axiom_iv_basis_case():
    b1, b2 = LinearForm.of(2, 1), LinearForm.of(-1, 3)
    ch = Chamber.of(1, 1)
    t = LocalizationTerm(MultiPoly.one(2), b1 + b2, ((b1, 1), (b2, 1)))
    assert jk_residue(t, ch) == Fraction(1, 7)
    # outside the cone
    t = LocalizationTerm(MultiPoly.one(2), b1 - b2.scale(2), ((b1, 1), (b2, 1)))
    assert jk_residue(t, ch) == 0
    # lattice basis
    e1, e2 = LinearForm.of(1, 0), LinearForm.of(1, 1)
    t = LocalizationTerm(MultiPoly.one(2), e1 + e2, ((e1, 1), (e2, 1)))
    assert jk_residue(t, Chamber.of(2, 1)) == 1
    # rank 1
    assert jk_residue(term1(ONE1, 3, 0) .with_exponent(LinearForm.of(3)), Chamber.of(1)) == 0
    t = LocalizationTerm(ONE1, LinearForm.of(3), ((LinearForm.of(3), 1),))
    assert jk_residue(t, Chamber.of(1)) == Fraction(1, 3)


def test_sign_adjustment_moves_into_numerator():
    b1, b2 = LinearForm.of(1, 0), LinearForm.of(0, 1)
    t = LocalizationTerm(MultiPoly.one(2), LinearForm.of(-1, 2), ((b1, 1), (b2, 1)))
    # chamber (-1, 1) flips b1: -1/((-b1) b2), lam = (-b1) + 2 b2 lies in the cone
    assert jk_residue(t, Chamber.of(-1, 1)) == -1


def _lam_poly(lam: LinearForm, m: int) -> MultiPoly:
    return lam.as_poly() ** m * Fraction(1, factorial(m))


def _random_rank2(rng, max_forms=4, matched=False):
    forms = []
    target = rng.randint(2, max_forms)
    while len(forms) < target:
        f = (rng.randint(-3, 3), rng.randint(-3, 3))
        if f != (0, 0) and all(f[0] * g[1] - f[1] * g[0] for g in forms):
            forms.append(f)
    den = tuple((LinearForm.of(*f), rng.randint(1, 2)) for f in forms)
    deg = rng.randint(0, 2)
    if matched:
        # leave room for the exponential to supply the missing degree
        deg = min(deg, sum(m for _, m in den) - 2)
    num = MultiPoly(2, {(i, deg - i): rng.choice((-3, -2, -1, 1, 2, 3)) for i in range(deg + 1)})
    lam = LinearForm.of(Fraction(rng.randint(-9, 9), 7) + Fraction(1, 13),
                        Fraction(rng.randint(-9, 9), 5) + Fraction(1, 11))
    xi = (Fraction(1), Fraction(rng.randint(-5, 5), 3) + Fraction(1, 17))
    return LocalizationTerm(num, lam, den), xi


def test_axiom_ii_and_iii():
    rng = random.Random(21)
    for _ in range(15):
        t, xi = _random_rank2(rng)
        ch = Chamber(xi)
        whole = jk_residue(t, ch)
        total = GaussianRational(0)
        for m in range(t.pole_order + 2):
            piece = t.with_numerator(t.numerator * _lam_poly(t.exponent, m))
            vals = [jk_residue(piece.with_exponent(t.exponent.scale(s)), ch)
                    for s in (Fraction(1, 10), Fraction(1, 20), Fraction(1, 40))]
            d = t.pole_order - 2 - (t.numerator.degree() + m)
            if d == 0:
                # homogeneous of the right degree: independent of s
                assert vals[0] == vals[1] == vals[2]
                total = total + vals[0]
            elif d > 0:
                # scales like s^d, so the limit is 0
                assert vals[0] == vals[1] * 2**d == vals[2] * 4**d
            else:
                assert vals == [0, 0, 0]
        assert whole == total


def test_linearity():
    rng = random.Random(8)
    for _ in range(10):
        t1, xi = _random_rank2(rng)
        t2, _ = _random_rank2(rng)
        a, b = Fraction(rng.randint(-5, 5), 3), GaussianRational(1, rng.randint(-2, 2))
        ch = Chamber(xi)
        lhs = jk_residue([t1.scaled(a), t2.scaled(b)], ch)
        assert lhs == jk_residue(t1, ch) * a + jk_residue(t2, ch) * b


def test_perturbation_independence_interior():
    rng = random.Random(13)
    for _ in range(20):
        t, xi = _random_rank2(rng)
        ch = Chamber(xi)
        r1 = Perturbation(LinearForm(tuple(-v for v in xi)))
        r2 = Perturbation(LinearForm((-xi[0] * 3 + Fraction(1, 5), -xi[1] * 3 - Fraction(1, 9))))
        r2.check(ch)
        assert jk_residue(t, ch, r1) == jk_residue(t, ch, r2)


def test_rank2_matches_iterated_residue_oracle():
    rng = random.Random(1)
    nonzero = 0
    for _ in range(50):
        t, xi = _random_rank2(rng, matched=True)
        got = jk_residue(t, Chamber(xi), Perturbation(LinearForm(tuple(-v for v in xi))))
        assert got == from_sympy(jk_rank2(t, xi))
        nonzero += bool(got)
    assert nonzero >= 10


def test_boundary_exponent_uses_perturbation():
    e1, e2 = LinearForm.of(1, 0), LinearForm.of(0, 1)
    ch = Chamber.of(1, 1)
    t = LocalizationTerm(MultiPoly.one(2), e1, ((e1, 1), (e2, 1)))
    assert jk_residue(t, ch, Perturbation.of(-1, Fraction(1, 2))) == 1
    assert jk_residue(t, ch, Perturbation.of(-1, -1)) == 0
    with pytest.raises(PerturbationRequired):
        jk_residue(t, ch, Perturbation.of(-1, 0))


def test_invalid_chamber_and_perturbation():
    e1, e2 = LinearForm.of(1, 0), LinearForm.of(0, 1)
    t = LocalizationTerm(MultiPoly.one(2), e1 + e2, ((e1, 1), (e2, 1)))
    with pytest.raises(InvalidChamber):
        jk_residue(t, Chamber.of(1, 0))
    with pytest.raises(ValidationError):
        jk_residue(t, Chamber.of(1, 1), Perturbation.of(1, 1))


def test_pushforward_examples():
    pt = PresentedRing.point()
    y = MultiPoly.variable(1, 0)
    zero = MultiPoly.zero(0)
    assert pushforward_projective_bundle(y**2, [zero] * 3, pt) == 1
    assert pushforward_projective_bundle(y, [zero] * 3, pt) == 0
    h = MultiPoly.variable(1, 0)
    p1 = PresentedRing(("h",), (2,), [h**2], (1,))
    y2 = MultiPoly.variable(2, 1)
    assert pushforward_projective_bundle(y2**2, [h, MultiPoly.zero(1)], p1) == -1
    # normal form in the presentation of the projective bundle itself
    hh = MultiPoly.variable(2, 0)
    total = PresentedRing(("h", "y"), (2, 2), [hh**2, y2**2 + hh * y2], (1, 1))
    assert total.integrate(y2**2) == -1
    with pytest.raises(ValidationError):
        pushforward_projective_bundle(y, [], pt)


def test_pushforward_matches_bundle_presentation():
    rng = random.Random(17)
    h1 = MultiPoly.variable(1, 0)
    base = PresentedRing(("h",), (2,), [h1**3], (2,))
    h, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    for _ in range(10):
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        ring = PresentedRing(("h", "y"), (2, 2), [h**3, y**2 + h * y * a + h**2 * b], (2, 1))
        for j in range(3):
            cls = h**j * y ** (3 - j)
            got = pushforward_projective_bundle(cls, [h1 * a, h1**2 * b], base)
            assert got == ring.integrate(cls)
