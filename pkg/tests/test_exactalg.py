import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpairing.errors import NonExpandablePole, ValidationError
from qpairing.exactalg import (
    I,
    I_EXP,
    GaussianRational,
    LinearForm,
    LocalizationTerm,
    MultiPoly,
    TruncatedSeries,
    geom_series,
    laurent_expand,
    poly_arith,
    series_polynomial,
)

from oracles import X, poly_to_sympy, term_to_sympy, to_sympy

import sympy as sp

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
    assert a.conjugate().conjugate() == a


def test_imaginary_unit_squares_to_minus_one():
    assert I * I == GaussianRational(-1)
    assert GaussianRational(3) == Fraction(3)
    assert hash(GaussianRational(Fraction(1, 2))) == hash(Fraction(1, 2))


def _random_poly(rng, nvars=2, terms=4, deg=3):
    return MultiPoly(nvars, {
        tuple(rng.randint(0, deg) for _ in range(nvars)): GaussianRational(
            Fraction(rng.randint(-5, 5), rng.randint(1, 4)), rng.choice([0, 0, 1, -2]))
        for _ in range(terms)
    })


def test_ring_axioms_by_evaluation():
    rng = random.Random(7)
    for _ in range(30):
        a, b, c = (_random_poly(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        for _ in range(5):
            pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(2)]
            assert (a * b + c).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt)


def test_poly_arith_examples():
    x1, x2 = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    assert poly_arith(x1 + x2, x1 - x2, "mul") == x1**2 - x2**2
    assert poly_arith(x1 + x2, MultiPoly.zero(2), "mul").is_zero()
    xi, rho = x1, x2
    expected = xi**5 - 3 * xi**4 * rho + 3 * xi**3 * rho**2 - xi**2 * rho**3
    assert poly_arith((xi - rho) ** 3, xi**2, "mul") == expected
    with pytest.raises(ValidationError):
        poly_arith(x1, MultiPoly.variable(3, 0), "add")


def test_no_zero_terms_stored():
    x = MultiPoly.variable(1, 0)
    p = (x + 1) - (x + 1)
    assert p.terms == {}
    assert not MultiPoly(2, {(1, 0): 0}).terms


def test_substitute_matches_sympy():
    rng = random.Random(3)
    x1, x2 = sp.symbols("x1 x2")
    for _ in range(10):
        p = _random_poly(rng)
        img = [_random_poly(rng, 2, 2, 2), _random_poly(rng, 2, 2, 2)]
        got = poly_to_sympy(p.substitute(img), (x1, x2))
        want = poly_to_sympy(p, (x1, x2)).subs(
            {x1: poly_to_sympy(img[0], (x1, x2)), x2: poly_to_sympy(img[1], (x1, x2))}, simultaneous=True)
        assert sp.expand(got - want) == 0


def test_linear_form_evaluation():
    f = LinearForm.of(2, Fraction(-1, 3))
    g = LinearForm.of(1, 1)
    assert f((3, 6)) == 4
    assert (f + g)((1, 1)) == f((1, 1)) + g((1, 1))
    assert LinearForm.zero(2)((5, 7)) == 0


def test_localization_term_merges_and_multiplies():
    x = LinearForm.of(1)
    t = LocalizationTerm(MultiPoly.one(1), LinearForm.of(2), ((x, 1), (x, 2)))
    assert t.denominator == ((x, 3),)
    u = t * LocalizationTerm(MultiPoly.variable(1, 0), LinearForm.of(-1), ((LinearForm.of(2), 1),))
    assert u.pole_order == 4 and u.exponent == LinearForm.of(1)
    with pytest.raises(ValidationError):
        LocalizationTerm(MultiPoly.one(1), LinearForm.of(0), ((LinearForm.of(0), 1),))
    with pytest.raises(ValidationError):
        t * LocalizationTerm(MultiPoly.one(1), LinearForm.of(0), (), I_EXP)


def test_laurent_examples():
    x = LinearForm.of(1)
    t = LocalizationTerm(MultiPoly.one(1), LinearForm.of(3), ((x, 1),))
    out = laurent_expand(t, 0, 0)
    assert out[-1].constant_term() == 1 and out[0].constant_term() == 3
    t2 = LocalizationTerm(MultiPoly.variable(1, 0) ** 2, LinearForm.of(0), ((x, 3),))
    out = laurent_expand(t2, 0, 3)
    assert list(out) == [-1] and out[-1].constant_term() == 1


def test_laurent_non_expandable_pole():
    t = LocalizationTerm(MultiPoly.one(2), LinearForm.zero(2),
                         ((LinearForm.of(1, 0), 1), (LinearForm.of(1, 1), 1)))
    with pytest.raises(NonExpandablePole):
        laurent_expand(t, 0, -1)


def _random_rank1_term(rng):
    num = MultiPoly(1, {(rng.randint(0, 3),): rng.randint(-4, 4) or 1, (0,): rng.randint(-3, 3)})
    lam = LinearForm.of(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
    den = ((LinearForm.of(rng.choice([1, -2, 3])), rng.randint(0, 3)),)
    den = tuple(d for d in den if d[1])
    return LocalizationTerm(num, lam, den, rng.choice(["real", "i"]))


def test_laurent_product_is_cauchy_product():
    rng = random.Random(11)
    for _ in range(25):
        a, b = _random_rank1_term(rng), _random_rank1_term(rng)
        if a.convention != b.convention:
            b = LocalizationTerm(b.numerator, b.exponent, b.denominator, a.convention)
        order = rng.randint(0, 6)
        ea = laurent_expand(a, 0, order + b.pole_order)
        eb = laurent_expand(b, 0, order + a.pole_order)
        prod = laurent_expand(a * b, 0, order)
        cauchy = {}
        for i, ci in ea.items():
            for j, cj in eb.items():
                if i + j <= order:
                    cauchy[i + j] = cauchy.get(i + j, GaussianRational(0)) + ci.constant_term() * cj.constant_term()
        cauchy = {k: v for k, v in cauchy.items() if v}
        assert {k: v.constant_term() for k, v in prod.items()} == cauchy


def test_laurent_matches_sympy_series():
    rng = random.Random(5)
    for _ in range(10):
        t = _random_rank1_term(rng)
        out = laurent_expand(t, 0, 3)
        expr = term_to_sympy(t, (X,))
        ser = sp.series(expr, X, 0, 4).removeO()
        for k in range(-t.pole_order, 4):
            want = sp.expand(ser).coeff(X, k)
            got = out[k].constant_term() if k in out else 0
            assert sp.simplify(want - to_sympy(got)) == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_geom_series_inverts_one_minus_tk(k):
    g = geom_series(k, 20)
    one_minus = series_polynomial({0: 1, k: -1}, 20)
    assert one_minus * g == TruncatedSeries.one(20)


def test_geom_series_examples():
    assert geom_series(4, 9).to_list() == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0]
    assert geom_series(1, 3).to_list() == [1, 1, 1, 1]
    with pytest.raises(ValidationError):
        geom_series(0, 3)


@settings(max_examples=40)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_series_product_matches_polynomial_product(a, b):
    bound = 8
    pa = MultiPoly(1, {(k,): c for k, c in enumerate(a)})
    pb = MultiPoly(1, {(k,): c for k, c in enumerate(b)})
    prod = series_polynomial(a, bound) * series_polynomial(b, bound)
    full = pa * pb
    assert prod.to_list() == [full.coefficient((k,)) for k in range(bound + 1)]


def test_palindromic():
    assert series_polynomial([1, 0, 2, 0, 1], 10).is_palindromic()
    assert not series_polynomial([1, 0, 2, 0, 2], 10).is_palindromic()
