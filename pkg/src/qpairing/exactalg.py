"""Exact arithmetic kernel.

Everything downstream is built from five value types defined here:
``GaussianRational`` scalars, sparse ``MultiPoly`` polynomials, ``LinearForm``
covectors, ``LocalizationTerm`` germs ``q(X) e^{lam(X)} / prod beta_j(X)^m_j``
and ``TruncatedSeries``.  Rationals are ``fractions.Fraction``.  All values
are treated as immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence, Union

from .errors import NonExpandablePole, ValidationError

REAL_EXP = "real"
I_EXP = "i"
CONVENTIONS = (REAL_EXP, I_EXP)


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def coerce(x: "ScalarLike") -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            if not other.im:
                return GaussianRational(self.re * other.re, self.im * other.re)
            if not self.im:
                return GaussianRational(self.re * other.re, self.re * other.im)
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not o.im:
            return GaussianRational(self.re / o.re, self.im / o.re)
        norm = o.re * o.re + o.im * o.im
        return self * GaussianRational(o.re / norm, -o.im / norm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def real_value(self) -> Fraction:
        """Return the real part, insisting that the imaginary part is zero."""
        if self.im:
            raise ValidationError(f"expected a real value, got {self}")
        return self.re

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


ScalarLike = Union[int, Fraction, GaussianRational]
I = GaussianRational(0, 1)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: ScalarLike) -> str:
    x = GaussianRational.coerce(x)
    if not x.im:
        return format_rational(x.re)
    im = "i" if x.im == 1 else "-i" if x.im == -1 else f"{format_rational(x.im)}i"
    if not x.re:
        return im
    sign = "" if im.startswith("-") else "+"
    return f"{format_rational(x.re)}{sign}{im}"


def parse_rational(value) -> Fraction:
    """Read a rational from ``[num, den]``, an int, or a ``"p/q"`` string."""
    if isinstance(value, bool):
        raise ValidationError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError as exc:
            raise ValidationError(f"not a rational: {value!r}") from exc
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        if value[1] == 0:
            raise ValidationError(f"zero denominator in {value!r}")
        return Fraction(value[0], value[1])
    raise ValidationError(f"not a rational: {value!r}")


def rational_pair(q: Fraction) -> list[int]:
    q = Fraction(q)
    return [q.numerator, q.denominator]


Monomial = tuple


class MultiPoly:
    """Sparse polynomial in ``nvars`` positional variables.

    Terms map exponent tuples to nonzero ``GaussianRational`` coefficients.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, ScalarLike] | None = None):
        self.nvars = nvars
        clean: dict[tuple, GaussianRational] = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars or any(e < 0 for e in mono):
                    raise ValidationError(f"bad exponent vector {mono} for {nvars} variables")
                c = GaussianRational.coerce(c)
                if c:
                    clean[mono] = clean[mono] + c if mono in clean else c
                    if not clean[mono]:
                        del clean[mono]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: ScalarLike) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise ValidationError(f"variable index {index} out of range for {nvars} variables")
        mono = [0] * nvars
        mono[index] = 1
        return cls._raw(nvars, {tuple(mono): ONE})

    @classmethod
    def monomial(cls, exponents: Sequence[int], c: ScalarLike = 1) -> "MultiPoly":
        return cls(len(exponents), {tuple(exponents): c})

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValidationError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            if mono in out:
                s = out[mono] + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
            else:
                out[mono] = c
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            if not c:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                v = c1 * c2
                if mono in out:
                    v = out[mono] + v
                    if v:
                        out[mono] = v
                    else:
                        del out[mono]
                else:
                    out[mono] = v
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValidationError("polynomial powers must be non-negative integers")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.nvars, ZERO)

    def coefficient(self, mono: Sequence[int]) -> GaussianRational:
        return self.terms.get(tuple(mono), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(e * w for e, w in zip(m, weights)) for m in self.terms}

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def scale(self, c: ScalarLike) -> "MultiPoly":
        return self * GaussianRational.coerce(c)

    def evaluate(self, point: Sequence[ScalarLike]) -> GaussianRational:
        if len(point) != self.nvars:
            raise ValidationError("evaluation point has the wrong length")
        pt = [GaussianRational.coerce(x) for x in point]
        total = ZERO
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(pt, mono):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Replace variable ``k`` by ``images[k]`` (all images share one ring)."""
        if len(images) != self.nvars:
            raise ValidationError("substitution needs one image per variable")
        if not images:
            return self
        target = images[0].nvars
        for im in images:
            if im.nvars != target:
                raise ValidationError("substitution images live in different rings")
        cache: dict[tuple[int, int], MultiPoly] = {}

        def power(k: int, e: int) -> MultiPoly:
            key = (k, e)
            if key not in cache:
                cache[key] = images[k] ** e
            return cache[key]

        total = MultiPoly.zero(target)
        for mono, c in self.terms.items():
            piece = MultiPoly.constant(target, c)
            for k, e in enumerate(mono):
                if e:
                    piece = piece * power(k, e)
            total = total + piece
        return total

    def split_variable(self, index: int) -> dict[int, "MultiPoly"]:
        """Group terms by the power of one variable; values drop that variable."""
        parts: dict[int, dict] = {}
        for mono, c in self.terms.items():
            rest = mono[:index] + mono[index + 1 :]
            parts.setdefault(mono[index], {})[rest] = c
        return {e: MultiPoly._raw(self.nvars - 1, t) for e, t in parts.items()}

    def extend(self, extra: int) -> "MultiPoly":
        """Embed into a ring with ``extra`` more trailing variables."""
        pad = (0,) * extra
        return MultiPoly._raw(self.nvars + extra, {m + pad: c for m, c in self.terms.items()})

    def leading(self) -> tuple[tuple, GaussianRational]:
        """Leading monomial and coefficient in lex order (variable 0 largest)."""
        if not self.terms:
            raise ValidationError("zero polynomial has no leading term")
        mono = max(self.terms)
        return mono, self.terms[mono]

    def sorted_terms(self) -> list[tuple[tuple, GaussianRational]]:
        return sorted(self.terms.items(), reverse=True)

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = list(names) if names else [f"X{k + 1}" for k in range(self.nvars)]
        pieces = []
        for mono, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0]))):
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono_txt = "*".join(factors)
            coef = format_scalar(c)
            if c.im and c.re:
                coef = f"({coef})"
            if not mono_txt:
                pieces.append(coef)
            elif c == 1:
                pieces.append(mono_txt)
            elif c == -1:
                pieces.append(f"-{mono_txt}")
            else:
                pieces.append(f"{coef}*{mono_txt}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.format()})"


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Add or multiply two polynomials over the same variables."""
    a._check(b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValidationError(f"unknown polynomial operation {op!r}")


@dataclass(frozen=True)
class LinearForm:
    """A covector on the Cartan algebra, stored by its rational coordinates."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs) -> "LinearForm":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, rank: int) -> "LinearForm":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def __call__(self, point: Sequence[ScalarLike]):
        if len(point) != self.rank:
            raise ValidationError("evaluation point has the wrong length")
        total = Fraction(0)
        for c, x in zip(self.coeffs, point):
            total = total + c * x
        return total

    def _check(self, other: "LinearForm"):
        if self.rank != other.rank:
            raise ValidationError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "LinearForm") -> "LinearForm":
        self._check(other)
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        self._check(other)
        return LinearForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "LinearForm":
        c = Fraction(c)
        return LinearForm(tuple(a * c for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_poly(self) -> MultiPoly:
        n = self.rank
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                mono = [0] * n
                mono[k] = 1
                terms[tuple(mono)] = c
        return MultiPoly(n, terms)

    def format(self, names: Sequence[str] | None = None) -> str:
        return self.as_poly().format(names)

    def __str__(self):
        return "(" + ", ".join(format_rational(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class LocalizationTerm:
    """The germ ``numerator(X) * exp(lam(X)) / prod_j form_j(X)^m_j``.

    ``convention`` is ``"real"`` for ``e^{lam(X)}`` and ``"i"`` for
    ``e^{i lam(X)}``.  Equal denominator forms are merged on construction.
    """

    numerator: MultiPoly
    exponent: LinearForm
    denominator: tuple = ()
    convention: str = REAL_EXP

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValidationError(f"unknown exponential convention {self.convention!r}")
        rank = self.numerator.nvars
        if self.exponent.rank != rank:
            raise ValidationError("exponent rank differs from numerator variable count")
        merged: dict[LinearForm, int] = {}
        for form, mult in self.denominator:
            if not isinstance(form, LinearForm):
                form = LinearForm(tuple(form))
            if form.rank != rank:
                raise ValidationError("denominator form rank differs from numerator")
            if form.is_zero():
                raise ValidationError("denominator forms must be nonzero")
            if not isinstance(mult, int) or mult <= 0:
                raise ValidationError("denominator multiplicities must be positive integers")
            merged[form] = merged.get(form, 0) + mult
        ordered = tuple(sorted(merged.items(), key=lambda fm: fm[0].coeffs))
        object.__setattr__(self, "denominator", ordered)

    @property
    def rank(self) -> int:
        return self.numerator.nvars

    @property
    def pole_order(self) -> int:
        return sum(m for _, m in self.denominator)

    def denominator_poly(self) -> MultiPoly:
        out = MultiPoly.one(self.rank)
        for form, mult in self.denominator:
            out = out * form.as_poly() ** mult
        return out

    def __mul__(self, other: "LocalizationTerm") -> "LocalizationTerm":
        if not isinstance(other, LocalizationTerm):
            return NotImplemented
        if other.convention != self.convention:
            raise ValidationError("cannot multiply terms with different exponential conventions")
        return LocalizationTerm(
            self.numerator * other.numerator,
            self.exponent + other.exponent,
            self.denominator + other.denominator,
            self.convention,
        )

    def scaled(self, c: ScalarLike) -> "LocalizationTerm":
        return LocalizationTerm(self.numerator * GaussianRational.coerce(c), self.exponent,
                                self.denominator, self.convention)

    def with_numerator(self, numerator: MultiPoly) -> "LocalizationTerm":
        return LocalizationTerm(numerator, self.exponent, self.denominator, self.convention)

    def with_exponent(self, exponent: LinearForm) -> "LocalizationTerm":
        return LocalizationTerm(self.numerator, exponent, self.denominator, self.convention)

    def format(self, names: Sequence[str] | None = None) -> str:
        num = self.numerator.format(names)
        parts = [f"({num})"]
        if not self.exponent.is_zero():
            lam = self.exponent.format(names)
            parts.append(f"exp({'i*' if self.convention == I_EXP else ''}({lam}))")
        den = " * ".join(
            f"({f.format(names)})" + (f"^{m}" if m > 1 else "") for f, m in self.denominator
        )
        return " * ".join(parts) + (f" / ({den})" if den else "")


def exponential_coefficient(lam: Fraction, k: int, convention: str) -> GaussianRational:
    """Coefficient of ``x^k`` in ``e^{lam x}`` or ``e^{i lam x}``."""
    c = GaussianRational(Fraction(lam) ** k / factorial(k))
    if convention == I_EXP:
        c = c * I**k
    return c


def laurent_expand(term: LocalizationTerm, var: int, order: int) -> dict[int, MultiPoly]:
    """Laurent coefficients of ``term`` in variable ``var`` up to ``order``.

    Only poles along ``X_var = 0`` can be expanded: every denominator form must
    be a nonzero multiple of ``X_var`` and the exponent may only involve
    ``X_var``.  Zero coefficients are omitted from the result.
    """
    n = term.rank
    if not 0 <= var < n:
        raise ValidationError(f"variable index {var} out of range")
    scale = Fraction(1)
    pole = 0
    for form, mult in term.denominator:
        c = form.coeffs[var]
        others = [a for k, a in enumerate(form.coeffs) if k != var and a]
        if not c or others:
            raise NonExpandablePole(
                f"denominator factor {form} is not a pure multiple of variable {var}"
            )
        scale *= c**mult
        pole += mult
    if any(a for k, a in enumerate(term.exponent.coeffs) if k != var):
        raise NonExpandablePole("exponent involves variables other than the expansion variable")
    lam = term.exponent.coeffs[var]
    inv = GaussianRational(1 / scale)
    parts = term.numerator.split_variable(var)
    out: dict[int, MultiPoly] = {}
    for e in range(-pole, order + 1):
        acc = MultiPoly.zero(n - 1)
        for a, part in parts.items():
            k = e + pole - a
            if k < 0:
                continue
            c = exponential_coefficient(lam, k, term.convention)
            if c:
                acc = acc + part * c
        if acc:
            out[e] = acc * inv
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known up to and including exponent ``bound``."""

    coeffs: tuple
    bound: int
    var: str = "t"

    def __post_init__(self):
        if self.bound < 0:
            raise ValidationError("series bound must be non-negative")
        cs = [GaussianRational.coerce(c) for c in self.coeffs[: self.bound + 1]]
        cs += [ZERO] * (self.bound + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, ScalarLike], bound: int, var: str = "t"):
        cs = [ZERO] * (bound + 1)
        for k, c in coeffs.items():
            if k < 0:
                raise ValidationError("series exponents must be non-negative")
            if k <= bound:
                cs[k] = cs[k] + GaussianRational.coerce(c)
        return cls(tuple(cs), bound, var)

    @classmethod
    def one(cls, bound: int, var: str = "t"):
        return cls.from_dict({0: 1}, bound, var)

    def _pair(self, other: "TruncatedSeries"):
        if self.var != other.var:
            raise ValidationError("series in different variables")
        return min(self.bound, other.bound)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = TruncatedSeries.from_dict({0: other}, self.bound, self.var)
        b = self._pair(other)
        return TruncatedSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(b + 1)), b, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.bound, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            return TruncatedSeries(tuple(x * c for x in self.coeffs), self.bound, self.var)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        b = self._pair(other)
        out = [ZERO] * (b + 1)
        for i, a in enumerate(self.coeffs[: b + 1]):
            if not a:
                continue
            for j, c in enumerate(other.coeffs[: b + 1 - i]):
                if c:
                    out[i + j] = out[i + j] + a * c
        return TruncatedSeries(tuple(out), b, self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.var == other.var and self.bound == other.bound and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.bound, self.var))

    def coefficient(self, k: int) -> GaussianRational:
        if k > self.bound:
            raise ValidationError(f"coefficient {k} lies beyond the bound {self.bound}")
        return self.coeffs[k] if k >= 0 else ZERO

    def truncate(self, bound: int) -> "TruncatedSeries":
        if bound > self.bound:
            raise ValidationError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: bound + 1], bound, self.var)

    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient, -1 if none."""
        for k in range(self.bound, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def is_palindromic(self, top: int | None = None) -> bool:
        top = self.degree() if top is None else top
        if top > self.bound:
            raise ValidationError("palindromicity degree exceeds the bound")
        if any(self.coeffs[k] for k in range(top + 1, self.bound + 1)):
            return False
        return all(self.coeffs[k] == self.coeffs[top - k] for k in range(top + 1))

    def to_list(self) -> list[GaussianRational]:
        return list(self.coeffs)

    def format(self) -> str:
        pieces = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            txt = format_scalar(c)
            mono = "" if k == 0 else self.var if k == 1 else f"{self.var}^{k}"
            if mono:
                txt = mono if c == 1 else f"{txt}*{mono}"
            pieces.append(txt)
        body = " + ".join(pieces) if pieces else "0"
        return f"{body} + O({self.var}^{self.bound + 1})"

    def __str__(self):
        return self.format()


def geom_series(k: int, bound: int, var: str = "t") -> TruncatedSeries:
    """The series of ``1/(1 - var^k)`` truncated at ``bound``."""
    if k < 1:
        raise ValidationError("geometric series step must be at least 1")
    return TruncatedSeries.from_dict({e: 1 for e in range(0, bound + 1, k)}, bound, var)


def series_polynomial(coeffs: Mapping[int, ScalarLike] | Iterable[ScalarLike], bound: int,
                      var: str = "t") -> TruncatedSeries:
    if not isinstance(coeffs, Mapping):
        coeffs = dict(enumerate(coeffs))
    return TruncatedSeries.from_dict(coeffs, bound, var)
