"""Rational functions in one variable in canonical reduced form."""

from fractions import Fraction
from math import gcd, lcm
from functools import reduce

from ..exceptions import InvalidInputError, NotExpandableError, PoleError, ZeroDivisionPolynomial
from .polynomial import Polynomial, polynomial_gcd
from .rationals import as_rational
from .series import TruncatedSeries


class RationalFunction:
    """Quotient num/den of rational polynomials, kept reduced and canonical.

    Canonical form: numerator and denominator are coprime integer polynomials,
    their joint integer content is 1 and the denominator has a positive leading
    coefficient. Equality is therefore structural.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=1):
        num = num if isinstance(num, Polynomial) else Polynomial.constant(num)
        den = den if isinstance(den, Polynomial) else Polynomial.constant(den)
        self._num, self._den = _canonical(num, den)

    @classmethod
    def variable(cls) -> "RationalFunction":
        return cls(Polynomial.t())

    @classmethod
    def from_text(cls, text: str) -> "RationalFunction":
        """Parse "num | den" where both sides are coefficient lists."""
        num, sep, den = text.partition("|")
        if not sep:
            return cls(Polynomial.from_text(num))
        if not den.strip():
            raise InvalidInputError(f"missing denominator in {text!r}")
        return cls(Polynomial.from_text(num), Polynomial.from_text(den))

    def to_text(self) -> str:
        return f"{self._num.to_text()} | {self._den.to_text()}"

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self._num * (1 / self._den.leading)

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionPolynomial()
        return RationalFunction(self._den, self._num)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._den == other._den:
            return RationalFunction(self._num + other._num, self._den)
        return RationalFunction(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self._num, self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, exponent: int):
        base = self if exponent >= 0 else self.reciprocal()
        return RationalFunction(base._num ** abs(exponent), base._den ** abs(exponent))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash(("RationalFunction", self._num, self._den))

    def __repr__(self):
        return f"RationalFunction({self.to_text()})"

    def __str__(self):
        if self.is_polynomial() and self._den.leading == 1:
            return str(self._num)
        return f"({self._num}) / ({self._den})"


def _canonical(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    if den.is_zero():
        raise ZeroDivisionPolynomial()
    if num.is_zero():
        return Polynomial(), Polynomial.constant(1)
    g = polynomial_gcd(num, den)
    if g.degree:
        num, den = num // g, den // g
    scale = lcm(*(c.denominator for c in num.coefficients + den.coefficients))
    num, den = num * scale, den * scale
    content = reduce(gcd, (int(c) for c in num.coefficients + den.coefficients))
    if den.leading < 0:
        content = -content
    return num * Fraction(1, content), den * Fraction(1, content)


def ratfunc_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Return the canonical reduced form of num/den.

    Raises
    ------
    ZeroDivisionPolynomial
        If ``den`` is the zero polynomial.
    """
    return RationalFunction(num, den)


def ratfunc_eval(f: RationalFunction, x) -> Fraction:
    """Evaluate ``f`` at the rational point ``x`` exactly.

    Raises
    ------
    PoleError
        If ``x`` is a root of the reduced denominator, with its multiplicity.
    """
    x = as_rational(x)
    den = f.denominator(x)
    if den == 0:
        root = Polynomial((-x, 1))
        multiplicity, rest = 0, f.denominator
        while rest.degree and (rest % root).is_zero():
            rest = rest // root
            multiplicity += 1
        raise PoleError(x, multiplicity)
    return Fraction(f.numerator(x)) / den


def ratfunc_expand(f: RationalFunction, order: int) -> TruncatedSeries:
    """Taylor expansion of ``f`` at 0 up to ``t^order``.

    Raises
    ------
    NotExpandableError
        If the denominator vanishes at 0.
    """
    den = f.denominator
    d0 = den.coefficient(0)
    if d0 == 0:
        raise NotExpandableError()
    coefficients: list[Fraction] = []
    for k in range(order + 1):
        value = f.numerator.coefficient(k)
        for j in range(1, min(k, den.degree) + 1):
            value -= den.coefficient(j) * coefficients[k - j]
        coefficients.append(value / d0)
    return TruncatedSeries(coefficients, order)


def ratfunc_substitute_reciprocal(f: RationalFunction) -> RationalFunction:
    """Return g with g(t) = f(1/t)."""
    if f.is_zero():
        return f
    num, den = f.numerator, f.denominator
    top = max(num.degree, den.degree)
    return RationalFunction(num.reversed().shift(top - num.degree), den.reversed().shift(top - den.degree))
