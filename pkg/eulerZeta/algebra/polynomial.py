"""Univariate polynomials over the rationals."""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from ..exceptions import InvalidInputError, ZeroDivisionPolynomial
from .rationals import as_rational, format_rational, parse_rational


def _strip(coefficients) -> tuple[Fraction, ...]:
    coefficients = list(coefficients)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


class Polynomial:
    """Polynomial in ``t`` with exact rational coefficients, lowest degree first.

    The zero polynomial has no coefficients and degree ``None`` (standing for -inf).
    Instances are immutable and hashable.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients=()):
        self._coefficients = _strip(as_rational(c) for c in coefficients)

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @classmethod
    def t(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "Polynomial":
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def geometric(cls, m: int) -> "Polynomial":
        """Return 1 + t + ... + t^m."""
        return cls((1,) * (m + 1))

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        """Parse the space separated coefficient list "c0 c1 c2 ..."."""
        tokens = text.split()
        if not tokens:
            raise InvalidInputError("empty polynomial")
        return cls(parse_rational(tok) for tok in tokens)

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        return " ".join(format_rational(c) for c in self._coefficients)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coefficients

    @property
    def degree(self) -> int | None:
        return len(self._coefficients) - 1 if self._coefficients else None

    @property
    def leading(self) -> Fraction:
        return self._coefficients[-1] if self._coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coefficients

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coefficients):
            return self._coefficients[k]
        return Fraction(0)

    def __call__(self, x):
        """Evaluate by Horner's rule; works for any ring element ``x``."""
        result = 0
        for c in reversed(self._coefficients):
            result = result * x + c
        return result

    def reversed(self) -> "Polynomial":
        """Return t^deg * p(1/t)."""
        return Polynomial(reversed(self._coefficients))

    def shift(self, k: int) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial((0,) * k + self._coefficients)

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._coefficients), len(other._coefficients))
        return Polynomial(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._coefficients)

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
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other._coefficients):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionPolynomial()
        remainder = list(self._coefficients)
        d = other.degree
        quotient = [Fraction(0)] * max(len(remainder) - d, 0)
        lead = other.leading
        for k in range(len(remainder) - 1, d - 1, -1):
            factor = remainder[k] / lead
            if factor == 0:
                continue
            quotient[k - d] = factor
            for j, c in enumerate(other._coefficients):
                remainder[k - d + j] -= factor * c
        return Polynomial(quotient), Polynomial(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(("Polynomial", self._coefficients))

    def __repr__(self):
        return f"Polynomial([{self.to_text()}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self._coefficients):
            if c == 0:
                continue
            coeff = format_rational(c)
            if k == 0:
                terms.append(coeff)
            else:
                power = "t" if k == 1 else f"t^{k}"
                terms.append(power if c == 1 else f"{coeff}*{power}")
        return " + ".join(terms).replace("+ -", "- ")

    # integer content and primitive parts

    def content(self) -> Fraction:
        """Positive rational c with self / c an integer polynomial of content 1."""
        if self.is_zero():
            return Fraction(0)
        denominators = lcm(*(c.denominator for c in self._coefficients))
        numerators = reduce(gcd, (int(c * denominators) for c in self._coefficients))
        return Fraction(abs(numerators), denominators)

    def primitive(self) -> "Polynomial":
        """Integer polynomial of content 1 with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return Polynomial(x / c for x in self._coefficients)

    def pseudo_remainder(self, other: "Polynomial") -> "Polynomial":
        """Remainder of lc(other)^(deg self - deg other + 1) * self modulo other."""
        if other.is_zero():
            raise ZeroDivisionPolynomial()
        if self.is_zero() or self.degree < other.degree:
            return self
        scale = other.leading ** (self.degree - other.degree + 1)
        return (self * scale) % other


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor by primitive pseudo-remainder sequences.

    Parameters
    ----------
    a, b : Polynomial
        Inputs, not both zero.

    Returns
    -------
    Polynomial
        The gcd as a primitive integer polynomial with positive leading
        coefficient; ``1`` when the inputs are coprime.
    """
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionPolynomial()
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while True:
        if b.degree == 0:
            return Polynomial.constant(1)
        r = a.pseudo_remainder(b)
        if r.is_zero():
            return b
        a, b = b, r.primitive()
