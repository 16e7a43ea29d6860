"""Exact arithmetic: rationals, polynomials, rational functions and truncated series."""

from .polynomial import Polynomial, polynomial_gcd
from .ratfunc import (
    RationalFunction,
    ratfunc_eval,
    ratfunc_expand,
    ratfunc_normalize,
    ratfunc_substitute_reciprocal,
)
from .rationals import BigRational, format_rational, parse_rational
from .series import TruncatedSeries

__all__ = [
    "BigRational",
    "Polynomial",
    "RationalFunction",
    "TruncatedSeries",
    "format_rational",
    "parse_rational",
    "polynomial_gcd",
    "ratfunc_eval",
    "ratfunc_expand",
    "ratfunc_normalize",
    "ratfunc_substitute_reciprocal",
]
