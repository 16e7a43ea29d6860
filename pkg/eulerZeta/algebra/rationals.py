"""Exact rational scalars and their textual form."""

from fractions import Fraction

from ..exceptions import InvalidInputError

BigRational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or "p") into an exact rational.

    Parameters
    ----------
    text : str
        Integer or fraction literal.

    Returns
    -------
    Fraction
        The parsed value.

    Raises
    ------
    InvalidInputError
        If the text is not a rational literal.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"not a rational number: {text!r}") from e


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")
