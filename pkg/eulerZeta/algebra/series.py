"""Power series truncated at a fixed order."""

from fractions import Fraction

from .rationals import as_rational


class TruncatedSeries:
    """Coefficients of t^0 .. t^order; arithmetic keeps the smaller order."""

    __slots__ = ("_coefficients", "_order")

    def __init__(self, coefficients, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        coefficients = [as_rational(c) for c in coefficients][: order + 1]
        coefficients += [Fraction(0)] * (order + 1 - len(coefficients))
        self._coefficients = tuple(coefficients)
        self._order = order

    @classmethod
    def from_counts(cls, counts) -> "TruncatedSeries":
        """Series whose k-th coefficient is ``counts[k]``, order len(counts) - 1."""
        return cls(counts, len(counts) - 1)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coefficients

    def __getitem__(self, k: int) -> Fraction:
        return self._coefficients[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self._coefficients, min(order, self._order))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self._order, other._order)
        return TruncatedSeries((self[k] + other[k] for k in range(order + 1)), order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self._order, other._order)
        return TruncatedSeries((self[k] - other[k] for k in range(order + 1)), order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((c * other for c in self._coefficients), self._order)
        order = min(self._order, other._order)
        product = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            if self[i] == 0:
                continue
            for j in range(order + 1 - i):
                product[i + j] += self[i] * other[j]
        return TruncatedSeries(product, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coefficients == other._coefficients

    def __hash__(self):
        return hash((self._order, self._coefficients))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self._coefficients]}, order={self._order})"

    def to_text(self) -> str:
        return " ".join(str(c) for c in self._coefficients)
