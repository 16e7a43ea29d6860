"""Iwahori-Hecke algebras of chamber-transitive building actions.

The basis T_w is indexed by normal forms and multiplies by
T_w T_s = T_ws if l(ws) > l(w), else q T_ws + (q - 1) T_w.
Coefficients are exact rationals at numeric q, or rational functions when q is
the formal parameter :data:`FORMAL_Q`.
"""

from fractions import Fraction
from typing import Iterable, Union

from .algebra import RationalFunction
from .coxeter import CoxeterSystem, NormalForm, parabolic_elements
from .exceptions import InvalidInputError, MixedSystemsError, NotIdempotentError
from .log import get_logger
from .measures import HaarMeasure

LOG = get_logger(__name__)

FORMAL_Q = RationalFunction.variable()

Coefficient = Union[Fraction, RationalFunction]


class HeckeAlgebra:
    """The algebra H(W, S, q)."""

    def __init__(self, system: CoxeterSystem, q):
        if isinstance(q, RationalFunction):
            self.q = q
        else:
            q = Fraction(q)
            if q < 2:
                raise InvalidInputError(f"q must be >= 2 or formal, got {q}")
            self.q = q
        self.system = system

    @property
    def formal(self) -> bool:
        return isinstance(self.q, RationalFunction)

    def __eq__(self, other):
        if not isinstance(other, HeckeAlgebra):
            return NotImplemented
        return self.system.matrix == other.system.matrix and self.q == other.q

    def __hash__(self):
        return hash((self.system.matrix, self.q))

    def __repr__(self):
        return f"HeckeAlgebra({self.system}, q={self.q})"

    def element(self, terms: dict[Iterable[int], Coefficient]) -> "HeckeElement":
        """Element from arbitrary words; words are normalized and coefficients collected."""
        collected: dict[NormalForm, Coefficient] = {}
        for word, c in terms.items():
            w = self.system.normal_form(word)
            collected[w] = collected.get(w, 0) + c
        return HeckeElement(self, collected)

    def basis(self, word: Iterable[int] = ()) -> "HeckeElement":
        return self.element({tuple(word): 1})

    def one(self) -> "HeckeElement":
        return HeckeElement(self, {(): 1})

    def zero(self) -> "HeckeElement":
        return HeckeElement(self, {})

    def generator(self, s: int) -> "HeckeElement":
        return self.basis((s,))


class HeckeElement:
    """Finite formal sum of basis elements T_w; zero coefficients are never stored."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: HeckeAlgebra, terms: dict[NormalForm, Coefficient]):
        self.algebra = algebra
        self._terms = {w: _exact(c) for w, c in sorted(terms.items(), key=_shortlex) if c != 0}

    @property
    def terms(self) -> dict[NormalForm, Coefficient]:
        return dict(self._terms)

    def coefficient(self, w: NormalForm) -> Coefficient:
        return self._terms.get(tuple(w), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "HeckeElement"):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if other.algebra != self.algebra:
            raise MixedSystemsError()
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, 0) + c
        return HeckeElement(self.algebra, terms)

    def __neg__(self):
        return HeckeElement(self.algebra, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return HeckeElement(self.algebra, {w: c * other for w, c in self._terms.items()})
        return hecke_mult(self, other)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction, RationalFunction)):
            return self * scalar
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self):
        return hash((self.algebra, tuple(self._terms.items())))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        system = self.algebra.system
        return " + ".join(f"({c})*T[{system.word_text(w)}]" for w, c in self._terms.items())

    __str__ = to_text

    def __repr__(self):
        return f"HeckeElement({self.to_text()})"


def _shortlex(item):
    return len(item[0]), item[0]


def _exact(c):
    return Fraction(c) if isinstance(c, int) else c


def _times_generator(element: HeckeElement, s: int) -> HeckeElement:
    algebra = element.algebra
    system, q = algebra.system, algebra.q
    terms: dict[NormalForm, Coefficient] = {}
    for w, c in element.terms.items():
        ws = system.times_generator(w, s)
        if system.is_right_descent(w, s):
            terms[ws] = terms.get(ws, 0) + q * c
            terms[w] = terms.get(w, 0) + (q - 1) * c
        else:
            terms[ws] = terms.get(ws, 0) + c
    return HeckeElement(algebra, terms)


def hecke_mult(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the Hecke algebra, bilinear in the basis rule.

    Raises
    ------
    MixedSystemsError
        If the operands belong to different algebras.
    """
    b = a._check(b)
    result = a.algebra.zero()
    for v, d in b.terms.items():
        partial = a
        for s in v:
            partial = _times_generator(partial, s)
        result = result + partial * d
    return result


def structure_constants(algebra: HeckeAlgebra, u: Iterable[int], v: Iterable[int]) -> dict[NormalForm, Coefficient]:
    """Coefficients a_{u,v;r} of T_u T_v = sum_r a_{u,v;r} T_r."""
    return hecke_mult(algebra.basis(u), algebra.basis(v)).terms


def hecke_eps(a: HeckeElement) -> Coefficient:
    """The character T_w -> q^l(w)."""
    q = a.algebra.q
    total = Fraction(0)
    for w, c in a.terms.items():
        total = total + c * q ** len(w)
    return total


def hecke_trace(a: HeckeElement) -> Coefficient:
    """Coefficient of T_e."""
    return a.coefficient(())


def hecke_star(a: HeckeElement) -> HeckeElement:
    """Involution T_w -> T_{w^-1}."""
    system = a.algebra.system
    return HeckeElement(a.algebra, {system.inverse(w): c for w, c in a.terms.items()})


def standard_idempotent(algebra: HeckeAlgebra, J: Iterable[int]) -> HeckeElement:
    """e_J = (1 / W_J(q)) sum over W_J of T_w.

    Raises
    ------
    NotSphericalError
        If J is not spherical.
    """
    elements = parabolic_elements(algebra.system, J)
    poincare = 0
    for w in elements:
        poincare = poincare + algebra.q ** len(w)
    weight = 1 / poincare
    return HeckeElement(algebra, {w: weight for w in elements})


class HeckeMatrix:
    """Square matrix with entries in one Hecke algebra."""

    def __init__(self, rows: Iterable[Iterable[HeckeElement]]):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise InvalidInputError("a Hecke matrix must be square with dimension >= 1")
        algebra = rows[0][0].algebra
        if any(entry.algebra != algebra for row in rows for entry in row):
            raise MixedSystemsError()
        self.rows = rows
        self.algebra = algebra

    @classmethod
    def identity(cls, algebra: HeckeAlgebra, n: int) -> "HeckeMatrix":
        return cls([[algebra.one() if i == j else algebra.zero() for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, *entries: HeckeElement) -> "HeckeMatrix":
        zero = entries[0].algebra.zero()
        return cls([[entries[i] if i == j else zero for j in range(len(entries))] for i in range(len(entries))])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> HeckeElement:
        i, j = index
        return self.rows[i][j]

    def __mul__(self, other: "HeckeMatrix") -> "HeckeMatrix":
        if other.size != self.size:
            raise InvalidInputError("matrix dimensions differ")
        n = self.size
        product = []
        for i in range(n):
            row = []
            for j in range(n):
                entry = self.algebra.zero()
                for k in range(n):
                    entry = entry + self[i, k] * other[k, j]
                row.append(entry)
            product.append(row)
        return HeckeMatrix(product)

    def __eq__(self, other):
        if not isinstance(other, HeckeMatrix):
            return NotImplemented
        return self.rows == other.rows

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self.rows for entry in row)

    def is_idempotent(self) -> bool:
        return self * self == self

    def trace(self) -> Coefficient:
        """Sum of the traces of the diagonal entries."""
        total = Fraction(0)
        for i in range(self.size):
            total = total + hecke_trace(self[i, i])
        return total


def hattori_stallings_rank(E: HeckeMatrix, base: str = "B") -> HaarMeasure:  # noqa: N803
    """Rank of the projective module represented by the idempotent E: trace(E) * mu_base.

    Raises
    ------
    NotIdempotentError
        If E * E != E.
    InvalidInputError
        If q is formal, so the trace is not a rational number.
    """
    if E.algebra.formal:
        raise InvalidInputError("Hattori-Stallings rank needs a numeric q")
    if not E.is_idempotent():
        raise NotIdempotentError()
    rank = HaarMeasure(E.trace(), base)
    LOG.debug(f"Hattori-Stallings rank {rank}")
    return rank
