"""Double coset zeta functions: truncated Dirichlet series and closed forms in t = q^-s.

Values at s = -1 always come from closed forms; the Dirichlet series only
serve coefficient level checks.
"""

from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional

from pydantic import BaseModel, ConfigDict

from .algebra import Polynomial, RationalFunction, ratfunc_eval, ratfunc_substitute_reciprocal
from .coxeter import (
    CoxeterSystem,
    NormalForm,
    classify_finite,
    enumerate_by_length,
    growth_polynomial_finite,
    growth_series,
    p_qj_classes,
)
from .exceptions import (
    InconsistentIndexTable,
    InvalidInputError,
    NotAffineError,
    ParabolicNotCompact,
    PoleError,
)
from .log import get_logger

LOG = get_logger(__name__)


class DirichletSeries:
    """Truncated map n -> |R(n)|, complete for every n <= bound."""

    __slots__ = ("_counts", "_bound")

    def __init__(self, counts: dict[int, int], bound: int):
        if bound < 1:
            raise InvalidInputError("truncation bound must be >= 1")
        for n, c in counts.items():
            if n < 1 or c < 0:
                raise InvalidInputError(f"invalid coefficient |R({n})| = {c}")
        self._counts = {n: c for n, c in sorted(counts.items()) if c and n <= bound}
        self._bound = bound

    @classmethod
    def from_power_counts(cls, q: int, counts: list[int], bound: int) -> "DirichletSeries":
        """Series with |R(q^m)| = counts[m]."""
        return cls({q**m: c for m, c in enumerate(counts) if q**m <= bound}, bound)

    @property
    def bound(self) -> int:
        return self._bound

    @property
    def support(self) -> list[int]:
        return list(self._counts)

    def items(self):
        return self._counts.items()

    def coefficient(self, n: int) -> int:
        if not 1 <= n <= self._bound:
            raise InvalidInputError(f"|R({n})| outside the truncation bound {self._bound}")
        return self._counts.get(n, 0)

    def to_lines(self) -> list[str]:
        return [f"{n} {c}" for n, c in self._counts.items()]

    def as_dict(self) -> dict[int, int]:
        return dict(self._counts)

    def __eq__(self, other):
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        return self._bound == other._bound and self._counts == other._counts

    def __repr__(self):
        return f"DirichletSeries({self._counts}, bound={self._bound})"


class ZetaResult(NamedTuple):
    """Truncated series with its closed form and value at s = -1 when available."""

    series: DirichletSeries
    rational: Optional[RationalFunction]
    value: Optional[Fraction]


def _power_of(n: int, q: int) -> Optional[int]:
    m = 0
    while n % q == 0 and n > 1:
        n //= q
        m += 1
    return m if n == 1 else None


def zeta_chamber(system: CoxeterSystem, q: int, max_len: int, bound: Optional[int] = None) -> ZetaResult:
    """Chamber level zeta function: |R(q^m)| counts the elements of length m.

    Parameters
    ----------
    system : CoxeterSystem
        Type of the building.
    q : int
        Thickness parameter, at least 2.
    max_len : int
        Enumeration bound L; the series is complete up to q^L.
    bound : int, optional
        Smaller truncation bound N for the series.

    Returns
    -------
    ZetaResult
        Series, rational form growth(t) in t = q^-s, and value growth(q) at s = -1.
    """
    if q < 2:
        raise InvalidInputError(f"q must be >= 2, got {q}")
    bound = min(bound or q**max_len, q**max_len)
    counts = enumerate_by_length(system, max_len).counts
    rational = growth_series(system)
    try:
        value = ratfunc_eval(rational, q)
    except PoleError:
        value = None
    return ZetaResult(DirichletSeries.from_power_counts(q, counts, bound), rational, value)


def zeta_chamber_value(system: CoxeterSystem, q: int, s: int) -> Fraction:
    """Exact value of the chamber zeta function at the integer s, through t = q^-s."""
    t = Fraction(1, q**s) if s >= 0 else Fraction(q ** (-s))
    return ratfunc_eval(growth_series(system), t)


def double_coset_counts(system: CoxeterSystem, q: int, n: int) -> int:
    """|R(n)| for the chamber stabilizer: elements w with q^l(w) = n."""
    m = _power_of(n, q)
    if m is None:
        return 0
    return enumerate_by_length(system, m).counts[m]


def zeta_compact(bound: int = 1) -> ZetaResult:
    """A compact group with O = G has a single double coset of measure 1."""
    return ZetaResult(DirichletSeries({1: 1}, bound), RationalFunction(1), Fraction(1))


class ParabolicZetaData(BaseModel):
    """Double coset data of a parahoric P_J, indexed by Q(x) for x in ^J W^J."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    system: CoxeterSystem
    q: int
    J: frozenset[int]
    max_len: int
    classes: dict[frozenset[int], tuple[NormalForm, ...]]
    indices: dict[frozenset[int], int]

    @property
    def bound(self) -> int:
        return self.q**self.max_len


def _subsets(J: frozenset[int]):
    for size in range(len(J) + 1):
        for subset in combinations(sorted(J), size):
            yield frozenset(subset)


def parabolic_zeta_data(system: CoxeterSystem, q: int, J, max_len: int) -> ParabolicZetaData:
    """Enumerate ^J W^J and tabulate |P_J : P_Q| = W_J(q) / W_Q(q).

    Raises
    ------
    ParabolicNotCompact
        If J is not spherical.
    InconsistentIndexTable
        If an index is not a positive integer.
    """
    J = frozenset(J)
    if classify_finite(system, J) is None:
        raise ParabolicNotCompact(J)
    parabolic = growth_polynomial_finite(system, J)
    indices = {}
    for Q in _subsets(J):
        quotient, remainder = divmod(parabolic, growth_polynomial_finite(system, Q))
        index = quotient(q)
        if not remainder.is_zero() or index.denominator != 1 or index < 1:
            raise InconsistentIndexTable(f"|P_J : P_Q| for Q = {sorted(Q)} is not a positive integer")
        indices[Q] = int(index)
    classes = {Q: tuple(xs) for Q, xs in p_qj_classes(system, J, max_len).items()}
    LOG.debug(f"{system}, J={sorted(J)}: {sum(len(v) for v in classes.values())} double coset representatives")
    return ParabolicZetaData(system=system, q=q, J=J, max_len=max_len, classes=classes, indices=indices)


def _parabolic_value(system: CoxeterSystem, q: int, J: frozenset[int]) -> Fraction:
    return ratfunc_eval(growth_series(system), q) / growth_polynomial_finite(system, J)(q)


def zeta_parabolic(data: ParabolicZetaData, bound: Optional[int] = None) -> ZetaResult:
    """Parahoric zeta function: terms |P_J : P_Q(x)| q^l(x), value growth(q) / W_J(q) at s = -1."""
    bound = min(bound or data.bound, data.bound)
    counts: dict[int, int] = {}
    for Q, elements in data.classes.items():
        for x in elements:
            n = data.indices[Q] * data.q ** len(x)
            counts[n] = counts.get(n, 0) + 1
    value = _parabolic_value(data.system, data.q, data.J)
    return ZetaResult(DirichletSeries(counts, bound), None, value)


class ProPRadicalData(BaseModel):
    """Parahoric data plus reductive quotient orders |P_Q : P1_Q| for every Q ⊆ J."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    parabolic: ParabolicZetaData
    semisimple_rank: int
    orders: dict[frozenset[int], int]
    radical_indices: dict[frozenset[int], int]

    @property
    def radical_index(self) -> int:
        """|P_J : P1_J|."""
        return self.orders[self.parabolic.J]


def reductive_quotient_order(system: CoxeterSystem, q: int, Q, semisimple_rank: int) -> int:
    """|P_Q : P1_Q| = q^N_Q (q - 1)^n W_Q(q) with N_Q the number of positive roots of W_Q."""
    polynomial = growth_polynomial_finite(system, Q)
    return q ** (polynomial.degree or 0) * (q - 1) ** semisimple_rank * int(polynomial(q))


def pro_p_data(
    system: CoxeterSystem,
    q: int,
    J,
    max_len: int,
    semisimple_rank: Optional[int] = None,
    reductive_orders: Optional[dict[frozenset[int], int]] = None,
) -> ProPRadicalData:
    """Double coset data of the pro-p radical P1_J.

    Parameters
    ----------
    system, q, J, max_len
        As for :func:`parabolic_zeta_data`.
    semisimple_rank : int, optional
        Torus rank n of the residue quotients; defaults to rank - 1.
    reductive_orders : dict, optional
        Overrides for |P_Q : P1_Q|.

    Raises
    ------
    InconsistentIndexTable
        If some |P1_Q : P1_J| is not a positive power of q.
    """
    parabolic = parabolic_zeta_data(system, q, J, max_len)
    n = system.rank - 1 if semisimple_rank is None else semisimple_rank
    if n < 0:
        raise InvalidInputError("semisimple rank must be non-negative")
    orders = {Q: reductive_quotient_order(system, q, Q, n) for Q in parabolic.indices}
    orders.update({frozenset(k): v for k, v in (reductive_orders or {}).items()})
    top = orders[parabolic.J]
    radical_indices = {}
    for Q, index in parabolic.indices.items():
        if orders[Q] < 1:
            raise InconsistentIndexTable(f"|P_Q : P1_Q| must be positive for Q = {sorted(Q)}")
        ratio = Fraction(top, index * orders[Q])
        if ratio.denominator != 1 or _power_of(ratio.numerator, q) is None:
            raise InconsistentIndexTable(f"|P1_Q : P1_J| = {ratio} is not a power of {q} for Q = {sorted(Q)}")
        radical_indices[Q] = ratio.numerator
    return ProPRadicalData(parabolic=parabolic, semisimple_rank=n, orders=orders, radical_indices=radical_indices)


def zeta_pro_p(data: ProPRadicalData, bound: Optional[int] = None) -> ZetaResult:
    """Pro-p radical zeta function and its value |P_J : P1_J| times the parahoric value."""
    parabolic = data.parabolic
    bound = min(bound or parabolic.bound, parabolic.bound)
    counts: dict[int, int] = {}
    for Q, elements in parabolic.classes.items():
        multiplicity = parabolic.indices[Q] * parabolic.indices[Q] * data.orders[Q]
        for x in elements:
            n = data.radical_indices[Q] * parabolic.q ** len(x)
            counts[n] = counts.get(n, 0) + multiplicity
    value = data.radical_index * _parabolic_value(parabolic.system, parabolic.q, parabolic.J)
    return ZetaResult(DirichletSeries(counts, bound), None, value)


class FunctionalEquationRecord(BaseModel):
    """Iwahori level zeta function of an affine system and its checks."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    special_node: int
    semisimple_rank: int
    exponents: tuple[int, ...]
    zeta: RationalFunction
    bott_holds: bool
    functional_holds: bool
    numeric_checks: dict[str, bool]
    value: Optional[Fraction] = None

    @property
    def passed(self) -> bool:
        return self.bott_holds and self.functional_holds and all(self.numeric_checks.values())


def _bott_product(system: CoxeterSystem, subset: frozenset[int], exponents) -> RationalFunction:
    result = RationalFunction(growth_polynomial_finite(system, subset))
    t = Polynomial.t()
    for m in exponents:
        result = result / (1 - t**m)
    return result


def zeta_iwahori_functional(
    system: CoxeterSystem, q: Optional[int] = None, points: tuple = (Fraction(1, 2), Fraction(1, 3), Fraction(2))
) -> FunctionalEquationRecord:
    """Build W(t) prod 1/(1 - t^m_i) from the spherical part and check it against the growth series.

    The spherical part is cut out by a special node: among the nodes whose removal
    leaves a finite system of rank n, the one leaving the largest finite group.
    Then f(1/t) = (-1)^n f(t) is checked as an identity of rational functions and
    at ``points``.

    Raises
    ------
    NotAffineError
        If the system is finite, of rank < 2, or no node leaves a finite system of rank n.
    """
    if system.rank < 2:
        raise NotAffineError("an affine system needs rank >= 2 (semisimple rank n >= 1)")
    if classify_finite(system) is not None:
        raise NotAffineError(f"{system} is finite")
    n = system.rank - 1
    candidates = []
    for node in system.generators:
        subset = frozenset(system.generators) - {node}
        descriptor = classify_finite(system, subset)
        if descriptor is not None and len(descriptor.exponents) == n:
            candidates.append((node, subset, descriptor))
    if not candidates:
        raise NotAffineError(f"{system} has no node leaving a finite system of rank {n}")
    # ties go to the lowest index
    node, subset, descriptor = max(candidates, key=lambda c: (c[2].order, -c[0]))
    zeta = _bott_product(system, subset, descriptor.exponents)
    bott = zeta == growth_series(system)
    if not bott:
        LOG.warning(f"{system}: growth series differs from the product over special node {node}")
    sign = (-1) ** n
    functional = ratfunc_substitute_reciprocal(zeta) == sign * zeta
    numeric = {}
    for point in points:
        point = Fraction(point)
        try:
            numeric[str(point)] = ratfunc_eval(zeta, 1 / point) == sign * ratfunc_eval(zeta, point)
        except PoleError:
            numeric[str(point)] = False
    value = ratfunc_eval(zeta, q) if q is not None else None
    return FunctionalEquationRecord(
        special_node=node,
        semisimple_rank=n,
        exponents=descriptor.exponents,
        zeta=zeta,
        bott_holds=bott,
        functional_holds=functional,
        numeric_checks=numeric,
        value=value,
    )


def zeta_tree_vertex(d: int, bound: int) -> ZetaResult:
    """Vertex stabilizer of a (d+1)-regular tree: |R((d+1) d^(2k-1))| = 1, value 1/(1-d)."""
    if d < 2:
        raise InvalidInputError(f"d must be >= 2, got {d}")
    counts, k = {1: 1}, 1
    while (n := (d + 1) * d ** (2 * k - 1)) <= bound:
        counts[n] = 1
        k += 1
    return ZetaResult(DirichletSeries(counts, bound), None, Fraction(1, 1 - d))


def tree_vertex_value(d: int, s: int) -> Fraction:
    """Exact 1 + (1+d)^-s / (d^s - d^-s) at an integer s != 0."""
    if s == 0:
        raise PoleError(Fraction(0), 1)
    power = Fraction(d) ** s
    return 1 + Fraction(1 + d) ** (-s) / (power - 1 / power)


def zeta_tree_edge(d: int, bound: int) -> ZetaResult:
    """Edge stabilizer of a (d+1)-regular tree: |R(d^k)| = 2, closed form (1+t)/(1-t)."""
    if d < 2:
        raise InvalidInputError(f"d must be >= 2, got {d}")
    counts, n = {1: 1}, d
    while n <= bound:
        counts[n] = 2
        n *= d
    t = Polynomial.t()
    return ZetaResult(DirichletSeries(counts, bound), RationalFunction(1 + t, 1 - t), Fraction(1 + d, 1 - d))
