"""Length enumeration, growth polynomials and rational growth series."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict

from ..algebra import Polynomial, RationalFunction, ratfunc_substitute_reciprocal
from ..exceptions import InvalidInputError, NotSphericalError
from ..log import get_logger
from .classify import classify_finite
from .system import CoxeterSystem, NormalForm

LOG = get_logger(__name__)


class LengthEnumeration(BaseModel):
    """Elements of W grouped by length, up to a bound."""

    model_config = ConfigDict(frozen=True)

    max_len: int
    layers: tuple[tuple[NormalForm, ...], ...]

    @property
    def counts(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def elements(self) -> list[NormalForm]:
        return [w for layer in self.layers for w in layer]


def _layers(system: CoxeterSystem, max_len: int, generators: Iterable[int]) -> tuple[tuple[NormalForm, ...], ...]:
    generators = sorted(generators)
    layers: list[tuple[NormalForm, ...]] = [((),)]
    for k in range(max_len):
        following = set()
        for w in layers[-1]:
            descents = system.right_descents(w)
            following.update(system.times_generator(w, s) for s in generators if s not in descents)
        layers.append(tuple(sorted(following)))
        LOG.debug(f"{system}: {len(following)} elements of length {k + 1}")
    return tuple(layers)


def enumerate_by_length(system: CoxeterSystem, max_len: int, generators: Optional[Iterable[int]] = None) -> LengthEnumeration:
    """Breadth-first enumeration of W (or W_J) by length.

    Layer k + 1 is obtained from layer k by right multiplication with generators
    that increase the length, deduplicated through normal forms.

    Parameters
    ----------
    system : CoxeterSystem
        The Coxeter system.
    max_len : int
        Largest length L to enumerate.
    generators : iterable of int, optional
        Restrict to the parabolic subgroup on these generators.

    Returns
    -------
    LengthEnumeration
        ``max_len + 1`` layers, empty once W is exhausted.
    """
    if max_len < 0:
        raise InvalidInputError("max_len must be non-negative")
    generators = system.generators if generators is None else generators
    return LengthEnumeration(max_len=max_len, layers=_layers(system, max_len, generators))


def growth_polynomial_finite(system: CoxeterSystem, subset: Optional[Iterable[int]] = None) -> Polynomial:
    """Growth polynomial of a finite W (or W_J) as the product of 1 + t + ... + t^m_i.

    Raises
    ------
    NotSphericalError
        If the (sub)system is infinite.
    """
    subset = frozenset(system.generators if subset is None else subset)
    descriptor = classify_finite(system, subset)
    if descriptor is None:
        raise NotSphericalError(f"{system} on {sorted(subset)}")
    polynomial = Polynomial.constant(1)
    for m in descriptor.exponents:
        polynomial = polynomial * Polynomial.geometric(m)
    return polynomial


def spherical_subsets(system: CoxeterSystem) -> list[frozenset[int]]:
    """All T generating a finite W_T, by size then lexicographically; always includes the empty set."""
    return list(_spherical_subsets(system))


@lru_cache(maxsize=256)
def _spherical_subsets(system: CoxeterSystem) -> tuple[frozenset[int], ...]:
    found = [frozenset()]
    level = {frozenset()}
    for size in range(1, system.rank + 1):
        following = set()
        for subset in combinations(system.generators, size):
            subset = frozenset(subset)
            if all(subset - {s} in level for s in subset) and classify_finite(system, subset) is not None:
                following.add(subset)
        if not following:
            break
        found.extend(sorted(following, key=sorted))
        level = following
    LOG.debug(f"{system}: {len(found)} spherical subsets")
    return tuple(found)


def _alternating_sum(system: CoxeterSystem) -> RationalFunction:
    total = RationalFunction(0)
    for subset in spherical_subsets(system):
        sign = -1 if len(subset) % 2 else 1
        total = total + RationalFunction(sign, growth_polynomial_finite(system, subset))
    return total


@lru_cache(maxsize=256)
def growth_series(system: CoxeterSystem) -> RationalFunction:
    """Rational growth series of W.

    Uses the alternating sum over spherical subsets,
    ``sum_T (-1)^|T| / W_T(t) = 1 / W(1/t)``, which for finite W reduces to the
    growth polynomial.

    Returns
    -------
    RationalFunction
        Canonical rational function whose expansion at 0 counts elements by length.
    """
    if classify_finite(system) is not None:
        return RationalFunction(growth_polynomial_finite(system))
    return ratfunc_substitute_reciprocal(_alternating_sum(system)).reciprocal()


def coxeter_euler_characteristic(system: CoxeterSystem) -> Fraction:
    """Rational Euler characteristic chi(W) = sum_T (-1)^|T| / |W_T| = 1 / growth(1).

    Vanishes when the growth series has a pole at 1 (e.g. infinite dihedral),
    and equals 1/|W| for finite W.
    """
    value = Fraction(0)
    for subset in spherical_subsets(system):
        descriptor = classify_finite(system, subset)
        value += Fraction((-1) ** len(subset), descriptor.order)
    return value


def parabolic_elements(system: CoxeterSystem, subset: Iterable[int]) -> list[NormalForm]:
    """All elements of the finite parabolic subgroup W_J, ordered by length.

    Raises
    ------
    NotSphericalError
        If J is not spherical.
    """
    subset = frozenset(subset)
    descriptor = classify_finite(system, subset)
    if descriptor is None:
        raise NotSphericalError(f"{system} on {sorted(subset)}")
    elements = enumerate_by_length(system, descriptor.positive_roots, subset).elements()
    assert len(elements) == descriptor.order, "parabolic enumeration incomplete"
    return elements
