"""Minimal length double coset representatives and parabolic decompositions."""

from collections import defaultdict
from typing import Iterable

from pydantic import BaseModel, ConfigDict

from ..algebra import TruncatedSeries
from ..exceptions import NotMinimalRepresentative
from .growth import enumerate_by_length, growth_polynomial_finite
from .system import CoxeterSystem, NormalForm

Subset = frozenset[int]


def _subset(values: Iterable[int]) -> Subset:
    return frozenset(values)


def is_minimal(system: CoxeterSystem, x: NormalForm, left: Iterable[int], right: Iterable[int]) -> bool:
    """Whether x has no left descent in ``left`` and no right descent in ``right``."""
    return not (system.left_descents(x) & _subset(left)) and not (system.right_descents(x) & _subset(right))


def min_double_coset_reps(system: CoxeterSystem, J: Iterable[int], K: Iterable[int], max_len: int) -> list[NormalForm]:
    """Minimal representatives of (W_J, W_K)-double cosets of length at most ``max_len``.

    Parameters
    ----------
    system : CoxeterSystem
        The Coxeter system.
    J, K : iterable of int
        Generator subsets.
    max_len : int
        Length bound L.

    Returns
    -------
    list[NormalForm]
        Representatives in ShortLex order; one per double coset meeting the bound.
    """
    J, K = _subset(J), _subset(K)
    enumeration = enumerate_by_length(system, max_len)
    return [x for x in enumeration.elements() if is_minimal(system, x, J, K)]


def minimal_left_coset_reps(system: CoxeterSystem, J: Iterable[int], max_len: int) -> list[NormalForm]:
    """The set ^J W truncated at ``max_len`` (elements without left descents in J)."""
    return min_double_coset_reps(system, J, (), max_len)


def conjugate(system: CoxeterSystem, x: NormalForm, w: Iterable[int]) -> NormalForm:
    """Normal form of x w x^-1."""
    return system.multiply(x, w, system.inverse(x))


def cross_section_Q(system: CoxeterSystem, J: Iterable[int], x: NormalForm) -> Subset:  # noqa: N802
    """Q(x) = J ∩ x^-1 J x for x in ^J W^J.

    Raises
    ------
    NotMinimalRepresentative
        If x has a left or right descent in J.
    """
    J = _subset(J)
    if not is_minimal(system, x, J, J):
        raise NotMinimalRepresentative(x)
    # r belongs to Q(x) iff x r x^-1 is a generator in J
    q = set()
    for r in J:
        image = conjugate(system, x, (r,))
        if len(image) == 1 and image[0] in J:
            q.add(r)
    return frozenset(q)


class ParabolicDecomposition(BaseModel):
    """w = y x z with y in W_J, x in ^J W^K, z in ^Q W_K and lengths adding up."""

    model_config = ConfigDict(frozen=True)

    y: NormalForm
    x: NormalForm
    z: NormalForm


def parabolic_decompose(system: CoxeterSystem, J: Iterable[int], K: Iterable[int], w: Iterable[int]) -> ParabolicDecomposition:
    """Split w into its W_J part, double coset representative and W_K part.

    Left descents in J are stripped first, then right descents in K; the
    stripped element is minimal in its double coset.
    """
    J, K = _subset(J), _subset(K)
    current = system.normal_form(w)
    y: NormalForm = ()
    while stripped := sorted(system.left_descents(current) & J):
        s = stripped[0]
        current = system.normal_form((s,) + current)
        y = system.times_generator(y, s)
    z_letters: list[int] = []
    while stripped := sorted(system.right_descents(current) & K):
        s = stripped[0]
        current = system.times_generator(current, s)
        z_letters.append(s)
    z = system.normal_form(reversed(z_letters))
    return ParabolicDecomposition(y=y, x=current, z=z)


def p_qj_classes(system: CoxeterSystem, J: Iterable[int], max_len: int) -> dict[Subset, list[NormalForm]]:
    """Partition of the truncated ^J W^J by the value of Q(x)."""
    J = _subset(J)
    classes: dict[Subset, list[NormalForm]] = defaultdict(list)
    for x in min_double_coset_reps(system, J, J, max_len):
        classes[cross_section_Q(system, J, x)].append(x)
    return dict(classes)


def p_qj_series(system: CoxeterSystem, J: Iterable[int], max_len: int) -> dict[Subset, TruncatedSeries]:
    """Truncated growth series of p_{Q,J} for every Q ⊆ J that occurs."""
    series = {}
    for q, elements in p_qj_classes(system, J, max_len).items():
        counts = [0] * (max_len + 1)
        for x in elements:
            counts[len(x)] += 1
        series[q] = TruncatedSeries(counts, max_len)
    return series


def left_coset_factorization(system: CoxeterSystem, J: Iterable[int], max_len: int) -> TruncatedSeries:
    """W_J(t) * (growth of ^J W), truncated at ``max_len``; equals the growth of W."""
    J = _subset(J)
    counts = [0] * (max_len + 1)
    for x in minimal_left_coset_reps(system, J, max_len):
        counts[len(x)] += 1
    parabolic = growth_polynomial_finite(system, J)
    return TruncatedSeries(parabolic.coefficients, max_len) * TruncatedSeries(counts, max_len)


def parabolic_factorization(system: CoxeterSystem, J: Iterable[int], max_len: int) -> TruncatedSeries:
    """W_J(t) * sum_Q (W_J(t) / W_Q(t)) * p_{Q,J}(t), truncated at ``max_len``; equals the growth of W."""
    J = _subset(J)
    parabolic = growth_polynomial_finite(system, J)
    total = TruncatedSeries((), max_len)
    for q, series in p_qj_series(system, J, max_len).items():
        quotient, remainder = divmod(parabolic, growth_polynomial_finite(system, q))
        assert remainder.is_zero(), "growth of a parabolic subgroup divides the growth of W_J"
        total = total + TruncatedSeries(quotient.coefficients, max_len) * series
    return TruncatedSeries(parabolic.coefficients, max_len) * total
