from fractions import Fraction

import pytest

from eulerZeta.algebra import Polynomial, RationalFunction
from eulerZeta.coxeter import CoxeterSystem
from eulerZeta.exceptions import (
    InconsistentIndexTable,
    InvalidInputError,
    NotAffineError,
    ParabolicNotCompact,
    PoleError,
)
from eulerZeta.zeta import (
    DirichletSeries,
    double_coset_counts,
    parabolic_zeta_data,
    pro_p_data,
    reductive_quotient_order,
    tree_vertex_value,
    zeta_chamber,
    zeta_chamber_value,
    zeta_compact,
    zeta_iwahori_functional,
    zeta_parabolic,
    zeta_pro_p,
    zeta_tree_edge,
    zeta_tree_vertex,
)

t = Polynomial.t()


def test_dirichlet_series_basics():
    series = DirichletSeries({1: 1, 4: 0, 3: 2, 50: 7}, 10)
    assert series.as_dict() == {1: 1, 3: 2}
    assert series.support == [1, 3]
    assert series.coefficient(4) == 0
    assert series.to_lines() == ["1 1", "3 2"]
    with pytest.raises(InvalidInputError):
        series.coefficient(11)
    with pytest.raises(InvalidInputError):
        DirichletSeries({}, 0)
    with pytest.raises(InvalidInputError):
        DirichletSeries({0: 1}, 5)


def test_zeta_chamber_infinite_dihedral(affine_a1):
    result = zeta_chamber(affine_a1, 3, 4, bound=100)
    assert result.series.bound == 81
    assert result.series.as_dict() == {1: 1, 3: 2, 9: 2, 27: 2, 81: 2}
    assert result.rational == RationalFunction(1 + t, 1 - t)
    assert result.value == -2


def test_zeta_chamber_finite_and_affine(a2, affine_a2):
    finite = zeta_chamber(a2, 2, 4)
    assert finite.series.as_dict() == {1: 1, 2: 2, 4: 2, 8: 1}
    assert finite.value == 21
    affine = zeta_chamber(affine_a2, 3, 3)
    assert affine.series.as_dict() == {1: 1, 3: 3, 9: 6, 27: 9}
    assert affine.value == Fraction(13, 4)
    with pytest.raises(InvalidInputError):
        zeta_chamber(a2, 1, 3)


def test_chamber_value_at_integers(affine_a1):
    assert zeta_chamber_value(affine_a1, 2, -1) == -3
    assert zeta_chamber_value(affine_a1, 2, 1) == 3
    with pytest.raises(PoleError):
        zeta_chamber_value(affine_a1, 2, 0)


def test_double_coset_counts(affine_a2):
    assert double_coset_counts(affine_a2, 3, 1) == 1
    assert double_coset_counts(affine_a2, 3, 9) == 6
    assert double_coset_counts(affine_a2, 3, 10) == 0


def test_zeta_compact():
    result = zeta_compact(5)
    assert result.series.as_dict() == {1: 1}
    assert result.value == 1


def test_parabolic_zeta_is_tree_vertex_zeta(affine_a1):
    data = parabolic_zeta_data(affine_a1, 3, {0}, 6)
    assert data.indices == {frozenset(): 4, frozenset({0}): 1}
    assert data.classes[frozenset({0})] == ((),)
    result = zeta_parabolic(data)
    assert result.series.as_dict() == {1: 1, 12: 1, 108: 1}
    assert result.value == Fraction(-1, 2)
    assert result.series == zeta_tree_vertex(3, 729).series
    assert result.value == zeta_tree_vertex(3, 729).value


def test_parabolic_needs_spherical_subset(affine_a1):
    with pytest.raises(ParabolicNotCompact):
        parabolic_zeta_data(affine_a1, 3, {0, 1}, 4)


def test_parabolic_value_for_rank_two(affine_a2):
    result = zeta_parabolic(parabolic_zeta_data(affine_a2, 2, {0, 1}, 4))
    assert result.value == Fraction(7, 21)
    assert result.series.coefficient(1) == 1


def test_reductive_quotient_order(affine_a1):
    assert reductive_quotient_order(affine_a1, 3, {0}, 1) == 24
    assert reductive_quotient_order(affine_a1, 3, (), 1) == 2


def test_pro_p_radical(affine_a1):
    data = pro_p_data(affine_a1, 3, {0}, 4)
    assert data.semisimple_rank == 1
    assert data.radical_index == 24
    assert data.radical_indices == {frozenset({0}): 1, frozenset(): 3}
    result = zeta_pro_p(data)
    assert result.series.as_dict() == {1: 24, 9: 32, 81: 32}
    assert result.value == -12


def test_pro_p_rejects_bad_tables(affine_a1):
    with pytest.raises(InconsistentIndexTable):
        pro_p_data(affine_a1, 3, {0}, 4, reductive_orders={frozenset({0}): 25})
    with pytest.raises(InvalidInputError):
        pro_p_data(affine_a1, 3, {0}, 4, semisimple_rank=-1)


@pytest.mark.parametrize("fixture, rank, exponents", [("affine_a1", 1, (1,)), ("affine_a2", 2, (1, 2))])
def test_functional_equation(request, fixture, rank, exponents):
    record = zeta_iwahori_functional(request.getfixturevalue(fixture), q=3)
    assert record.semisimple_rank == rank
    assert record.exponents == exponents
    assert record.bott_holds and record.functional_holds
    assert all(record.numeric_checks.values())
    assert record.passed


@pytest.mark.parametrize("family, exponents", [("C", (1, 3)), ("G", (1, 5))])
def test_special_node_leaves_largest_finite_group(family, exponents):
    record = zeta_iwahori_functional(CoxeterSystem.affine(family, 2))
    assert record.special_node == 0
    assert record.exponents == exponents
    assert record.bott_holds


def test_product_formula_failure_is_reported():
    # (2, 3, 7) triangle group: every maximal parabolic is finite, but W is hyperbolic
    hyperbolic = CoxeterSystem.from_edges(3, {(0, 2): 3, (1, 2): 7})
    record = zeta_iwahori_functional(hyperbolic)
    assert record.special_node == 0
    assert record.exponents == (1, 6)
    assert not record.bott_holds
    assert not record.passed


def test_functional_equation_value(affine_a1):
    assert zeta_iwahori_functional(affine_a1, q=3).value == -2
    assert zeta_iwahori_functional(affine_a1).value is None


def test_functional_equation_needs_affine(a1, a2, triangle):
    for system in (a1, a2, triangle):
        with pytest.raises(NotAffineError):
            zeta_iwahori_functional(system)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_tree_edge_matches_chamber(affine_a1, d):
    edge = zeta_tree_edge(d, d**4)
    chamber = zeta_chamber(affine_a1, d, 4)
    assert edge.series == chamber.series
    assert edge.rational == chamber.rational
    assert edge.value == chamber.value == Fraction(1 + d, 1 - d)


def test_tree_edge_coefficients():
    assert zeta_tree_edge(3, 100).series.as_dict() == {1: 1, 3: 2, 9: 2, 27: 2, 81: 2}
    with pytest.raises(InvalidInputError):
        zeta_tree_edge(1, 10)


def test_tree_vertex():
    result = zeta_tree_vertex(2, 200)
    assert result.series.as_dict() == {1: 1, 6: 1, 24: 1, 96: 1}
    assert result.value == -1
    with pytest.raises(InvalidInputError):
        zeta_tree_vertex(1, 10)


@pytest.mark.parametrize("d", [2, 3, 7])
def test_tree_vertex_value(d):
    assert tree_vertex_value(d, -1) == Fraction(1, 1 - d)
    with pytest.raises(PoleError):
        tree_vertex_value(d, 0)
