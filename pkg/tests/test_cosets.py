import pytest

from eulerZeta.algebra import TruncatedSeries
from eulerZeta.coxeter import (
    conjugate,
    cross_section_Q,
    enumerate_by_length,
    is_spherical,
    left_coset_factorization,
    min_double_coset_reps,
    minimal_left_coset_reps,
    p_qj_classes,
    p_qj_series,
    parabolic_decompose,
    parabolic_elements,
    parabolic_factorization,
)
from eulerZeta.exceptions import NotMinimalRepresentative


def test_double_coset_representatives(a2):
    assert min_double_coset_reps(a2, {0}, {0}, 3) == [(), (1,)]
    assert min_double_coset_reps(a2, {0, 1}, {0, 1}, 3) == [()]


def test_left_coset_representatives(a2, affine_a1):
    assert sorted(minimal_left_coset_reps(a2, {0}, 3)) == [(), (1,), (1, 0)]
    assert [len(x) for x in minimal_left_coset_reps(affine_a1, {0}, 4)] == [0, 1, 2, 3, 4]


def test_cross_section(a2, affine_a2):
    assert cross_section_Q(a2, {0}, ()) == frozenset({0})
    assert cross_section_Q(a2, {0}, (1,)) == frozenset()
    assert cross_section_Q(affine_a2, {0, 1}, ()) == frozenset({0, 1})
    with pytest.raises(NotMinimalRepresentative):
        cross_section_Q(a2, {0}, (0,))


def test_conjugation_by_representatives_preserves_length(affine_a2):
    J = {0, 1}
    for x in min_double_coset_reps(affine_a2, J, J, 6):
        Q = cross_section_Q(affine_a2, J, x)
        assert Q <= J
        for r in Q:
            image = conjugate(affine_a2, x, (r,))
            assert len(image) == 1 and image[0] in J
        if Q:
            assert is_spherical(affine_a2, Q)
            for w in parabolic_elements(affine_a2, Q):
                assert len(conjugate(affine_a2, x, w)) == len(w)


def test_parabolic_decompose(a3, affine_a2):
    for system, J, K in ((a3, {0}, {2}), (affine_a2, {0, 1}, {1, 2})):
        for w in enumerate_by_length(system, 5).elements():
            parts = parabolic_decompose(system, J, K, w)
            assert system.multiply(parts.y, parts.x, parts.z) == w
            assert len(parts.y) + len(parts.x) + len(parts.z) == len(w)
            assert not system.left_descents(parts.x) & J
            assert not system.right_descents(parts.x) & K
            assert set(parts.y) <= J and set(parts.z) <= K


def test_p_qj_classes_infinite_dihedral(affine_a1):
    classes = p_qj_classes(affine_a1, {0}, 6)
    assert classes[frozenset({0})] == [()]
    assert classes[frozenset()] == [(1,), (1, 0, 1), (1, 0, 1, 0, 1)]
    series = p_qj_series(affine_a1, {0}, 6)
    assert series[frozenset()] == TruncatedSeries((0, 1, 0, 1, 0, 1, 0), 6)


@pytest.mark.parametrize("J", [{0}, {0, 1}, {1, 2}])
def test_left_coset_factorization(a3, affine_a2, J):
    for system, L in ((a3, 6), (affine_a2, 7)):
        expected = TruncatedSeries.from_counts(enumerate_by_length(system, L).counts)
        assert left_coset_factorization(system, J, L) == expected


@pytest.mark.parametrize("J", [{0}, {2}, {0, 1}, {0, 2}])
def test_parabolic_factorization(affine_a2, J):
    expected = TruncatedSeries.from_counts(enumerate_by_length(affine_a2, 7).counts)
    assert parabolic_factorization(affine_a2, J, 7) == expected


def test_parabolic_factorization_finite(a3):
    expected = TruncatedSeries.from_counts(enumerate_by_length(a3, 6).counts)
    assert parabolic_factorization(a3, {0, 2}, 6) == expected
