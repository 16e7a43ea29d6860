from fractions import Fraction

import pytest

from eulerZeta.exceptions import InvalidInputError, MixedSystemsError, NotIdempotentError, NotSphericalError
from eulerZeta.hecke import (
    FORMAL_Q,
    HeckeAlgebra,
    HeckeMatrix,
    hattori_stallings_rank,
    hecke_eps,
    hecke_mult,
    hecke_star,
    hecke_trace,
    standard_idempotent,
    structure_constants,
)
from eulerZeta.measures import HaarMeasure
from eulerZeta.verify import convolution_oracle


def random_element(algebra, rng, max_len=4):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        word = tuple(rng.randrange(algebra.system.rank) for _ in range(rng.randint(0, max_len)))
        terms[word] = terms.get(word, 0) + Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return algebra.element(terms)


def test_quadratic_relation(a1):
    algebra = HeckeAlgebra(a1, 3)
    assert structure_constants(algebra, (0,), (0,)) == {(): 3, (0,): 2}
    formal = HeckeAlgebra(a1, FORMAL_Q)
    square = formal.generator(0) * formal.generator(0)
    assert square.coefficient(()) == FORMAL_Q
    assert square.coefficient((0,)) == FORMAL_Q - 1


def test_length_additive_products(a2):
    algebra = HeckeAlgebra(a2, 2)
    assert hecke_mult(algebra.basis((0,)), algebra.basis((1,))) == algebra.basis((0, 1))
    assert algebra.basis((0, 1)) * algebra.basis((0,)) == algebra.basis((0, 1, 0))
    assert algebra.basis((1, 0, 1)) == algebra.basis((0, 1, 0))


def test_element_collects_terms(a2):
    algebra = HeckeAlgebra(a2, 2)
    element = algebra.element({(0, 1, 0): 1, (1, 0, 1): 2, (0, 0): Fraction(1, 2)})
    assert element.terms == {(): Fraction(1, 2), (0, 1, 0): 3}
    assert algebra.element({(0,): 1, (0, 0, 0): -1}).is_zero()


def test_associativity(a2, affine_a2, rng):
    for system in (a2, affine_a2):
        algebra = HeckeAlgebra(system, 3)
        for _ in range(15):
            a, b, c = (random_element(algebra, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)


def test_distributivity_and_unit(affine_a1, rng):
    algebra = HeckeAlgebra(affine_a1, 2)
    for _ in range(15):
        a, b, c = (random_element(algebra, rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert a * algebra.one() == a == algebra.one() * a


def test_eps_is_multiplicative(a2, rng):
    algebra = HeckeAlgebra(a2, 3)
    assert hecke_eps(algebra.basis((0, 1, 0))) == 27
    for _ in range(15):
        a, b = random_element(algebra, rng), random_element(algebra, rng)
        assert hecke_eps(a * b) == hecke_eps(a) * hecke_eps(b)


def test_trace_is_symmetric(affine_a2, rng):
    algebra = HeckeAlgebra(affine_a2, 2)
    for _ in range(15):
        a, b = random_element(algebra, rng), random_element(algebra, rng)
        assert hecke_trace(a * b) == hecke_trace(b * a)


def test_star_is_anti_multiplicative(a2, rng):
    algebra = HeckeAlgebra(a2, 2)
    assert hecke_star(algebra.basis((0, 1))) == algebra.basis((1, 0))
    for _ in range(15):
        a, b = random_element(algebra, rng), random_element(algebra, rng)
        assert hecke_star(a * b) == hecke_star(b) * hecke_star(a)
        assert hecke_star(hecke_star(a)) == a


def test_trace_of_star_product_is_positive(a2, rng):
    algebra = HeckeAlgebra(a2, 2)
    for _ in range(15):
        a = random_element(algebra, rng)
        if not a.is_zero():
            assert hecke_trace(hecke_star(a) * a) > 0


def test_convolution_oracle_matches_basis_rule(a1):
    algebra = HeckeAlgebra(a1, 2)
    basis = {"e": algebra.one(), "s": algebra.generator(0)}
    for (first, second), values in convolution_oracle().items():
        product = basis[first] * basis[second]
        assert product.coefficient(()) == values["e"]
        assert product.coefficient((0,)) == values["s"]


def test_standard_idempotents(a2, affine_a2):
    algebra = HeckeAlgebra(a2, 3)
    e = standard_idempotent(algebra, {0})
    assert e * e == e
    assert hecke_trace(e) == Fraction(1, 4)
    assert hecke_eps(e) == 1
    full = standard_idempotent(algebra, {0, 1})
    assert full * full == full
    assert algebra.generator(0) * full == full * 3
    with pytest.raises(NotSphericalError):
        standard_idempotent(HeckeAlgebra(affine_a2, 3), {0, 1, 2})


def test_hattori_stallings_rank(a1):
    algebra = HeckeAlgebra(a1, 3)
    e = standard_idempotent(algebra, {0})
    assert hattori_stallings_rank(HeckeMatrix.diag(e, algebra.zero())) == HaarMeasure(Fraction(1, 4), "B")
    assert hattori_stallings_rank(HeckeMatrix.identity(algebra, 3)) == HaarMeasure(3, "B")
    assert hattori_stallings_rank(HeckeMatrix.identity(algebra, 1) * HeckeMatrix.diag(algebra.zero())).coefficient == 0
    with pytest.raises(NotIdempotentError):
        hattori_stallings_rank(HeckeMatrix.diag(algebra.generator(0)))
    formal = HeckeAlgebra(a1, FORMAL_Q)
    with pytest.raises(InvalidInputError):
        hattori_stallings_rank(HeckeMatrix.identity(formal, 1))


def test_mixed_algebras_are_rejected(a1, a2):
    with pytest.raises(MixedSystemsError):
        HeckeAlgebra(a1, 2).one() + HeckeAlgebra(a1, 3).one()
    with pytest.raises(MixedSystemsError):
        HeckeAlgebra(a1, 2).one() * HeckeAlgebra(a2, 2).one()
    with pytest.raises(MixedSystemsError):
        HeckeMatrix.diag(HeckeAlgebra(a1, 2).one(), HeckeAlgebra(a1, 3).one())


def test_invalid_algebra_and_matrix(a1):
    with pytest.raises(InvalidInputError):
        HeckeAlgebra(a1, 1)
    algebra = HeckeAlgebra(a1, 2)
    with pytest.raises(InvalidInputError):
        HeckeMatrix([[algebra.one(), algebra.zero()]])
    with pytest.raises(InvalidInputError):
        HeckeMatrix.identity(algebra, 2) * HeckeMatrix.identity(algebra, 3)


def test_element_text(a1):
    algebra = HeckeAlgebra(a1, 3)
    square = algebra.generator(0) * algebra.generator(0)
    assert square.to_text() == "(3)*T[e] + (2)*T[s1]"
    assert algebra.zero().to_text() == "0"
