from itertools import combinations

import pytest
from pydantic import ValidationError

from eulerZeta.coxeter import INF, CoxeterSystem, classify_finite, coxeter_graph, is_spherical
from eulerZeta.exceptions import InvalidInputError, ParseError


def permutation_of(word, n):
    """S_{n+1} image of a word in the simple transpositions, acting on positions."""
    perm = list(range(n + 1))
    for s in word:
        perm[s], perm[s + 1] = perm[s + 1], perm[s]
    return tuple(perm)


def inversions(perm):
    return sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])


def random_word(rng, rank, max_len=10):
    return tuple(rng.randrange(rank) for _ in range(rng.randint(0, max_len)))


def test_finite_constructors_name_and_matrix(a2, i25):
    assert a2.name == "A2"
    assert a2.m(0, 1) == 3
    assert i25.name == "I2(5)"
    assert i25.m(1, 0) == 5
    assert CoxeterSystem.affine("A", 1).m(0, 1) == INF
    assert str(CoxeterSystem.affine("A", 2)) == "~A2"


def test_invalid_matrices_are_rejected():
    with pytest.raises(ValidationError):
        CoxeterSystem(matrix=((1, 3), (2, 1)))
    with pytest.raises(ValidationError):
        CoxeterSystem(matrix=((2, 3), (3, 1)))
    with pytest.raises(InvalidInputError):
        CoxeterSystem.from_edges(2, {(0, 1): 1})
    with pytest.raises(InvalidInputError):
        CoxeterSystem.finite("D", 3)


def test_infinity_tokens_are_encoded():
    system = CoxeterSystem(matrix=((1, "inf"), ("inf", 1)))
    assert system.m(0, 1) == INF
    assert CoxeterSystem(matrix=((1, float("inf")), (float("inf"), 1))).m(1, 0) == INF


def test_normal_form_is_shortlex_least_and_idempotent(a2):
    assert a2.normal_form((1, 0, 1)) == (0, 1, 0)
    assert a2.normal_form((0, 0)) == ()
    w = a2.normal_form((1, 0, 1, 1, 0))
    assert a2.normal_form(w) == w


def test_length_matches_permutation_inversions(a3, rng):
    for _ in range(200):
        word = random_word(rng, 3)
        assert a3.length(word) == inversions(permutation_of(word, 3))


def test_normal_forms_agree_iff_permutations_agree(a3, rng):
    words = [random_word(rng, 3, 8) for _ in range(60)]
    for u in words:
        for v in words[:15]:
            same = permutation_of(u, 3) == permutation_of(v, 3)
            assert (a3.normal_form(u) == a3.normal_form(v)) == same


def test_dihedral_group_has_order_2m(i25):
    seen = {i25.normal_form(w) for k in range(8) for w in [(0, 1) * k, (1, 0) * k, (0,) + (1, 0) * k, (1,) + (0, 1) * k]}
    assert len(seen) == 10
    assert max(len(w) for w in seen) == 5


def test_multiply_and_inverse(affine_a2, rng):
    for _ in range(30):
        word = random_word(rng, 3, 8)
        w = affine_a2.normal_form(word)
        assert affine_a2.multiply(w, affine_a2.inverse(w)) == ()
        assert len(affine_a2.inverse(w)) == len(w)


def test_reduced_words_and_descents(a2):
    longest = a2.normal_form((0, 1, 0))
    assert a2.reduced_words(longest) == frozenset({(0, 1, 0), (1, 0, 1)})
    assert a2.right_descents(longest) == frozenset({0, 1})
    assert a2.right_descents((0, 1)) == frozenset({1})
    assert a2.left_descents((0, 1)) == frozenset({0})
    assert a2.is_right_descent((0, 1), 1)
    assert not a2.is_left_descent((0, 1), 1)


def test_times_generator(a2):
    assert a2.times_generator((0, 1), 0) == (0, 1, 0)
    assert a2.times_generator((0, 1, 0), 1) == (1, 0)
    assert a2.times_generator((), 1) == (1,)


def test_check_word_rejects_bad_generators(a2):
    with pytest.raises(InvalidInputError):
        a2.normal_form((0, 2))
    with pytest.raises(InvalidInputError):
        a2.check_word((-1,))


def test_word_text_and_labels(a2):
    assert a2.word_text(()) == "e"
    assert a2.word_text((0, 1)) == "s1s2"
    labelled = CoxeterSystem.from_edges(2, {(0, 1): 3}, labels=("a", "b"))
    assert labelled.word_text((1, 0)) == "ba"


def test_from_text():
    system = CoxeterSystem.from_text("# triangle group\nrank 3\nlabels r s t\nm 1 2 3\nm 2 3 inf  # free\nm 1 3 4\n")
    assert system.rank == 3
    assert system.m(0, 1) == 3
    assert system.m(1, 2) == INF
    assert system.m(0, 2) == 4
    assert system.label(2) == "t"


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("m 1 2 3\n", 1, "before 'rank'"),
        ("rank 2\nm 1 3 3\n", 2, "out of range"),
        ("rank 2\nm 1 2 1\n", 2, ">= 2 or inf"),
        ("rank 2\nq 3\n", 2, "thickness"),
        ("rank 2\nthickness 4\n", 2, "thickness"),
        ("rank 2\nfoo\n", 2, "unknown directive"),
        ("# nothing\n", 1, "missing 'rank'"),
        ("rank 2\nm 1 2 x\n", 2, "bad number"),
    ],
)
def test_from_text_errors(text, line, fragment):
    with pytest.raises(ParseError) as error:
        CoxeterSystem.from_text(text, source="cox.txt")
    assert error.value.line == line
    assert fragment in str(error.value)
    assert str(error.value).startswith(f"cox.txt:{line}:")


def test_restrict(affine_a2):
    sub = affine_a2.restrict({0, 2})
    assert sub.rank == 2
    assert sub.m(0, 1) == 3
    assert classify_finite(sub).type == "A2"
    with pytest.raises(InvalidInputError):
        affine_a2.restrict(())


def test_product(a1):
    product = CoxeterSystem.product(a1, a1, CoxeterSystem.finite("A", 2))
    assert product.rank == 4
    assert product.m(0, 1) == 2
    assert product.m(2, 3) == 3
    assert classify_finite(product).order == 24


@pytest.mark.parametrize(
    "family, n, m, order, exponents",
    [
        ("A", 3, None, 24, (1, 2, 3)),
        ("B", 3, None, 48, (1, 3, 5)),
        ("D", 4, None, 192, (1, 3, 3, 5)),
        ("E", 6, None, 51840, (1, 4, 5, 7, 8, 11)),
        ("F", 4, None, 1152, (1, 5, 7, 11)),
        ("G", 2, None, 12, (1, 5)),
        ("H", 3, None, 120, (1, 5, 9)),
        ("H", 4, None, 14400, (1, 11, 19, 29)),
        ("I", 2, 7, 14, (1, 6)),
    ],
)
def test_classify_finite_types(family, n, m, order, exponents):
    descriptor = classify_finite(CoxeterSystem.finite(family, n, m))
    assert descriptor.order == order
    assert descriptor.exponents == exponents
    assert len(descriptor.exponents) == n
    assert descriptor.degrees == tuple(e + 1 for e in exponents)


def test_classify_recognises_relabelled_diagrams():
    # B3 with the double bond at the other end of the path
    system = CoxeterSystem.from_edges(3, {(0, 1): 4, (1, 2): 3})
    assert classify_finite(system).type == "B3"
    dihedral = CoxeterSystem.from_edges(2, {(0, 1): 6})
    assert classify_finite(dihedral).type == "G2"


def test_classify_subsets_and_products(affine_a2, a3):
    assert classify_finite(affine_a2) is None
    assert classify_finite(affine_a2, {0, 1}).type == "A2"
    assert classify_finite(a3, {0, 2}).type == "A1xA1"
    assert classify_finite(a3, ()).order == 1
    assert is_spherical(a3)
    assert not is_spherical(affine_a2)


def test_classify_infinite(triangle):
    assert classify_finite(triangle) is None
    assert classify_finite(triangle, {0, 1}) is None
    assert classify_finite(CoxeterSystem.from_edges(3, {(0, 1): 3, (1, 2): 3, (0, 2): 4})) is None


@pytest.mark.parametrize(
    "family, n",
    [("A", 1), ("A", 2), ("A", 3), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("E", 6), ("F", 4), ("G", 2)],
)
def test_affine_systems_have_spherical_maximal_subsets(family, n):
    system = CoxeterSystem.affine(family, n)
    assert system.rank == n + 1
    assert classify_finite(system) is None
    for node in system.generators:
        rest = set(system.generators) - {node}
        assert is_spherical(system, rest)


def test_coxeter_graph_edges(affine_a2):
    graph = coxeter_graph(affine_a2)
    assert graph.number_of_edges() == 3
    assert graph.edges[0, 1]["m"] == 3
