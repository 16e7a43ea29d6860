from fractions import Fraction

import pytest

from eulerZeta.exceptions import InvalidInputError, ParseError
from eulerZeta.hecke import HeckeAlgebra
from eulerZeta.readers import (
    parse_context,
    parse_graph_of_groups,
    parse_hecke_elements,
    parse_hecke_matrix,
    parse_orbit_complex,
    read_context,
    read_coxeter,
    read_graph_of_groups,
)

GRAPH = """\
# PGL2 over Q3 acting on its tree
vertex u
vertex v
edge e u v it 4 io 4
"""

AMALGAM = """\
vertex a order 2
vertex b order 3
edge e a b it 3 io 2 order 1
"""


def test_parse_graph_of_groups():
    graph = parse_graph_of_groups(GRAPH)
    assert [v.name for v in graph.vertices] == ["u", "v"]
    (edge,) = graph.edges
    assert (edge.origin, edge.terminus, edge.index_terminus, edge.index_origin) == ("u", "v", 4, 4)
    assert not graph.all_finite()
    assert parse_graph_of_groups(AMALGAM).all_finite()


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("vertex\n", 1, "vertex NAME"),
        ("vertex a\nedge e a a it 2\n", 2, "both 'it' and 'io'"),
        ("vertex a\nedge e a a it 2 io\n", 2, "pairs"),
        ("vertex a\nedge e a a it 2 io 0\n", 2, "positive integer"),
        ("vertex a\nedge e a a it 2 io 2 size 3\n", 2, "unknown edge option"),
        ("vertex a\nface f\n", 2, "unknown directive"),
        ("vertex a\nedge e a b it 2 io 2\n", 2, "unknown vertex"),
        ("vertex a\nvertex a\n", 2, "duplicate"),
    ],
)
def test_graph_parse_errors(text, line, fragment):
    with pytest.raises(ParseError) as error:
        parse_graph_of_groups(text, source="g.txt")
    assert error.value.line == line
    assert fragment in str(error.value)


def test_parse_orbit_complex():
    data = parse_orbit_complex("dim 1\norbit 0 u\norbit 0 v\norbit 1 e  # the edge\n")
    assert data.dim == 1
    assert data.orbits == {0: ("u", "v"), 1: ("e",)}
    with pytest.raises(ParseError) as error:
        parse_orbit_complex("dim 1\norbit 2 x\n")
    assert error.value.line == 2
    with pytest.raises(ParseError):
        parse_orbit_complex("orbit 0 u\n")
    with pytest.raises(ParseError):
        parse_orbit_complex("dim one\n")


def test_parse_context():
    ctx = parse_context("index K P 3\npair P Q 2 4\n")
    assert ctx.index("K", "P") == 3
    assert ctx.index("P", "Q") == Fraction(1, 2)
    assert ctx.index("K", "Q") == Fraction(3, 2)
    with pytest.raises(ParseError) as error:
        parse_context("index A B 2\nindex B C 2\nindex A C 3\n", source="ctx.txt")
    assert error.value.line == 3
    with pytest.raises(ParseError):
        parse_context("index A B\n")


def test_parse_hecke_elements(a2):
    algebra = HeckeAlgebra(a2, 2)
    first, second = parse_hecke_elements("term 1 w 1\nterm 1/2 w\n*\nterm -3 w 2 1\n", algebra)
    assert first == algebra.generator(0) + algebra.one() * Fraction(1, 2)
    assert second == algebra.basis((1, 0)) * -3
    with pytest.raises(ParseError):
        parse_hecke_elements("term 1 w 3\n", algebra)
    with pytest.raises(ParseError):
        parse_hecke_elements("term x w 1\n", algebra)
    with pytest.raises(ParseError):
        parse_hecke_elements("term 1 1\n", algebra)


def test_parse_hecke_matrix(a1):
    algebra = HeckeAlgebra(a1, 3)
    matrix = parse_hecke_matrix("matrix 2\nentry\nterm 1 w\nentry\nentry\nentry\n", algebra)
    assert matrix.size == 2
    assert matrix[0, 0] == algebra.one()
    assert matrix[1, 1].is_zero()
    with pytest.raises(ParseError) as error:
        parse_hecke_matrix("matrix 2\nentry\n", algebra)
    assert "expected 4 entry blocks" in str(error.value)
    with pytest.raises(ParseError):
        parse_hecke_matrix("entry\n", algebra)
    with pytest.raises(ParseError):
        parse_hecke_matrix("matrix 1\nterm 1 w\n", algebra)


def test_readers_use_files(write):
    graph = read_graph_of_groups(write("tree.txt", GRAPH))
    assert graph.edges[0].name == "e"
    system = read_coxeter(write("a2.txt", "rank 2\nm 1 2 3\n"))
    assert system.m(0, 1) == 3
    ctx = read_context(write("ctx.txt", "index I B 1\n"))
    assert ctx.index("I", "B") == 1
    with pytest.raises(ParseError) as error:
        read_graph_of_groups(write("bad.txt", "nonsense\n"))
    assert "bad.txt:1:" in str(error.value)


def test_missing_file(tmp_path):
    with pytest.raises(InvalidInputError):
        read_graph_of_groups(tmp_path / "absent.txt")
