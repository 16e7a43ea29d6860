"""Readers for the plain text input formats.

Every format is line oriented: ``#`` starts a comment, blank lines are ignored,
and errors carry the 1-based line number.
"""

from pathlib import Path
from typing import Iterator

from pydantic import ValidationError

from .algebra import parse_rational
from .coxeter import CoxeterSystem
from .exceptions import EulerZetaError, InvalidInputError, ParseError
from .hecke import HeckeAlgebra, HeckeElement, HeckeMatrix
from .log import get_logger
from .measures import IndexDeclaration, SubgroupContext
from .models import EdgeGroup, GraphOfGroups, OrbitComplexData, VertexGroup

LOG = get_logger(__name__)


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e.strerror}") from e


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _positive_int(token: str, lineno: int, source: str) -> int:
    if not token.isdigit() or int(token) < 1:
        raise ParseError(f"expected a positive integer, got {token!r}", lineno, source)
    return int(token)


def read_coxeter(path: str | Path) -> CoxeterSystem:
    return CoxeterSystem.from_text(_read(path), source=str(path))


def parse_graph_of_groups(text: str, source: str = "<input>") -> GraphOfGroups:
    """Parse ``vertex NAME [order M]`` and ``edge NAME V1 V2 it I1 io I2 [order K]`` lines.

    The edge runs from V1 = o(e) to V2 = t(e); ``it`` is |G_V2 : G_e| and ``io`` is |G_V1 : G_e|.
    """
    vertices, edges, last = [], [], 1
    for lineno, tokens in _lines(text):
        last = lineno
        head = tokens[0]
        if head == "vertex":
            if len(tokens) not in (2, 4) or (len(tokens) == 4 and tokens[2] != "order"):
                raise ParseError("expected 'vertex NAME [order M]'", lineno, source)
            order = _positive_int(tokens[3], lineno, source) if len(tokens) == 4 else None
            vertices.append(VertexGroup(name=tokens[1], order=order))
        elif head == "edge":
            if len(tokens) < 4:
                raise ParseError("expected 'edge NAME V1 V2 it I1 io I2 [order K]'", lineno, source)
            options = tokens[4:]
            if len(options) % 2:
                raise ParseError("edge options come in 'key value' pairs", lineno, source)
            values = {}
            for key, value in zip(options[::2], options[1::2]):
                if key not in ("it", "io", "order"):
                    raise ParseError(f"unknown edge option {key!r}", lineno, source)
                values[key] = _positive_int(value, lineno, source)
            if "it" not in values or "io" not in values:
                raise ParseError("edge needs both 'it' and 'io' indices", lineno, source)
            edges.append(
                EdgeGroup(
                    name=tokens[1],
                    origin=tokens[2],
                    terminus=tokens[3],
                    index_terminus=values["it"],
                    index_origin=values["io"],
                    order=values.get("order"),
                )
            )
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, source)
    try:
        return GraphOfGroups(vertices=tuple(vertices), edges=tuple(edges))
    except ValidationError as e:
        raise ParseError(_first_error(e), last, source) from e


def read_graph_of_groups(path: str | Path) -> GraphOfGroups:
    return parse_graph_of_groups(_read(path), source=str(path))


def parse_orbit_complex(text: str, source: str = "<input>") -> OrbitComplexData:
    """Parse ``dim D`` followed by ``orbit K SUBGROUP_ID`` lines."""
    dim, orbits, last = None, {}, 1
    for lineno, tokens in _lines(text):
        last = lineno
        if tokens[0] == "dim" and len(tokens) == 2 and tokens[1].isdigit():
            dim = int(tokens[1])
        elif tokens[0] == "orbit" and len(tokens) == 3 and tokens[1].isdigit():
            if dim is not None and int(tokens[1]) > dim:
                raise ParseError(f"orbit dimension {tokens[1]} exceeds dim {dim}", lineno, source)
            orbits.setdefault(int(tokens[1]), []).append(tokens[2])
        else:
            raise ParseError(f"expected 'dim D' or 'orbit K ID', got {' '.join(tokens)!r}", lineno, source)
    if dim is None:
        raise ParseError("missing 'dim' directive", 1, source)
    try:
        return OrbitComplexData(dim=dim, orbits={k: tuple(v) for k, v in orbits.items()})
    except ValidationError as e:
        raise ParseError(_first_error(e), last, source) from e


def read_orbit_complex(path: str | Path) -> OrbitComplexData:
    return parse_orbit_complex(_read(path), source=str(path))


def parse_context(text: str, source: str = "<input>") -> SubgroupContext:
    """Parse ``pair U V I J`` (|U:U∩V| = I, |V:U∩V| = J) and ``index BIG SMALL N`` lines."""
    declarations, last = [], 1
    for lineno, tokens in _lines(text):
        last = lineno
        if tokens[0] == "pair" and len(tokens) == 5:
            declarations.append(
                IndexDeclaration(
                    tokens[1], tokens[2], _positive_int(tokens[3], lineno, source), _positive_int(tokens[4], lineno, source)
                )
            )
        elif tokens[0] == "index" and len(tokens) == 4:
            declarations.append(IndexDeclaration(tokens[1], tokens[2], _positive_int(tokens[3], lineno, source), 1))
        else:
            raise ParseError(f"expected 'pair U V I J' or 'index BIG SMALL N', got {' '.join(tokens)!r}", lineno, source)
    try:
        return SubgroupContext(declarations)
    except EulerZetaError as e:
        raise ParseError(str(e), last, source) from e


def read_context(path: str | Path) -> SubgroupContext:
    return parse_context(_read(path), source=str(path))


def _term(algebra: HeckeAlgebra, tokens: list[str], lineno: int, source: str) -> tuple[tuple[int, ...], object]:
    if len(tokens) < 3 or tokens[2] != "w":
        raise ParseError("expected 'term COEFF w i1 i2 ...'", lineno, source)
    try:
        coefficient = parse_rational(tokens[1])
        word = tuple(int(tok) - 1 for tok in tokens[3:])
    except (InvalidInputError, ValueError):
        raise ParseError(f"bad coefficient or generator in {' '.join(tokens)!r}", lineno, source) from None
    if any(not 0 <= s < algebra.system.rank for s in word):
        raise ParseError(f"generator index outside 1..{algebra.system.rank}", lineno, source)
    return word, coefficient


def _element(algebra: HeckeAlgebra, terms: list[tuple[tuple[int, ...], object]]) -> HeckeElement:
    result = algebra.zero()
    for word, coefficient in terms:
        result = result + algebra.basis(word) * coefficient
    return result


def parse_hecke_elements(text: str, algebra: HeckeAlgebra, source: str = "<input>") -> list[HeckeElement]:
    """Parse ``term COEFF w i1 i2 ...`` lines; a line ``*`` starts the next element."""
    groups: list[list] = [[]]
    for lineno, tokens in _lines(text):
        if tokens == ["*"]:
            groups.append([])
        elif tokens[0] == "term":
            groups[-1].append(_term(algebra, tokens, lineno, source))
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", lineno, source)
    return [_element(algebra, terms) for terms in groups]


def read_hecke_elements(path: str | Path, algebra: HeckeAlgebra) -> list[HeckeElement]:
    return parse_hecke_elements(_read(path), algebra, source=str(path))


def parse_hecke_matrix(text: str, algebra: HeckeAlgebra, source: str = "<input>") -> HeckeMatrix:
    """Parse ``matrix n`` then n*n ``entry`` blocks of ``term`` lines, row-major."""
    size, blocks, last = None, [], 1
    for lineno, tokens in _lines(text):
        last = lineno
        if tokens[0] == "matrix":
            if size is not None or len(tokens) != 2:
                raise ParseError("expected a single 'matrix n' header", lineno, source)
            size = _positive_int(tokens[1], lineno, source)
        elif tokens == ["entry"]:
            if size is None:
                raise ParseError("'entry' before 'matrix n'", lineno, source)
            blocks.append([])
        elif tokens[0] == "term":
            if not blocks:
                raise ParseError("'term' outside an 'entry' block", lineno, source)
            blocks[-1].append(_term(algebra, tokens, lineno, source))
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", lineno, source)
    if size is None:
        raise ParseError("missing 'matrix n' header", 1, source)
    if len(blocks) != size * size:
        raise ParseError(f"expected {size * size} entry blocks, found {len(blocks)}", last, source)
    entries = [_element(algebra, terms) for terms in blocks]
    return HeckeMatrix([entries[i * size : (i + 1) * size] for i in range(size)])


def read_hecke_matrix(path: str | Path, algebra: HeckeAlgebra) -> HeckeMatrix:
    return parse_hecke_matrix(_read(path), algebra, source=str(path))


def _first_error(error: ValidationError) -> str:
    first = error.errors()[0]
    return str(first.get("msg", error)).removeprefix("Value error, ")
