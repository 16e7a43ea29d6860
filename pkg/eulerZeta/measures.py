"""Rational multiples of Haar measures and commensurability of compact open subgroups.

Orientation: |U:V| = |U:U∩V| / |V:U∩V| and mu_V = |U:V| mu_U, so a measure
c * mu_A reads c * |B:A| * mu_B in base B.
"""

from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple

import networkx as nx

from .algebra import format_rational
from .algebra.rationals import as_rational
from .exceptions import IncommensurableError, InconsistentContext, InvalidInputError
from .log import get_logger

LOG = get_logger(__name__)


class IndexDeclaration(NamedTuple):
    """|first : first ∩ second| = first_index and |second : first ∩ second| = second_index."""

    first: str
    second: str
    first_index: int
    second_index: int


class SubgroupContext:
    """Read-only commensurability data between named compact open subgroups.

    Declarations are validated when the context is built: every cycle of
    declared pairs must have index ratio 1.
    """

    def __init__(self, declarations: Iterable[IndexDeclaration] = (), subgroups: Iterable[str] = ()):
        self._declarations = tuple(IndexDeclaration(*d) for d in declarations)
        graph = nx.Graph()
        graph.add_nodes_from(subgroups)
        for d in self._declarations:
            if d.first_index < 1 or d.second_index < 1:
                raise InvalidInputError(f"indices must be positive integers: {d}")
            if d.first == d.second:
                if d.first_index != d.second_index:
                    raise InconsistentContext(f"{d.first} declared with itself at ratio {d.first_index}/{d.second_index}")
                graph.add_node(d.first)
                continue
            ratio = Fraction(d.first_index, d.second_index)
            if graph.has_edge(d.first, d.second):
                known = graph.edges[d.first, d.second]["ratio"]
                known = known if graph.edges[d.first, d.second]["source"] == d.first else 1 / known
                if known != ratio:
                    raise InconsistentContext(f"contradictory declarations for ({d.first}, {d.second})")
                continue
            graph.add_edge(d.first, d.second, ratio=ratio, source=d.first)
        self._graph = graph
        self._volumes = self._potentials()

    def _potentials(self) -> dict[str, Fraction]:
        # volume of each subgroup relative to the root of its component
        volumes: dict[str, Fraction] = {}
        for component in nx.connected_components(self._graph):
            root = min(component)
            volumes[root] = Fraction(1)
            for parent, child in nx.bfs_edges(self._graph, root):
                volumes[child] = volumes[parent] / self._ratio(parent, child)
        for first, second in self._graph.edges:
            if volumes[first] / volumes[second] != self._ratio(first, second):
                raise InconsistentContext(f"declared indices are inconsistent around ({first}, {second})")
        LOG.debug(f"Subgroup context with {len(volumes)} subgroups validated")
        return volumes

    def _ratio(self, first: str, second: str) -> Fraction:
        data = self._graph.edges[first, second]
        return data["ratio"] if data["source"] == first else 1 / data["ratio"]

    @classmethod
    def build(cls, declarations: Iterable[tuple[str, str, int, int]], subgroups: Iterable[str] = ()) -> "SubgroupContext":
        return cls(declarations, subgroups)

    def with_index(self, big: str, small: str, index: int) -> "SubgroupContext":
        """New context additionally declaring small ⊆ big with |big:small| = index."""
        return SubgroupContext(self._declarations + (IndexDeclaration(big, small, index, 1),), self.subgroups)

    def merge(self, other: "SubgroupContext") -> "SubgroupContext":
        return SubgroupContext(self._declarations + other._declarations, self.subgroups | other.subgroups)

    @property
    def subgroups(self) -> frozenset[str]:
        return frozenset(self._graph.nodes)

    @property
    def declarations(self) -> tuple[IndexDeclaration, ...]:
        return self._declarations

    def index(self, first: str, second: str) -> Fraction:
        """Commensurability index |first : second| along any declared path.

        Raises
        ------
        IncommensurableError
            If no declared path joins the two subgroups.
        """
        if first == second:
            return Fraction(1)
        if first not in self._volumes or second not in self._volumes or not nx.has_path(self._graph, first, second):
            raise IncommensurableError(first, second)
        return self._volumes[first] / self._volumes[second]

    def index_along(self, path: list[str]) -> Fraction:
        """Product of the declared ratios along ``path``; agrees with :meth:`index` on the endpoints."""
        value = Fraction(1)
        for first, second in zip(path, path[1:]):
            if not self._graph.has_edge(first, second):
                raise IncommensurableError(first, second)
            value *= self._ratio(first, second)
        return value


class Sign(str, Enum):
    """Position of a measure in h_G = h_G^+ ⊔ {0} ⊔ h_G^-."""

    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"


class HaarMeasure:
    """The element coefficient * mu[base] of h_G."""

    __slots__ = ("_coefficient", "_base")

    def __init__(self, coefficient, base: str):
        self._coefficient = as_rational(coefficient)
        self._base = base

    @property
    def coefficient(self) -> Fraction:
        return self._coefficient

    @property
    def base(self) -> str:
        return self._base

    def _same_base(self, other: "HaarMeasure"):
        if not isinstance(other, HaarMeasure):
            return NotImplemented
        if other._base != self._base:
            raise IncommensurableError(self._base, other._base)
        return other

    def __add__(self, other):
        other = self._same_base(other)
        if other is NotImplemented:
            return other
        return HaarMeasure(self._coefficient + other._coefficient, self._base)

    def __sub__(self, other):
        other = self._same_base(other)
        if other is NotImplemented:
            return other
        return HaarMeasure(self._coefficient - other._coefficient, self._base)

    def __neg__(self):
        return HaarMeasure(-self._coefficient, self._base)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return HaarMeasure(self._coefficient * scalar, self._base)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HaarMeasure):
            return NotImplemented
        if self._coefficient == 0 and other._coefficient == 0:
            return True
        return self._base == other._base and self._coefficient == other._coefficient

    def __hash__(self):
        return hash((self._coefficient, self._base)) if self._coefficient else hash(0)

    def equals(self, other: "HaarMeasure", ctx: SubgroupContext) -> bool:
        """Equality in h_G after rebasing ``other`` to this base."""
        return rebase(other, self._base, ctx)._coefficient == self._coefficient

    def to_text(self) -> str:
        return f"{format_rational(self._coefficient)} * mu[{self._base}]"

    def __repr__(self):
        return f"HaarMeasure({self.to_text()})"

    __str__ = to_text


def rebase(m: HaarMeasure, target: str, ctx: SubgroupContext) -> HaarMeasure:
    """Express ``m`` in the base ``target`` using mu_A = |B:A| mu_B.

    Raises
    ------
    IncommensurableError
        If the two bases are not joined by declared indices.
    """
    if m.base == target:
        return m
    return HaarMeasure(m.coefficient * ctx.index(target, m.base), target)


def measure_sign(m: HaarMeasure) -> Sign:
    if m.coefficient > 0:
        return Sign.POSITIVE
    if m.coefficient < 0:
        return Sign.NEGATIVE
    return Sign.ZERO
