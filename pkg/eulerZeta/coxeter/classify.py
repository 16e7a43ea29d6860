"""Recognition of finite Coxeter systems by diagram isomorphism.

The Coxeter graph has an edge {s, t} labelled m(s, t) whenever m(s, t) >= 3.
A system is finite iff every connected component is isomorphic, labels
included, to one of the irreducible finite diagrams below.
"""

from functools import lru_cache
from typing import Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import InvalidInputError
from ..log import get_logger
from .system import INF, CoxeterSystem

LOG = get_logger(__name__)

EXCEPTIONAL_EXPONENTS: dict[str, tuple[int, ...]] = {
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    "F4": (1, 5, 7, 11),
    "H3": (1, 5, 9),
    "H4": (1, 11, 19, 29),
}


def _path(n: int, labels: Optional[dict[int, int]] = None) -> dict[tuple[int, int], int]:
    labels = labels or {}
    return {(i, i + 1): labels.get(i, 3) for i in range(n - 1)}


def finite_diagram(family: str, n: int, m: Optional[int] = None) -> dict[tuple[int, int], int]:
    """Edges of the irreducible finite diagram ``family`` of rank ``n``.

    Parameters
    ----------
    family : str
        One of A, B, C, D, E, F, G, H, I.
    n : int
        Rank.
    m : int, optional
        Dihedral parameter for family I (rank 2).

    Returns
    -------
    dict[tuple[int, int], int]
        Non-commuting pairs with their labels.

    Raises
    ------
    InvalidInputError
        If the family/rank combination is not a finite Coxeter type.
    """
    family = family.upper()
    if family == "A" and n >= 1:
        return _path(n)
    if family in ("B", "C") and n >= 2:
        return _path(n, {n - 2: 4})
    if family == "D" and n >= 4:
        edges = _path(n - 1)
        edges[(n - 3, n - 1)] = 3
        return edges
    if family == "E" and n in (6, 7, 8):
        edges = {(0, 2): 3, (1, 3): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
        return edges
    if family == "F" and n == 4:
        return _path(4, {1: 4})
    if family == "G" and n == 2:
        return {(0, 1): 6}
    if family == "H" and n in (3, 4):
        return _path(n, {0: 5})
    if family == "I" and n == 2 and m is not None and m >= 2:
        return {(0, 1): m} if m > 2 else {}
    raise InvalidInputError(f"no finite Coxeter type {family}{n}")


def affine_diagram(family: str, n: int) -> dict[tuple[int, int], int]:
    """Edges of the affine diagram extending the finite type ``family``/``n`` (rank n + 1)."""
    family = family.upper()
    if family == "A" and n == 1:
        return {(0, 1): INF}
    if family == "A" and n >= 2:
        edges = _path(n + 1)
        edges[(0, n)] = 3
        return edges
    if family == "B" and n >= 3:
        edges = {(0, 2): 3, (1, 2): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n)})
        edges[(n - 1, n)] = 4
        return edges
    if family in ("C", "B") and n == 2 or family == "C" and n >= 2:
        return _path(n + 1, {0: 4, n - 1: 4})
    if family == "D" and n >= 4:
        edges = {(0, 2): 3, (1, 2): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
        edges[(n - 2, n)] = 3
        return edges
    if family == "E" and n in (6, 7, 8):
        arms = {6: (2, 2, 2), 7: (1, 3, 3), 8: (1, 2, 5)}[n]
        edges, node = {}, 1
        for arm in arms:
            previous = 0
            for _ in range(arm):
                edges[(previous, node)] = 3
                previous, node = node, node + 1
        return edges
    if family == "F" and n == 4:
        return _path(5, {2: 4})
    if family == "G" and n == 2:
        return {(0, 1): 3, (1, 2): 6}
    raise InvalidInputError(f"no affine Coxeter type ~{family}{n}")


class FiniteComponent(BaseModel):
    """One irreducible factor of a finite Coxeter system."""

    model_config = ConfigDict(frozen=True)

    type: str = Field(description="Irreducible type, e.g. A2, B3, I2(7).", examples=["A2"])
    generators: tuple[int, ...] = Field(description="Generator indices of the component.")
    exponents: tuple[int, ...] = Field(description="Exponents m_i; degrees are m_i + 1.")


class FiniteTypeDescriptor(BaseModel):
    """Classification of a finite Coxeter system into irreducible components."""

    model_config = ConfigDict(frozen=True)

    components: tuple[FiniteComponent, ...]

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(sorted(m for c in self.components for m in c.exponents))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m + 1 for m in self.exponents)

    @property
    def positive_roots(self) -> int:
        return sum(self.exponents)

    @property
    def order(self) -> int:
        order = 1
        for d in self.degrees:
            order *= d
        return order

    @property
    def type(self) -> str:
        return "x".join(c.type for c in self.components) or "A0"


def coxeter_graph(system: CoxeterSystem, subset=None) -> nx.Graph:
    """Coxeter graph restricted to ``subset`` (all generators by default)."""
    nodes = sorted(system.generators if subset is None else subset)
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    for a, i in enumerate(nodes):
        for j in nodes[a + 1 :]:
            m = system.m(i, j)
            if m != 2:
                graph.add_edge(i, j, m=m)
    return graph


def _diagram_graph(edges: dict[tuple[int, int], int], n: int) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for (i, j), m in edges.items():
        graph.add_edge(i, j, m=m)
    return graph


def _candidates(n: int) -> list[tuple[str, nx.Graph, tuple[int, ...]]]:
    candidates = [(f"A{n}", finite_diagram("A", n), tuple(range(1, n + 1)))]
    if n >= 3:
        candidates.append((f"B{n}", finite_diagram("B", n), tuple(range(1, 2 * n, 2))))
    if n >= 4:
        exponents = tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
        candidates.append((f"D{n}", finite_diagram("D", n), exponents))
    if n in (6, 7, 8):
        candidates.append((f"E{n}", finite_diagram("E", n), EXCEPTIONAL_EXPONENTS[f"E{n}"]))
    if n == 4:
        candidates.append(("F4", finite_diagram("F", 4), EXCEPTIONAL_EXPONENTS["F4"]))
        candidates.append(("H4", finite_diagram("H", 4), EXCEPTIONAL_EXPONENTS["H4"]))
    if n == 3:
        candidates.append(("H3", finite_diagram("H", 3), EXCEPTIONAL_EXPONENTS["H3"]))
    return [(name, _diagram_graph(edges, n), exps) for name, edges, exps in candidates]


def _dihedral_name(m: int) -> str:
    return {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")


def _match_edges(first: dict, second: dict) -> bool:
    return first["m"] == second["m"]


def _classify_component(system: CoxeterSystem, component: nx.Graph) -> Optional[FiniteComponent]:
    nodes = tuple(sorted(component.nodes))
    n = len(nodes)
    if any(data["m"] == INF for _, _, data in component.edges(data=True)):
        return None
    if n == 1:
        return FiniteComponent(type="A1", generators=nodes, exponents=(1,))
    if n == 2:
        m = system.m(*nodes)
        return FiniteComponent(type=_dihedral_name(m), generators=nodes, exponents=(1, m - 1))
    relabelled = nx.convert_node_labels_to_integers(component, ordering="sorted")
    for name, diagram, exponents in _candidates(n):
        if nx.is_isomorphic(relabelled, diagram, edge_match=_match_edges):
            return FiniteComponent(type=name, generators=nodes, exponents=exponents)
    return None


@lru_cache(maxsize=4096)
def _classify(system: CoxeterSystem, subset: frozenset[int]) -> Optional[FiniteTypeDescriptor]:
    graph = coxeter_graph(system, subset)
    components = []
    for nodes in sorted(nx.connected_components(graph), key=min):
        component = _classify_component(system, graph.subgraph(nodes))
        if component is None:
            return None
        components.append(component)
    return FiniteTypeDescriptor(components=tuple(components))


def classify_finite(system: CoxeterSystem, subset=None) -> Optional[FiniteTypeDescriptor]:
    """Classify ``system`` (or its parabolic subsystem on ``subset``).

    Parameters
    ----------
    system : CoxeterSystem
        The Coxeter system.
    subset : iterable of int, optional
        Generators of a parabolic subsystem; all generators by default.

    Returns
    -------
    FiniteTypeDescriptor or None
        The descriptor when the (sub)system is finite, ``None`` when it is infinite.
        The empty subset gives a descriptor with no components.
    """
    subset = frozenset(system.generators if subset is None else subset)
    return _classify(system, subset)


def is_spherical(system: CoxeterSystem, subset=None) -> bool:
    return classify_finite(system, subset) is not None
