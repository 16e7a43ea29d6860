"""Euler-Poincaré characteristics as elements of h_G.

Every route returns a :class:`HaarMeasure`; different routes for the same group
agree after :func:`rebase`.
"""

from collections import deque
from fractions import Fraction
from itertools import chain
from typing import Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict

from .algebra import ratfunc_eval
from .coxeter import CoxeterSystem, classify_finite, growth_polynomial_finite, growth_series, spherical_subsets
from .exceptions import DisconnectedGraphError, InvalidInputError, NonUnimodularError
from .log import get_logger
from .measures import HaarMeasure, IndexDeclaration, Sign, SubgroupContext, rebase
from .models import ChevalleyDatum, GraphOfGroups, OrbitComplexData

LOG = get_logger(__name__)

CHAMBER = "B"
IWAHORI = "I"
TRIVIAL = "1"


def parahoric_id(subset) -> str:
    """Subgroup identifier of P_J; the chamber stabilizer for J = ∅."""
    subset = sorted(subset)
    if not subset:
        return CHAMBER
    return "P[" + ",".join(str(s + 1) for s in subset) + "]"


def euler_compact(base: str = "G") -> HaarMeasure:
    """A compact group has characteristic 1 * mu_G."""
    return HaarMeasure(1, base)


def euler_from_orbits(data: OrbitComplexData, ctx: SubgroupContext, base: str) -> HaarMeasure:
    """Alternating sum over cell orbits of the measures mu of their stabilizers.

    Parameters
    ----------
    data : OrbitComplexData
        Stabilizers of the cell orbits, given in sign-free form.
    ctx : SubgroupContext
        Indices relating every stabilizer to ``base``.
    base : str
        Base of the returned measure.

    Returns
    -------
    HaarMeasure
        sum_k (-1)^k sum_{orbits in dim k} 1 * mu_stab, in base ``base``.

    Raises
    ------
    IncommensurableError
        If a stabilizer cannot be related to ``base``.
    """
    total = HaarMeasure(0, base)
    for k in sorted(data.orbits):
        for stabilizer in data.orbits[k]:
            total = total + (-1) ** k * rebase(HaarMeasure(1, stabilizer), base, ctx)
    return total


class UnimodularityReport(BaseModel):
    """Vertex and edge group volumes relative to a root, and the first unbalanced cycle."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    unimodular: bool
    root: str
    volumes: dict[str, Fraction]
    cycle: Optional[tuple[str, ...]] = None
    ratio: Optional[Fraction] = None


def _multigraph(g: GraphOfGroups) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(v.name for v in g.vertices)
    for e in g.edges:
        graph.add_edge(e.origin, e.terminus, key=e.name, edge=e)
    return graph


def unimodularity_report(g: GraphOfGroups) -> UnimodularityReport:
    """Propagate index ratios along a breadth-first spanning tree and test the other edges.

    The fundamental group is unimodular iff every edge outside the tree closes a
    cycle of ratio 1.

    Raises
    ------
    DisconnectedGraphError
        If the graph is not connected.
    """
    graph = _multigraph(g)
    if not nx.is_connected(graph):
        raise DisconnectedGraphError("graph of groups must be connected")
    root = min(graph.nodes)
    volumes = {root: Fraction(1)}
    tree = nx.Graph()
    tree.add_node(root)
    tree_edges: set[str] = set()
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        incident = sorted((data["edge"] for _, _, data in graph.edges(vertex, data=True)), key=lambda e: e.name)
        for e in incident:
            other = e.other_end(vertex)
            if other in volumes:
                continue
            volumes[e.name] = volumes[vertex] / e.index_at(vertex)
            volumes[other] = volumes[e.name] * e.index_at(other)
            tree.add_edge(vertex, other)
            tree_edges.add(e.name)
            queue.append(other)
    for e in sorted(g.edges, key=lambda e: e.name):
        if e.name in tree_edges:
            continue
        from_terminus = volumes[e.terminus] / e.index_terminus
        from_origin = volumes[e.origin] / e.index_origin
        volumes[e.name] = from_terminus
        if from_terminus != from_origin:
            path = nx.shortest_path(tree, e.terminus, e.origin)
            cycle = tuple(path) + (f"{e.name}",)
            LOG.info(f"Edge {e.name} closes a cycle of ratio {from_terminus / from_origin}")
            return UnimodularityReport(
                unimodular=False, root=root, volumes=volumes, cycle=cycle, ratio=from_terminus / from_origin
            )
    return UnimodularityReport(unimodular=True, root=root, volumes=volumes)


class GraphEulerResult(BaseModel):
    """Characteristic of the fundamental group together with its unimodularity report."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    measure: HaarMeasure
    report: UnimodularityReport


def euler_graph_of_groups(g: GraphOfGroups, base: Optional[str] = None) -> GraphEulerResult:
    """Sum of vertex group measures minus sum of edge group measures.

    Parameters
    ----------
    g : GraphOfGroups
        Connected graph with unimodular fundamental group.
    base : str, optional
        Vertex or edge name to express the result in. Defaults to ``"1"`` when
        every group is finite, else to the lexicographically first edge (or the
        single vertex).

    Raises
    ------
    NonUnimodularError
        Carrying the first cycle whose index ratio is not 1.
    """
    report = unimodularity_report(g)
    if not report.unimodular:
        raise NonUnimodularError(list(report.cycle), report.ratio)
    names = [v.name for v in g.vertices] + [e.name for e in g.edges]
    if base is None and g.all_finite():
        orders = {v.name: v.order for v in g.vertices} | {e.name: e.order for e in g.edges}
        coefficient = sum(Fraction(1, orders[v.name]) for v in g.vertices) - sum(
            (Fraction(1, orders[e.name]) for e in g.edges), Fraction(0)
        )
        return GraphEulerResult(measure=HaarMeasure(coefficient, TRIVIAL), report=report)
    if base is None:
        base = min(e.name for e in g.edges) if g.edges else g.vertices[0].name
    if base not in names:
        raise InvalidInputError(f"unknown base {base!r}; expected a vertex or edge name")
    volumes = report.volumes
    coefficient = sum(volumes[base] / volumes[v.name] for v in g.vertices) - sum(
        (volumes[base] / volumes[e.name] for e in g.edges), Fraction(0)
    )
    return GraphEulerResult(measure=HaarMeasure(coefficient, base), report=report)


def graph_context(g: GraphOfGroups) -> SubgroupContext:
    """Inclusions G_e ⊆ G_t(e), G_o(e) as a subgroup context (unimodular graphs only)."""
    declarations = []
    for e in g.edges:
        declarations.append(IndexDeclaration(e.terminus, e.name, e.index_terminus, 1))
        declarations.append(IndexDeclaration(e.origin, e.name, e.index_origin, 1))
    return SubgroupContext(declarations, (v.name for v in g.vertices))


def collapse_trivial_edges(g: GraphOfGroups) -> GraphOfGroups:
    """Contract every non-loop edge whose group equals one of its end groups.

    Contracting e with G_e = G_t merges t into o and multiplies the indices of
    the other edges at t by |G_o : G_e|. The characteristic is unchanged.
    """
    vertices = {v.name: v for v in g.vertices}
    edges = {e.name: e for e in g.edges}
    while True:
        trivial = [e for e in sorted(edges.values(), key=lambda e: e.name) if not e.is_loop() and 1 in (e.index_terminus, e.index_origin)]
        if not trivial:
            break
        e = trivial[0]
        if e.index_terminus == 1:
            removed, kept, factor = e.terminus, e.origin, e.index_origin
        else:
            removed, kept, factor = e.origin, e.terminus, e.index_terminus
        LOG.debug(f"Collapsing edge {e.name}: {removed} merged into {kept}")
        del edges[e.name]
        del vertices[removed]
        for name, f in list(edges.items()):
            update = {}
            if f.origin == removed:
                update |= {"origin": kept, "index_origin": f.index_origin * factor}
            if f.terminus == removed:
                update |= {"terminus": kept, "index_terminus": f.index_terminus * factor}
            if update:
                edges[name] = f.model_copy(update=update)
    return GraphOfGroups(vertices=tuple(vertices.values()), edges=tuple(edges.values()))


class EdgeInequality(BaseModel):
    """mu_{G_e} >= mu_{G_t} + mu_{G_o}, coefficients in a common base."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edge: str
    edge_coefficient: Fraction
    vertex_coefficient: Fraction
    holds: bool


class NonPositivityCertificate(BaseModel):
    """Outcome of the non-positivity check for a unimodular graph of groups."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nonpositive: bool
    compact: bool
    measure: HaarMeasure
    reduced: GraphOfGroups
    inequalities: tuple[EdgeInequality, ...] = ()
    message: str = ""


def check_nonpositive(g: GraphOfGroups) -> NonPositivityCertificate:
    """Decide whether the characteristic is <= 0 and certify it edge by edge.

    After collapsing trivial edges, a non-compact fundamental group has every
    non-loop edge with both indices >= 2, hence mu_e >= mu_t + mu_o.
    """
    measure = euler_graph_of_groups(g).measure
    reduced = collapse_trivial_edges(g)
    if not reduced.edges:
        return NonPositivityCertificate(
            nonpositive=measure.coefficient <= 0,
            compact=True,
            measure=measure,
            reduced=reduced,
            message="compact case, proposition inapplicable",
        )
    volumes = unimodularity_report(reduced).volumes
    inequalities = []
    for e in sorted(reduced.edges, key=lambda e: e.name):
        edge_coefficient = 1 / volumes[e.name]
        vertex_coefficient = 1 / volumes[e.terminus] + 1 / volumes[e.origin]
        inequalities.append(
            EdgeInequality(
                edge=e.name,
                edge_coefficient=edge_coefficient,
                vertex_coefficient=vertex_coefficient,
                holds=edge_coefficient >= vertex_coefficient,
            )
        )
    nonpositive = measure.coefficient <= 0
    message = "every edge satisfies mu_e >= mu_t + mu_o" if all(i.holds for i in inequalities) else ""
    return NonPositivityCertificate(
        nonpositive=nonpositive,
        compact=False,
        measure=measure,
        reduced=reduced,
        inequalities=tuple(inequalities),
        message=message,
    )


def euler_from_lattice(chi_gamma, covolume, base: str = "O") -> HaarMeasure:
    """Characteristic of G from a cocompact lattice: chi(Gamma) / covolume * mu_base.

    Raises
    ------
    InvalidInputError
        If the covolume is not positive.
    """
    covolume = Fraction(covolume)
    if covolume <= 0:
        raise InvalidInputError(f"covolume must be positive, got {covolume}")
    return HaarMeasure(Fraction(chi_gamma) / covolume, base)


def euler_chevalley(datum: ChevalleyDatum) -> HaarMeasure:
    """Closed form (-1)^n prod (q^m_i - 1) / (1 + q + ... + q^m_i) in base mu_I."""
    system = CoxeterSystem.finite(datum.family, datum.rank)
    value = Fraction((-1) ** datum.rank)
    for m in classify_finite(system).exponents:
        value *= Fraction(datum.q**m - 1, sum(datum.q**k for k in range(m + 1)))
    return HaarMeasure(value, IWAHORI)


def affine_system(datum: ChevalleyDatum) -> CoxeterSystem:
    """Affine Weyl group of the datum's type, acting on its Bruhat-Tits building."""
    return CoxeterSystem.affine(datum.family, datum.rank)


def euler_building(system: CoxeterSystem, q: int) -> HaarMeasure:
    """Chamber-transitive action on a building of uniform thickness q + 1: (1 / growth(q)) * mu_B.

    Raises
    ------
    PoleError
        If the growth series has a pole at q.
    """
    if q < 2:
        raise InvalidInputError(f"thickness parameter q must be >= 2, got {q}")
    value = ratfunc_eval(growth_series(system), q)
    if value == 0:
        raise InvalidInputError(f"growth series of {system} vanishes at {q}")
    return HaarMeasure(1 / value, CHAMBER)


def parahoric_context(system: CoxeterSystem, q: int, subsets=None) -> SubgroupContext:
    """Indices |P_T : B| = W_T(q) for the given (default: all spherical) subsets."""
    subsets = spherical_subsets(system) if subsets is None else subsets
    declarations = [
        IndexDeclaration(parahoric_id(t), CHAMBER, int(growth_polynomial_finite(system, t)(q)), 1) for t in subsets if t
    ]
    return SubgroupContext(declarations, [CHAMBER])


def davis_orbit_data(system: CoxeterSystem, q: int) -> tuple[OrbitComplexData, SubgroupContext]:
    """Orbit data of the chamber-transitive action on the Davis realization.

    Cells are the chains T_1 ⊊ ... ⊊ T_k+1 of spherical subsets; the chain has
    dimension k and stabilizer P_T_1.
    """
    subsets = spherical_subsets(system)
    chains: list[tuple[frozenset[int], ...]] = [(t,) for t in subsets]
    orbits: dict[int, list[str]] = {}
    dimension = 0
    while chains:
        orbits[dimension] = [parahoric_id(chain[0]) for chain in chains]
        chains = [chain + (t,) for chain in chains for t in subsets if chain[-1] < t]
        dimension += 1
    data = OrbitComplexData(dim=dimension - 1, orbits={k: tuple(v) for k, v in orbits.items()})
    LOG.debug(f"Davis chamber of {system}: {sum(len(v) for v in orbits.values())} cells")
    return data, parahoric_context(system, q, subsets)


def euler_parahoric_sum(system: CoxeterSystem, q: int) -> HaarMeasure:
    """sum over proper J of (-1)^(|S - J| - 1) mu_P_J, in base mu_B.

    Requires every proper subset to be spherical and S itself not.
    """
    generators = frozenset(system.generators)
    subsets = [t for t in spherical_subsets(system) if t != generators]
    if classify_finite(system) is not None or len(subsets) != 2**system.rank - 1:
        raise InvalidInputError(f"{system}: parahoric sum needs every proper subset, and only those, spherical")
    ctx = parahoric_context(system, q, subsets)
    total = HaarMeasure(0, CHAMBER)
    for t in subsets:
        total = total + (-1) ** (system.rank - len(t) - 1) * rebase(HaarMeasure(1, parahoric_id(t)), CHAMBER, ctx)
    return total


def euler_sign_by_rank(n: int) -> Sign:
    """Sign of the characteristic of a Chevalley group of semisimple rank n."""
    return Sign.POSITIVE if n % 2 == 0 else Sign.NEGATIVE


def chamber_context(subgroups=()) -> SubgroupContext:
    """Identify the Iwahori subgroup with the chamber stabilizer."""
    return SubgroupContext([IndexDeclaration(IWAHORI, CHAMBER, 1, 1)], chain(subgroups, [CHAMBER]))
