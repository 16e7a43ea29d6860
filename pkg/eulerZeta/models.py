"""Pydantic models for validated inputs and structured command results."""

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .coxeter.classify import finite_diagram
from .exceptions import InvalidInputError


class VertexGroup(BaseModel):
    """Vertex of a graph of profinite groups."""

    model_config = ConfigDict(frozen=True)

    name: str
    order: Optional[int] = Field(None, ge=1, description="Order of the vertex group when finite.")


class EdgeGroup(BaseModel):
    """Geometric edge from ``origin`` to ``terminus`` with its two inclusion indices."""

    model_config = ConfigDict(frozen=True)

    name: str
    origin: str
    terminus: str
    index_terminus: int = Field(ge=1, description="|G_t(e) : G_e|")
    index_origin: int = Field(ge=1, description="|G_o(e) : G_e|")
    order: Optional[int] = Field(None, ge=1, description="Order of the edge group when finite.")

    def is_loop(self) -> bool:
        return self.origin == self.terminus

    def index_at(self, vertex: str) -> int:
        return self.index_origin if vertex == self.origin else self.index_terminus

    def other_end(self, vertex: str) -> str:
        return self.terminus if vertex == self.origin else self.origin


class GraphOfGroups(BaseModel):
    """Finite graph of profinite groups described by inclusion indices."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[VertexGroup, ...]
    edges: tuple[EdgeGroup, ...] = ()

    @model_validator(mode="after")
    def check_graph(self):
        if not self.vertices:
            raise ValueError("a graph of groups needs at least one vertex")
        names = [v.name for v in self.vertices] + [e.name for e in self.edges]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"duplicate names: {duplicates}")
        orders = {v.name: v.order for v in self.vertices}
        for e in self.edges:
            for end in (e.origin, e.terminus):
                if end not in orders:
                    raise ValueError(f"edge {e.name} uses unknown vertex {end}")
            if e.order is None:
                continue
            for end, index in ((e.origin, e.index_origin), (e.terminus, e.index_terminus)):
                if orders[end] is not None and orders[end] != index * e.order:
                    raise ValueError(f"order of {end} is not {index} times the order of edge {e.name}")
        return self

    def vertex(self, name: str) -> VertexGroup:
        return next(v for v in self.vertices if v.name == name)

    def all_finite(self) -> bool:
        return all(v.order is not None for v in self.vertices) and all(e.order is not None for e in self.edges)


class OrbitComplexData(BaseModel):
    """Orbit stabilizers of a proper cocompact action, by cell dimension."""

    model_config = ConfigDict(frozen=True)

    dim: int = Field(ge=0)
    orbits: dict[int, tuple[str, ...]]

    @field_validator("orbits")
    @classmethod
    def check_dimensions(cls, value):
        for k in value:
            if k < 0:
                raise ValueError(f"negative cell dimension {k}")
        return value

    @model_validator(mode="after")
    def check_bounded(self):
        if any(k > self.dim for k in self.orbits):
            raise ValueError(f"orbit above the declared dimension {self.dim}")
        return self

    def stabilizers(self) -> set[str]:
        return {s for stabs in self.orbits.values() for s in stabs}


class ChevalleyDatum(BaseModel):
    """Irreducible finite type, its rank and the residue cardinality q."""

    model_config = ConfigDict(frozen=True)

    family: str = Field(description="Finite type letter.", examples=["A", "B", "G"])
    rank: int = Field(ge=1)
    q: int = Field(ge=2)

    @field_validator("family", mode="before")
    @classmethod
    def upper_family(cls, value: str) -> str:
        return str(value).strip().upper()

    @model_validator(mode="after")
    def check_type(self):
        if self.family == "I":
            raise ValueError("dihedral types I2(m) carry no Chevalley group")
        try:
            finite_diagram(self.family, self.rank)
        except InvalidInputError as e:
            raise ValueError(str(e)) from e
        return self


class Subcommand(str, Enum):
    """Top level commands of the CLI."""

    GROWTH = "growth"
    EULER = "euler"
    ZETA = "zeta"
    HECKE = "hecke"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class CommandRequest(BaseModel):
    """One CLI invocation after flag parsing."""

    command: str = Field(description="Subcommand path, e.g. 'zeta tree'.")
    inputs: dict[str, Any] = Field(default_factory=dict, description="Files and numeric flags, defaults included.")
    output_format: OutputFormat = OutputFormat.TEXT

    @field_validator("command")
    @classmethod
    def known_command(cls, value: str) -> str:
        head = value.split()[0] if value.split() else ""
        if head not in {c.value for c in Subcommand}:
            raise ValueError(f"unknown subcommand {value!r}")
        return value


class IdentityCheck(BaseModel):
    """Outcome of checking one identity."""

    name: str
    anchor: str = Field(description="The formula the check implements.")
    passed: bool
    detail: str = ""


class CommandResult(BaseModel):
    """Stable machine readable output of a command."""

    command: str
    inputs: dict[str, Any]
    result: Any
    identity_checks: list[IdentityCheck] = Field(default_factory=list)
