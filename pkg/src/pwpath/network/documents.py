"""JSON documents: topology input, path input and result output."""

from __future__ import annotations

import json
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from pwpath.errors import TopologyError
from pwpath.network.models import AdaptationFunction, FunctionKind, Network, NetworkPath


class FunctionDocument(BaseModel):
    """An adaptation function: ``{"kind": "encap", "a": "x", "b": "y"}``."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["encap", "passive", "decap"]
    a: str
    b: Optional[str] = Field(default=None, description="Carrier (encap) or outer (decap) protocol")

    @model_validator(mode="after")
    def _check_arity(self) -> FunctionDocument:
        if self.kind == "passive" and self.b is not None:
            raise ValueError("a passive function takes a single protocol 'a'")
        if self.kind != "passive" and self.b is None:
            raise ValueError(f"an {self.kind} function needs both 'a' and 'b'")
        return self

    def to_function(self) -> AdaptationFunction:
        kind = FunctionKind(self.kind)
        return AdaptationFunction(kind, self.a, self.a if self.b is None else self.b)

    @classmethod
    def from_function(cls, func: AdaptationFunction) -> FunctionDocument:
        return cls(kind=func.kind.value, a=func.a, b=None if func.is_passive else func.b)


class NodeDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    functions: list[FunctionDocument] = Field(default_factory=list)


class TopologyDocument(BaseModel):
    """The problem instance as written on disk."""

    model_config = ConfigDict(extra="forbid")

    protocols: list[str] = Field(min_length=1)
    nodes: list[NodeDocument]
    links: list[tuple[str, str]] = Field(default_factory=list)
    source: str
    destination: str


class PathDocument(BaseModel):
    """A path to verify; other fields (e.g. from a result document) are ignored."""

    model_config = ConfigDict(extra="ignore")

    path: list[str] = Field(min_length=1)


class ResultDocument(BaseModel):
    """Output of ``pwpath solve``; field order is part of the format."""

    objective: str
    word: str
    trace: str
    path: list[str]
    hops: int
    adaptations: int


def _load(model: type[BaseModel], text: str | bytes, what: str):
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        raise TopologyError(f"invalid {what} document: {exc}") from exc


def parse_network(text: str | bytes) -> Network:
    """Parse and validate a topology document."""
    doc = _load(TopologyDocument, text, "topology")
    return document_to_network(doc)


def document_to_network(doc: TopologyDocument) -> Network:
    functions = {}
    for node in doc.nodes:
        funcs = []
        for entry in node.functions:
            try:
                funcs.append(entry.to_function())
            except ValueError as exc:
                raise TopologyError(f"node {node.id}: {exc}") from exc
        if len(set(funcs)) != len(funcs):
            raise TopologyError(f"node {node.id}: duplicate adaptation function")
        functions[node.id] = frozenset(funcs)

    edges = [tuple(link) for link in doc.links]
    if len(set(edges)) != len(edges):
        raise TopologyError("parallel links are not supported")

    return Network(
        alphabet=tuple(doc.protocols),
        nodes=tuple(node.id for node in doc.nodes),
        edges=frozenset(edges),
        functions=functions,
        source=doc.source,
        destination=doc.destination,
    )


def network_to_document(net: Network) -> TopologyDocument:
    return TopologyDocument(
        protocols=list(net.alphabet),
        nodes=[
            NodeDocument(
                id=node,
                functions=[FunctionDocument.from_function(f) for f in sorted(net.functions_at(node))],
            )
            for node in net.nodes
        ],
        links=sorted(net.edges),
        source=net.source,
        destination=net.destination,
    )


def dump_network(net: Network) -> str:
    """Serialize a network as a deterministic topology document."""
    doc = network_to_document(net).model_dump(exclude_none=True)
    return json.dumps(doc, indent=2, ensure_ascii=False)


def parse_path(text: str | bytes, net: Network) -> NetworkPath:
    doc = _load(PathDocument, text, "path")
    return NetworkPath.from_alternating(doc.path, net.alphabet)
