"""Network model: protocols, adaptation functions, networks and paths."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import NamedTuple, TypeAlias

import networkx as nx

from pwpath.config import ASCII_BAR, ASCII_INDEX, BAR, IDENTIFIER_PATTERN, SUBSCRIPT_DIGITS
from pwpath.errors import TopologyError

Protocol: TypeAlias = str
NodeId: TypeAlias = str

_IDENTIFIER = re.compile(IDENTIFIER_PATTERN)


def render_symbol(protocol: Protocol, barred: bool = False, index: int = 1) -> str:
    """Render a (possibly barred, possibly indexed) symbol, e.g. ``b̄₂``."""
    text = protocol + (BAR if barred else "")
    if index > 1:
        text += str(index).translate(SUBSCRIPT_DIGITS)
    return text


_SUBSCRIPTS = "₀₁₂₃₄₅₆₇₈₉"
_SUBSCRIPT_TO_ASCII = {ord(sub): str(i) for i, sub in enumerate(_SUBSCRIPTS)}


def _unbar(body: str) -> tuple[str, bool]:
    if body.startswith(ASCII_BAR):
        return body[len(ASCII_BAR):], True
    if body.endswith(BAR):
        return body[: -len(BAR)], True
    return body, False


def split_symbol(text: str, alphabet: Iterable[Protocol]) -> tuple[Protocol, bool, int]:
    """Parse a rendered symbol back into ``(protocol, barred, index)``.

    Accepts the rendered form (``b̄₂``) and the ASCII form (``~b_2``).
    """
    known = set(alphabet)
    body = text.strip()
    index = 1

    stripped = body.rstrip(_SUBSCRIPTS)
    if stripped != body:
        index = int(body[len(stripped):].translate(_SUBSCRIPT_TO_ASCII))
        body = stripped
    else:
        head, sep, tail = body.rpartition(ASCII_INDEX)
        if sep and tail.isdigit() and _unbar(body)[0] not in known and _unbar(head)[0] in known:
            body, index = head, int(tail)

    protocol, barred = _unbar(body)
    if protocol not in known:
        raise TopologyError(f"unknown protocol in symbol {text!r}")
    if index < 1:
        raise TopologyError(f"symbol index must be positive in {text!r}")
    return protocol, barred, index


class FunctionKind(str, Enum):
    ENCAP = "encap"
    PASSIVE = "passive"
    DECAP = "decap"


@dataclass(frozen=True, order=True)
class LinkSymbol:
    """The protocol carried by a link; ``barred`` when the receiving node decapsulates."""

    protocol: Protocol
    barred: bool = False

    def __str__(self) -> str:
        return render_symbol(self.protocol, self.barred)

    @classmethod
    def parse(cls, text: str, alphabet: Iterable[Protocol]) -> LinkSymbol:
        protocol, barred, index = split_symbol(text, alphabet)
        if index != 1:
            raise TopologyError(f"link symbols carry no index: {text!r}")
        return cls(protocol, barred)


Trace: TypeAlias = tuple[LinkSymbol, ...]


@dataclass(frozen=True, order=True)
class AdaptationFunction:
    """An encapsulation ``(a,b)``, a passive crossing ``(a,a)`` or a decapsulation ``(a,b)‾``.

    For a decapsulation ``a`` is the inner protocol and ``b`` the outer one.
    """

    kind: FunctionKind
    a: Protocol
    b: Protocol

    def __post_init__(self) -> None:
        if self.kind is FunctionKind.PASSIVE and self.a != self.b:
            raise ValueError(f"passive function must use a single protocol, got ({self.a},{self.b})")
        if self.kind is not FunctionKind.PASSIVE and self.a == self.b:
            raise ValueError(f"a protocol cannot be {self.kind.value}sulated in itself: {self.a}")

    @classmethod
    def encapsulation(cls, source: Protocol, carrier: Protocol) -> AdaptationFunction:
        return cls(FunctionKind.ENCAP, source, carrier)

    @classmethod
    def passive(cls, protocol: Protocol) -> AdaptationFunction:
        return cls(FunctionKind.PASSIVE, protocol, protocol)

    @classmethod
    def decapsulation(cls, inner: Protocol, outer: Protocol) -> AdaptationFunction:
        return cls(FunctionKind.DECAP, inner, outer)

    @property
    def is_passive(self) -> bool:
        return self.kind is FunctionKind.PASSIVE

    @property
    def consumes(self) -> Protocol:
        """Protocol arriving at the node."""
        return self.b if self.kind is FunctionKind.DECAP else self.a

    @property
    def produces(self) -> Protocol:
        """Protocol leaving the node."""
        return self.a if self.kind is FunctionKind.DECAP else self.b

    def __str__(self) -> str:
        pair = f"({self.a},{self.b})"
        return pair + "‾" if self.kind is FunctionKind.DECAP else pair


TransitionSeq: TypeAlias = tuple[AdaptationFunction, ...]


class Capabilities(NamedTuple):
    inputs: frozenset[Protocol]
    outputs: frozenset[Protocol]
    passive: frozenset[Protocol]


@dataclass(frozen=True, eq=False)
class Network:
    """A directed network with per-node adaptation functions, a source and a destination."""

    alphabet: tuple[Protocol, ...]
    nodes: tuple[NodeId, ...]
    edges: frozenset[tuple[NodeId, NodeId]]
    functions: Mapping[NodeId, frozenset[AdaptationFunction]]
    source: NodeId
    destination: NodeId

    def __post_init__(self) -> None:
        if not self.alphabet:
            raise TopologyError("the protocol alphabet is empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise TopologyError("duplicate protocol in alphabet")
        if len(set(self.nodes)) != len(self.nodes):
            raise TopologyError("duplicate node id")
        for ident in (*self.alphabet, *self.nodes):
            if not _IDENTIFIER.fullmatch(ident):
                raise TopologyError(f"invalid identifier {ident!r}")

        declared = set(self.nodes)
        for end in (self.source, self.destination):
            if end not in declared:
                raise TopologyError(f"unknown node {end!r}")
        if self.source == self.destination:
            raise TopologyError("source and destination must differ")
        for u, v in self.edges:
            if u not in declared or v not in declared:
                raise TopologyError(f"link ({u},{v}) references an unknown node")

        protocols = set(self.alphabet)
        for node, funcs in self.functions.items():
            if node not in declared:
                raise TopologyError(f"functions declared for unknown node {node!r}")
            for func in funcs:
                if func.a not in protocols or func.b not in protocols:
                    raise TopologyError(f"function {func} at {node} uses an unknown protocol")

    @cached_property
    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(sorted(self.edges))
        return graph

    @cached_property
    def _capabilities(self) -> dict[NodeId, Capabilities]:
        table = {}
        for node in self.nodes:
            funcs = self.functions.get(node, frozenset())
            table[node] = Capabilities(
                inputs=frozenset(f.consumes for f in funcs),
                outputs=frozenset(f.produces for f in funcs),
                passive=frozenset(f.a for f in funcs if f.is_passive),
            )
        return table

    def capabilities(self, node: NodeId) -> Capabilities:
        try:
            return self._capabilities[node]
        except KeyError:
            raise TopologyError(f"unknown node {node!r}") from None

    def functions_at(self, node: NodeId) -> frozenset[AdaptationFunction]:
        return self.functions.get(node, frozenset())

    def successors(self, node: NodeId) -> list[NodeId]:
        return sorted(self.graph.successors(node))

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        return (u, v) in self.edges

    def with_functions(self, node: NodeId, funcs: Iterable[AdaptationFunction]) -> Network:
        """Return a copy of the network with the functions of ``node`` replaced."""
        functions = dict(self.functions)
        functions[node] = frozenset(funcs)
        return Network(
            alphabet=self.alphabet,
            nodes=self.nodes,
            edges=self.edges,
            functions=functions,
            source=self.source,
            destination=self.destination,
        )


@dataclass(frozen=True)
class NetworkPath:
    """A node sequence and the symbols carried by each link: ``S,x¹,U₁,…,xⁿ,D``."""

    nodes: tuple[NodeId, ...]
    symbols: Trace = field(default_factory=tuple)

    @classmethod
    def from_alternating(cls, items: Iterable[str], alphabet: Iterable[Protocol]) -> NetworkPath:
        items = list(items)
        if len(items) % 2 == 0:
            raise TopologyError("a path alternates nodes and symbols and ends with a node")
        alphabet = tuple(alphabet)
        return cls(
            nodes=tuple(items[0::2]),
            symbols=tuple(LinkSymbol.parse(s, alphabet) for s in items[1::2]),
        )

    def to_alternating(self) -> list[str]:
        items = [self.nodes[0]] if self.nodes else []
        for symbol, node in zip(self.symbols, self.nodes[1:]):
            items.extend([str(symbol), node])
        return items

    @property
    def hops(self) -> int:
        return len(self.symbols)

    def links(self) -> list[tuple[NodeId, NodeId]]:
        return list(zip(self.nodes, self.nodes[1:]))

    def __str__(self) -> str:
        return ",".join(self.to_alternating())


@dataclass(frozen=True)
class FeasiblePath(NetworkPath):
    """A path that satisfies the feasibility definition, with its cost metrics."""

    adaptations: int = 0
