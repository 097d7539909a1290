"""Capabilities, transition sequences and the feasibility check of a path."""

from __future__ import annotations

from collections.abc import Iterable

from pwpath.errors import InvalidTransitionError
from pwpath.network.models import (
    AdaptationFunction,
    Capabilities,
    FeasiblePath,
    FunctionKind,
    LinkSymbol,
    Network,
    NetworkPath,
    NodeId,
    TransitionSeq,
)


def capabilities(net: Network, node: NodeId) -> Capabilities:
    """Return ``(In(U), Out(U), Pass(U))`` for ``node``."""
    return net.capabilities(node)


def implied_function(current: LinkSymbol, following: LinkSymbol) -> AdaptationFunction:
    """The function a node applies between an incoming and an outgoing link symbol."""
    a, b = current.protocol, following.protocol
    if not current.barred:
        if a == b:
            return AdaptationFunction.passive(a)
        return AdaptationFunction.encapsulation(a, b)
    if a == b:
        raise InvalidTransitionError(f"{current} cannot be followed by {following}")
    return AdaptationFunction.decapsulation(b, a)


def transition_sequence(net: Network, path: NetworkPath) -> TransitionSeq:
    """The sequence H_C of functions applied by the intermediate nodes of ``path``."""
    if len(path.symbols) != len(path.nodes) - 1:
        raise ValueError(
            f"path has {len(path.nodes)} nodes but {len(path.symbols)} symbols"
        )
    return tuple(
        implied_function(current, following)
        for current, following in zip(path.symbols, path.symbols[1:])
    )


def well_parenthesized(seq: Iterable[AdaptationFunction]) -> TransitionSeq:
    """Drop passive entries, giving M_C."""
    return tuple(f for f in seq if not f.is_passive)


def is_valid_sequence(seq: Iterable[AdaptationFunction]) -> bool:
    """Generalized Dyck membership: every decapsulation closes the latest open encapsulation."""
    stack: list[tuple[str, str]] = []
    for func in seq:
        if func.kind is FunctionKind.ENCAP:
            stack.append((func.a, func.b))
        elif func.kind is FunctionKind.DECAP:
            if not stack or stack.pop() != (func.a, func.b):
                return False
    return not stack


def check_path(net: Network, path: NetworkPath) -> str | None:
    """Return why ``path`` is not feasible in ``net``, or ``None`` when it is."""
    nodes, symbols = path.nodes, path.symbols
    if len(nodes) < 2 or len(symbols) != len(nodes) - 1:
        return "a path needs at least one link and one symbol per link"
    if nodes[0] != net.source:
        return f"path starts at {nodes[0]}, not at the source {net.source}"
    if nodes[-1] != net.destination:
        return f"path ends at {nodes[-1]}, not at the destination {net.destination}"
    for u, v in path.links():
        if not net.has_edge(u, v):
            return f"not a path in the graph: no link ({u},{v})"

    try:
        seq = transition_sequence(net, path)
    except InvalidTransitionError as exc:
        return f"invalid parenthesization: {exc}"
    if not is_valid_sequence(well_parenthesized(seq)):
        return "invalid parenthesization"

    for node, func in zip(nodes[1:-1], seq):
        if func not in net.functions_at(node):
            return f"function {func} not supported at node {node}"

    if symbols[0].protocol not in net.capabilities(net.source).outputs:
        return f"protocol {symbols[0].protocol} cannot leave the source {net.source}"
    for (_, v), symbol in zip(path.links(), symbols):
        if symbol.protocol not in net.capabilities(v).inputs:
            return f"protocol {symbol.protocol} not accepted by node {v}"
    if symbols[-1].barred:
        return "destination cannot decapsulate"
    return None


def is_feasible_path(net: Network, path: NetworkPath) -> bool:
    return check_path(net, path) is None


def count_adaptations(net: Network, path: NetworkPath) -> int:
    return len(well_parenthesized(transition_sequence(net, path)))


def as_feasible(net: Network, path: NetworkPath) -> FeasiblePath:
    """Attach metrics to a path already known to be feasible."""
    return FeasiblePath(
        nodes=path.nodes,
        symbols=path.symbols,
        adaptations=count_adaptations(net, path),
    )
