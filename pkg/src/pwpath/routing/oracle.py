"""Brute-force reference solver over (node, protocol, stack) configurations.

Small instances only. Each configuration records the node reached, the protocol it
received and the stack of encapsulated protocols (top last). Moves follow the
adaptation functions of the current node; the search is a 0-1 BFS so both objectives
share the same loop.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import TypeAlias

import networkx as nx

from pwpath.config import ORACLE_MAX_CONFIGURATIONS, ORACLE_STACK_BOUND_FACTOR
from pwpath.errors import BoundExceededError
from pwpath.network.feasibility import as_feasible
from pwpath.network.models import (
    FeasiblePath,
    FunctionKind,
    LinkSymbol,
    Network,
    NetworkPath,
    NodeId,
    Protocol,
)
from pwpath.routing.solver import Objective

logger = logging.getLogger(__name__)

Configuration: TypeAlias = tuple[NodeId, Protocol | None, tuple[Protocol, ...]]


@dataclass(frozen=True)
class OracleResult:
    cost: int
    path: FeasiblePath
    explored: int


def default_stack_bound(net: Network) -> int:
    return ORACLE_STACK_BOUND_FACTOR * len(net.nodes) * len(net.alphabet)


def _unreachable(net: Network) -> bool:
    if not net.capabilities(net.source).outputs:
        return True
    if not net.capabilities(net.destination).inputs:
        return True
    return not nx.has_path(net.graph, net.source, net.destination)


def _moves(net: Network, config: Configuration, stack_bound: int):
    """Yield ``(next configuration, is_adaptation, exceeds_bound)`` for every move."""
    node, current, stack = config
    if node == net.source and current is None:
        for v in net.successors(node):
            if v == net.source:
                continue
            for x in sorted(net.capabilities(node).outputs & net.capabilities(v).inputs):
                yield (v, x, stack), False, False
        return

    top = stack[-1] if stack else None
    for func in sorted(net.functions_at(node)):
        if func.consumes != current:
            continue
        if func.kind is FunctionKind.DECAP:
            if top != func.a:
                continue
            nxt_protocol, nxt_stack = func.a, stack[:-1]
        elif top == current:
            continue
        elif func.kind is FunctionKind.ENCAP:
            nxt_protocol, nxt_stack = func.b, stack + (func.a,)
        else:
            nxt_protocol, nxt_stack = current, stack
        exceeds = len(nxt_stack) > stack_bound
        for v in net.successors(node):
            if v == net.source or nxt_protocol not in net.capabilities(v).inputs:
                continue
            yield (v, nxt_protocol, nxt_stack), not func.is_passive, exceeds


def _witness(
    net: Network,
    goal: Configuration,
    parents: dict[Configuration, Configuration | None],
) -> FeasiblePath:
    chain = [goal]
    while (parent := parents[chain[-1]]) is not None:
        chain.append(parent)
    chain.reverse()

    nodes = tuple(node for node, _, _ in chain)
    symbols = []
    for i, (_, current, stack) in enumerate(chain[1:], start=1):
        # the receiving node decapsulates iff the next move pops
        barred = i + 1 < len(chain) and len(chain[i + 1][2]) < len(stack)
        symbols.append(LinkSymbol(current, barred))
    return as_feasible(net, NetworkPath(nodes=nodes, symbols=tuple(symbols)))


def brute_force(
    net: Network,
    objective: Objective = Objective.HOPS,
    stack_bound: int | None = None,
    max_configurations: int = ORACLE_MAX_CONFIGURATIONS,
) -> OracleResult | None:
    """Exact optimum for ``objective`` among paths whose stack never exceeds ``stack_bound``.

    Returns None when no feasible path exists. Raises ``BoundExceededError`` when the
    search had to skip configurations deeper than the bound (or ran out of its
    configuration budget) without finding a goal, since the answer is then unknown.
    """
    if stack_bound is None:
        stack_bound = default_stack_bound(net)
    if stack_bound < 1:
        raise ValueError(f"stack bound must be >= 1, got {stack_bound}")
    if _unreachable(net):
        return None

    start: Configuration = (net.source, None, ())
    best: dict[Configuration, int] = {start: 0}
    parents: dict[Configuration, Configuration | None] = {start: None}
    queue: deque[tuple[int, Configuration]] = deque([(0, start)])
    truncated = False
    explored = 0

    while queue:
        cost, config = queue.popleft()
        if cost > best[config]:
            continue
        explored += 1
        if explored > max_configurations:
            raise BoundExceededError(
                f"oracle gave up after {max_configurations} configurations", explored=explored
            )

        node, current, stack = config
        if node == net.destination and current is not None and not stack:
            path = _witness(net, config, parents)
            logger.debug("oracle %s optimum %d after %d configurations", objective.value, cost, explored)
            return OracleResult(cost=cost, path=path, explored=explored)

        for nxt, adapts, exceeds in _moves(net, config, stack_bound):
            if exceeds:
                truncated = True
                continue
            weight = 1 if objective is Objective.HOPS or adapts else 0
            nxt_cost = cost + weight
            if nxt_cost >= best.get(nxt, nxt_cost + 1):
                continue
            best[nxt] = nxt_cost
            parents[nxt] = config
            if weight:
                queue.append((nxt_cost, nxt))
            else:
                queue.appendleft((nxt_cost, nxt))

    if truncated:
        raise BoundExceededError(
            f"no goal within stack bound {stack_bound}", explored=explored
        )
    return None
