"""Bypassing passive runs: passive distances, the transformed automaton and the f/g morphisms."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import networkx as nx

from pwpath.automaton.pda import InputSymbol, Pda, PdaState, TransitionKind, Word
from pwpath.network.models import Protocol

logger = logging.getLogger(__name__)

INFINITY = math.inf


def passive_distances(pda: Pda, protocol: Protocol) -> dict[tuple[PdaState, PdaState], int | float]:
    """All-pairs shortest passive-run lengths inside the sub-automaton induced by Q_x.

    Unreachable pairs map to ``math.inf``; every state is at distance 0 from itself.
    """
    members = pda.states_for(protocol)
    member_set = set(members)
    graph = nx.DiGraph()
    graph.add_nodes_from(members)
    for t in pda.ordered_transitions:
        if t.source in member_set and t.target in member_set and t.kind is TransitionKind.PASSIVE:
            graph.add_edge(t.source, t.target)

    distances = nx.floyd_warshall(graph)
    return {
        (u, v): INFINITY if math.isinf(distances[u][v]) else int(distances[u][v])
        for u in members
        for v in members
    }


def transform_pda(pda: Pda) -> Pda:
    """Add indexed transitions that jump over runs of passive transitions.

    For every pair ``U_x, V_x`` at finite passive distance ``d``, each transition leaving
    ``V_x`` (except towards ``U_x``) is copied onto ``U_x`` with its input indexed by
    ``d + 1``. Nothing is removed, so the original automaton is a sub-automaton.
    """
    sigma = set(pda.input_alphabet)
    delta = set(pda.transitions)

    for x in pda.protocols:
        distances = passive_distances(pda, x)
        for (u, v), d in distances.items():
            if math.isinf(d):
                continue
            index = d + 1
            sigma.add(InputSymbol(x, False, index))
            sigma.add(InputSymbol(x, True, index))
            for t in pda.outgoing(v):
                if t.target == u or t.symbol is None or t.symbol.index != 1:
                    continue
                delta.add(t.with_symbol(u, t.symbol.with_index(index)))

    transformed = Pda(
        states=pda.states,
        input_alphabet=frozenset(sigma),
        stack_alphabet=pda.stack_alphabet,
        transitions=frozenset(delta),
        start=pda.start,
        bottom=pda.bottom,
        final=pda.final,
    )
    logger.debug(
        "transformed PDA: %d transitions (+%d), %d input symbols",
        len(transformed.transitions),
        len(transformed.transitions) - len(pda.transitions),
        len(transformed.input_alphabet),
    )
    return transformed


def expand_f(word: Sequence[InputSymbol]) -> Word:
    """``x_i`` becomes i copies of x; ``x̄_i`` becomes i-1 copies of x followed by x̄."""
    expanded: list[InputSymbol] = []
    for symbol in word:
        plain = InputSymbol(symbol.protocol)
        if symbol.barred:
            expanded.extend([plain] * (symbol.index - 1))
            expanded.append(InputSymbol(symbol.protocol, True))
        else:
            expanded.extend([plain] * symbol.index)
    return tuple(expanded)


def compress_g(word: Sequence[InputSymbol]) -> Word:
    """The shortest word over the indexed alphabet whose expansion is ``word``."""
    if any(symbol.index != 1 for symbol in word):
        raise ValueError("compress_g expects a word over the plain alphabet")

    compressed: list[InputSymbol] = []
    i, n = 0, len(word)
    while i < n:
        symbol = word[i]
        if symbol.barred:
            compressed.append(symbol)
            i += 1
            continue
        j = i
        while j < n and word[j] == symbol:
            j += 1
        run = j - i
        if j < n and word[j].barred and word[j].protocol == symbol.protocol:
            compressed.append(InputSymbol(symbol.protocol, True, run + 1))
            i = j + 1
        else:
            compressed.append(InputSymbol(symbol.protocol, False, run))
            i = j
    return tuple(compressed)
