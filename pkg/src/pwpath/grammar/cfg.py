"""Context-free grammar of a push-down automaton.

Nonterminals are triples ``[U α V]``: the words that take the automaton from state U to
state V while popping α off the stack. The axiom ``[S_G]`` derives every
``[S_A Z₀ U]``, so the grammar generates exactly the words accepted by empty stack.
"""

from __future__ import annotations

import logging
from collections import defaultdict, deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import TypeAlias

from pwpath.automaton.pda import InputSymbol, Pda, PdaState, StackSymbol, TransitionKind
from pwpath.config import AXIOM

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Nonterminal:
    """``[source stack target]``, or the axiom when all three are None."""

    source: PdaState | None = None
    stack: StackSymbol | None = None
    target: PdaState | None = None

    @property
    def is_axiom(self) -> bool:
        return self.source is None

    def __str__(self) -> str:
        if self.is_axiom:
            return AXIOM
        return f"[{self.source} {self.stack} {self.target}]"


AXIOM_SYMBOL = Nonterminal()

GrammarSymbol: TypeAlias = InputSymbol | Nonterminal


@dataclass(frozen=True)
class Production:
    lhs: Nonterminal
    rhs: tuple[GrammarSymbol, ...]

    def __str__(self) -> str:
        return f"{self.lhs} -> {''.join(str(s) for s in self.rhs)}"


@dataclass(frozen=True, eq=False)
class Cfg:
    nonterminals: tuple[Nonterminal, ...]
    terminals: frozenset[InputSymbol]
    axiom: Nonterminal
    productions: tuple[Production, ...]

    @cached_property
    def _index(self) -> dict[Nonterminal, tuple[Production, ...]]:
        index: dict[Nonterminal, list[Production]] = defaultdict(list)
        for production in self.productions:
            index[production.lhs].append(production)
        return {lhs: tuple(ps) for lhs, ps in index.items()}

    @cached_property
    def nonterminal_set(self) -> frozenset[Nonterminal]:
        return frozenset(self.nonterminals)

    def productions_for(self, nonterminal: Nonterminal) -> tuple[Production, ...]:
        return self._index.get(nonterminal, ())


def _productions(pda: Pda) -> Iterator[Production]:
    states = pda.ordered_states

    for state in states:
        yield Production(AXIOM_SYMBOL, (Nonterminal(pda.start, pda.bottom, state),))

    for t in pda.ordered_transitions:
        kind = t.kind
        if kind is TransitionKind.INITIAL:
            # reads nothing: [S_A Z₀ W] -> [U_x Z₀ W]
            for w in states:
                yield Production(Nonterminal(t.source, t.pop, w), (Nonterminal(t.target, t.pop, w),))
        elif kind is TransitionKind.POP:
            yield Production(Nonterminal(t.source, t.pop, t.target), (t.symbol,))
        elif kind is TransitionKind.PASSIVE:
            for w in states:
                yield Production(Nonterminal(t.source, t.pop, w), (t.symbol, Nonterminal(t.target, t.pop, w)))
        else:
            top, below = t.push
            for w in states:
                for w2 in states:
                    yield Production(
                        Nonterminal(t.source, below, w2),
                        (t.symbol, Nonterminal(t.target, top, w), Nonterminal(w, below, w2)),
                    )


def _reachable(axiom: Nonterminal, productions: Iterable[Production]) -> set[Nonterminal]:
    index: dict[Nonterminal, list[Production]] = defaultdict(list)
    for production in productions:
        index[production.lhs].append(production)
    seen = {axiom}
    queue = deque([axiom])
    while queue:
        for production in index.get(queue.popleft(), ()):
            for symbol in production.rhs:
                if isinstance(symbol, Nonterminal) and symbol not in seen:
                    seen.add(symbol)
                    queue.append(symbol)
    return seen


def pda_to_cfg(pda: Pda, prune: bool = False) -> Cfg:
    """Convert ``pda`` to a grammar generating the words it accepts by empty stack.

    Productions are created in a fixed order (states and transitions sorted), which is
    the tie-break order used by the shortest-word search. With ``prune`` the
    nonterminals unreachable from the axiom are dropped along with their productions.
    """
    productions = list(dict.fromkeys(_productions(pda)))
    if prune:
        keep = _reachable(AXIOM_SYMBOL, productions)
        productions = [p for p in productions if p.lhs in keep]

    nonterminals: dict[Nonterminal, None] = {AXIOM_SYMBOL: None}
    for production in productions:
        nonterminals.setdefault(production.lhs)
        for symbol in production.rhs:
            if isinstance(symbol, Nonterminal):
                nonterminals.setdefault(symbol)

    cfg = Cfg(
        nonterminals=tuple(nonterminals),
        terminals=pda.input_alphabet,
        axiom=AXIOM_SYMBOL,
        productions=tuple(productions),
    )
    logger.debug(
        "grammar: %d nonterminals, %d productions%s",
        len(cfg.nonterminals),
        len(cfg.productions),
        " (pruned)" if prune else "",
    )
    return cfg


def cfg_to_text(cfg: Cfg) -> str:
    """One production per line, in insertion order."""
    return "\n".join(str(p) for p in cfg.productions)
