"""Push-down automaton built from a network.

A state ``U_x`` means "at node U, the current protocol is x". Encapsulations push the
inner protocol, decapsulations pop it, and the single final transition pops ``Z₀``
at the destination, so words are accepted by empty stack and by final state alike.
"""

from __future__ import annotations

import logging
from collections import defaultdict, deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import TypeAlias

from pwpath.config import BOTTOM, FINAL_STATE, START_STATE
from pwpath.network.models import (
    FunctionKind,
    LinkSymbol,
    Network,
    NodeId,
    Protocol,
    Trace,
    render_symbol,
)

logger = logging.getLogger(__name__)


class StateKind(Enum):
    START = 0
    NODE = 1
    FINAL = 2


@dataclass(frozen=True)
class PdaState:
    kind: StateKind
    node: NodeId = ""
    protocol: Protocol = ""

    @classmethod
    def at(cls, node: NodeId, protocol: Protocol) -> PdaState:
        return cls(StateKind.NODE, node, protocol)

    @property
    def sort_key(self) -> tuple[int, str, str]:
        return (self.kind.value, self.node, self.protocol)

    def __str__(self) -> str:
        if self.kind is StateKind.START:
            return START_STATE
        if self.kind is StateKind.FINAL:
            return FINAL_STATE
        return f"{self.node}_{self.protocol}"


START = PdaState(StateKind.START)
FINAL = PdaState(StateKind.FINAL)


@dataclass(frozen=True)
class StackSymbol:
    """A protocol on the stack, or the bottom marker ``Z₀`` when ``protocol`` is None."""

    protocol: Protocol | None = None

    @property
    def sort_key(self) -> tuple[bool, str]:
        return (self.protocol is not None, self.protocol or "")

    def __str__(self) -> str:
        return BOTTOM if self.protocol is None else self.protocol


Z0 = StackSymbol()


@dataclass(frozen=True, order=True)
class InputSymbol:
    """An input character ``x``, ``x̄`` or an indexed ``x_i``/``x̄_i``; index 1 is the plain one."""

    protocol: Protocol
    barred: bool = False
    index: int = 1

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"symbol index must be >= 1, got {self.index}")

    @classmethod
    def of(cls, symbol: LinkSymbol) -> InputSymbol:
        return cls(symbol.protocol, symbol.barred)

    def with_index(self, index: int) -> InputSymbol:
        return InputSymbol(self.protocol, self.barred, index)

    def to_link(self) -> LinkSymbol:
        if self.index != 1:
            raise ValueError(f"{self} is an indexed symbol")
        return LinkSymbol(self.protocol, self.barred)

    @property
    def sort_key(self) -> tuple[str, bool, int]:
        return (self.protocol, self.barred, self.index)

    def __str__(self) -> str:
        return render_symbol(self.protocol, self.barred, self.index)


Word: TypeAlias = tuple[InputSymbol, ...]


def word_from_trace(trace: Trace) -> Word:
    return tuple(InputSymbol.of(s) for s in trace)


def trace_from_word(word: Word) -> Trace:
    return tuple(s.to_link() for s in word)


def format_word(word: Iterable[object]) -> str:
    return " ".join(str(s) for s in word)


class TransitionKind(Enum):
    INITIAL = "initial"
    PASSIVE = "passive"
    PUSH = "push"
    POP = "pop"


@dataclass(frozen=True)
class PdaTransition:
    """``(source, ⟨symbol, pop, push⟩, target)``; ``push[0]`` ends up on top of the stack."""

    source: PdaState
    symbol: InputSymbol | None
    pop: StackSymbol
    push: tuple[StackSymbol, ...]
    target: PdaState

    @property
    def kind(self) -> TransitionKind:
        if self.symbol is None:
            return TransitionKind.INITIAL
        if not self.push:
            return TransitionKind.POP
        if self.push == (self.pop,):
            return TransitionKind.PASSIVE
        return TransitionKind.PUSH

    @property
    def sort_key(self) -> tuple:
        symbol_key = (0,) if self.symbol is None else (1, *self.symbol.sort_key)
        return (
            self.source.sort_key,
            symbol_key,
            self.pop.sort_key,
            tuple(s.sort_key for s in self.push),
            self.target.sort_key,
        )

    def with_symbol(self, source: PdaState, symbol: InputSymbol) -> PdaTransition:
        return PdaTransition(source, symbol, self.pop, self.push, self.target)

    def apply(self, stack: tuple[StackSymbol, ...]) -> tuple[StackSymbol, ...]:
        """Run the stack effect on a stack stored with its top last."""
        return stack[:-1] + tuple(reversed(self.push))


@dataclass(frozen=True, eq=False)
class Pda:
    states: frozenset[PdaState]
    input_alphabet: frozenset[InputSymbol]
    stack_alphabet: frozenset[StackSymbol]
    transitions: frozenset[PdaTransition]
    start: PdaState = START
    bottom: StackSymbol = Z0
    final: PdaState = FINAL

    @cached_property
    def ordered_states(self) -> tuple[PdaState, ...]:
        return tuple(sorted(self.states, key=lambda s: s.sort_key))

    @cached_property
    def ordered_transitions(self) -> tuple[PdaTransition, ...]:
        return tuple(sorted(self.transitions, key=lambda t: t.sort_key))

    @cached_property
    def _outgoing(self) -> dict[PdaState, tuple[PdaTransition, ...]]:
        table: dict[PdaState, list[PdaTransition]] = defaultdict(list)
        for t in self.ordered_transitions:
            table[t.source].append(t)
        return {state: tuple(ts) for state, ts in table.items()}

    @cached_property
    def _moves(self) -> dict[tuple[PdaState, StackSymbol], tuple[PdaTransition, ...]]:
        table: dict[tuple[PdaState, StackSymbol], list[PdaTransition]] = defaultdict(list)
        for t in self.ordered_transitions:
            table[(t.source, t.pop)].append(t)
        return {key: tuple(ts) for key, ts in table.items()}

    def outgoing(self, state: PdaState) -> tuple[PdaTransition, ...]:
        return self._outgoing.get(state, ())

    def moves(self, state: PdaState, top: StackSymbol) -> tuple[PdaTransition, ...]:
        return self._moves.get((state, top), ())

    def successors(self, state: PdaState) -> set[PdaState]:
        return {t.target for t in self.outgoing(state)}

    def states_for(self, protocol: Protocol) -> list[PdaState]:
        """Q_x: the node states whose current protocol is ``protocol``."""
        return [s for s in self.ordered_states if s.kind is StateKind.NODE and s.protocol == protocol]

    @property
    def protocols(self) -> list[Protocol]:
        return sorted(s.protocol for s in self.stack_alphabet if s.protocol is not None)


def build_pda(net: Network) -> Pda:
    """Compile a network into a push-down automaton whose language is the set of feasible traces."""
    gamma = frozenset([Z0, *(StackSymbol(p) for p in net.alphabet)])
    sigma = frozenset(InputSymbol(p, barred) for p in net.alphabet for barred in (False, True))
    source, destination = net.source, net.destination

    states = {START, FINAL}
    for node in net.nodes:
        if node == source:
            continue
        states.update(PdaState.at(node, x) for x in net.capabilities(node).inputs)

    transitions: set[PdaTransition] = set()

    out_s = net.capabilities(source).outputs
    for node in net.successors(source):
        if node == source:
            continue
        for x in sorted(out_s & net.capabilities(node).inputs):
            transitions.add(PdaTransition(START, None, Z0, (Z0,), PdaState.at(node, x)))

    for u, v in sorted(net.edges):
        if u == source or v == source:
            continue
        inputs_v = net.capabilities(v).inputs
        for func in sorted(net.functions_at(u)):
            if func.kind is FunctionKind.PASSIVE:
                x = func.a
                if x not in inputs_v:
                    continue
                for alpha in gamma - {StackSymbol(x)}:
                    transitions.add(
                        PdaTransition(PdaState.at(u, x), InputSymbol(x), alpha, (alpha,), PdaState.at(v, x))
                    )
            elif func.kind is FunctionKind.ENCAP:
                x, y = func.a, func.b
                if y not in inputs_v:
                    continue
                for alpha in gamma - {StackSymbol(x)}:
                    transitions.add(
                        PdaTransition(
                            PdaState.at(u, x), InputSymbol(x), alpha, (StackSymbol(x), alpha), PdaState.at(v, y)
                        )
                    )
            else:
                # decapsulation of y from x: the link (u, v) then carries y
                y, x = func.a, func.b
                if y not in inputs_v:
                    continue
                transitions.add(
                    PdaTransition(PdaState.at(u, x), InputSymbol(x, True), StackSymbol(y), (), PdaState.at(v, y))
                )

    for x in sorted(net.capabilities(destination).inputs):
        transitions.add(PdaTransition(PdaState.at(destination, x), InputSymbol(x), Z0, (), FINAL))

    pda = Pda(
        states=frozenset(states),
        input_alphabet=sigma,
        stack_alphabet=gamma,
        transitions=frozenset(transitions),
    )
    logger.debug("built PDA: %d states, %d transitions", len(pda.states), len(pda.transitions))
    return pda


Configuration: TypeAlias = tuple[PdaState, tuple[StackSymbol, ...]]


def _epsilon_closure(pda: Pda, configs: Iterable[Configuration]) -> set[Configuration]:
    seen = set(configs)
    queue = deque(seen)
    while queue:
        state, stack = queue.popleft()
        if not stack:
            continue
        for t in pda.moves(state, stack[-1]):
            if t.symbol is None:
                nxt = (t.target, t.apply(stack))
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def accepts(pda: Pda, word: Sequence[InputSymbol]) -> bool:
    """True if some run reads ``word`` and ends in the final state with an empty stack."""
    configs = _epsilon_closure(pda, [(pda.start, (pda.bottom,))])
    for symbol in word:
        step = set()
        for state, stack in configs:
            if not stack:
                continue
            for t in pda.moves(state, stack[-1]):
                if t.symbol == symbol:
                    step.add((t.target, t.apply(stack)))
        configs = _epsilon_closure(pda, step)
        if not configs:
            return False
    return any(state == pda.final and not stack for state, stack in configs)


def enumerate_words(pda: Pda, max_length: int, expanded: bool = False) -> frozenset[Word]:
    """All accepted words of length at most ``max_length``.

    With ``expanded`` the length of a word is the sum of its indices, i.e. the length of
    its expansion over the plain alphabet.
    """
    accepted: set[Word] = set()
    start = [(state, stack, ()) for state, stack in _epsilon_closure(pda, [(pda.start, (pda.bottom,))])]
    seen = set(start)
    queue = deque((item, 0) for item in start)
    while queue:
        (state, stack, word), weight = queue.popleft()
        if state == pda.final and not stack:
            accepted.add(word)
        if not stack:
            continue
        for t in pda.moves(state, stack[-1]):
            if t.symbol is None:
                cost, nxt_word = 0, word
            else:
                cost = t.symbol.index if expanded else 1
                nxt_word = word + (t.symbol,)
            if weight + cost > max_length:
                continue
            item = (t.target, t.apply(stack), nxt_word)
            if item not in seen:
                seen.add(item)
                queue.append((item, weight + cost))
    return frozenset(accepted)
