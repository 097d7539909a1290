"""Shortest-derivation lengths and the shortest word of a grammar."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from pwpath.automaton.pda import InputSymbol, Word
from pwpath.grammar.cfg import Cfg, GrammarSymbol, Nonterminal, Production

logger = logging.getLogger(__name__)

INFINITY = math.inf


@dataclass(frozen=True)
class LValueMap:
    """ℓ: nonterminal -> length of its shortest terminal word (``math.inf`` if none)."""

    values: Mapping[Nonterminal, int | float]
    sweeps: int = 0

    def __getitem__(self, nonterminal: Nonterminal) -> int | float:
        return self.values.get(nonterminal, INFINITY)

    def length(self, symbols: Iterable[GrammarSymbol]) -> int | float:
        """ℓ of a sentential form; terminals count 1."""
        total: int | float = 0
        for symbol in symbols:
            total += self[symbol] if isinstance(symbol, Nonterminal) else 1
        return total


def l_values(cfg: Cfg) -> LValueMap:
    """Relax ``ℓ(lhs) <- min(ℓ(lhs), ℓ(rhs))`` over all productions until nothing changes."""
    index = {nt: i for i, nt in enumerate(cfg.nonterminals)}
    compiled = []
    for production in cfg.productions:
        terminals = 0
        body = []
        for symbol in production.rhs:
            if isinstance(symbol, Nonterminal):
                body.append(index[symbol])
            else:
                terminals += 1
        compiled.append((index[production.lhs], terminals, tuple(body)))

    values: list[int | float] = [INFINITY] * len(index)
    sweeps = 0
    while True:
        changed = False
        for lhs, total, body in compiled:
            for j in body:
                total += values[j]
            if total < values[lhs]:
                values[lhs] = total
                changed = True
        if not changed:
            break
        sweeps += 1

    logger.debug("l-values: %d nonterminals, %d sweeps", len(index), sweeps)
    return LValueMap({nt: values[i] for nt, i in index.items()}, sweeps)


@dataclass(frozen=True)
class ShortestWord:
    word: Word
    steps: int


def _best_production(cfg: Cfg, lv: LValueMap, nonterminal: Nonterminal) -> Production:
    target = lv[nonterminal]
    for production in cfg.productions_for(nonterminal):
        if lv.length(production.rhs) == target:
            return production
    raise ValueError(f"no production of {nonterminal} reaches its l-value {target}")


def shortest_word(cfg: Cfg, lv: LValueMap) -> ShortestWord | None:
    """Expand the axiom leftmost-first along argmin-ℓ productions.

    Returns None when the axiom derives no word. Ties go to the first production in
    insertion order.
    """
    if math.isinf(lv[cfg.axiom]):
        return None

    word: list[InputSymbol] = []
    steps = 0
    pending: list[GrammarSymbol] = [cfg.axiom]
    while pending:
        symbol = pending.pop()
        if not isinstance(symbol, Nonterminal):
            word.append(symbol)
            continue
        production = _best_production(cfg, lv, symbol)
        steps += 1
        pending.extend(reversed(production.rhs))

    logger.debug("shortest word of length %d in %d steps", len(word), steps)
    return ShortestWord(tuple(word), steps)
