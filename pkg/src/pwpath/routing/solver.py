"""End-to-end path computation: network -> automaton -> grammar -> shortest word -> path."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from pwpath.automaton.pda import Word, build_pda, format_word, trace_from_word
from pwpath.automaton.transform import expand_f, transform_pda
from pwpath.errors import InvalidTransitionError, NoMatchingPathError
from pwpath.grammar.cfg import pda_to_cfg
from pwpath.grammar.shortest import l_values, shortest_word
from pwpath.network.documents import ResultDocument
from pwpath.network.feasibility import as_feasible, implied_function
from pwpath.network.models import FeasiblePath, Network, NetworkPath, NodeId, Trace

logger = logging.getLogger(__name__)

Chooser = Callable[[Sequence[NodeId]], NodeId]


class Objective(str, Enum):
    HOPS = "hops"
    ADAPTATIONS = "adaptations"


def find_path(net: Network, trace: Trace, choose: Chooser = min) -> FeasiblePath:
    """Map a feasible trace back onto the network.

    A forward sweep builds, for every position of the trace, the nodes that can be
    reached and their admissible predecessors; a backward pass then picks one
    predecessor per layer with ``choose`` (smallest node-id by default).
    """
    source, destination = net.source, net.destination
    layers: list[dict[NodeId, list[NodeId]]] = [{source: []}]

    for i, symbol in enumerate(trace):
        layer: dict[NodeId, list[NodeId]] = {}
        for u in sorted(layers[-1]):
            if i == 0:
                if symbol.protocol not in net.capabilities(u).outputs:
                    continue
            else:
                try:
                    func = implied_function(trace[i - 1], symbol)
                except InvalidTransitionError:
                    continue
                if func not in net.functions_at(u):
                    continue
            for v in net.successors(u):
                if v == source or symbol.protocol not in net.capabilities(v).inputs:
                    continue
                layer.setdefault(v, []).append(u)
        if not layer:
            break
        layers.append(layer)

    if len(layers) != len(trace) + 1 or destination not in layers[-1]:
        raise NoMatchingPathError(
            f"trace {format_word(trace)} does not lead from {source} to {destination}"
        )

    nodes = [destination]
    for layer in reversed(layers[1:]):
        nodes.append(choose(sorted(layer[nodes[-1]])))
    path = NetworkPath(nodes=tuple(reversed(nodes)), symbols=tuple(trace))
    return as_feasible(net, path)


@dataclass(frozen=True)
class PathResult:
    objective: Objective
    path: FeasiblePath
    word: Word
    trace: Trace
    hops: int
    adaptations: int
    stats: dict[str, float] = field(default_factory=dict, compare=False)

    def to_document(self) -> ResultDocument:
        return ResultDocument(
            objective=self.objective.value,
            word=format_word(self.word),
            trace=format_word(self.trace),
            path=self.path.to_alternating(),
            hops=self.hops,
            adaptations=self.adaptations,
        )


@dataclass
class PipelineRun:
    """Sizes and per-stage wall times of one pipeline run, with its result if any."""

    objective: Objective
    result: PathResult | None = None
    states: int = 0
    transitions: int = 0
    input_symbols: int = 0
    nonterminals: int = 0
    productions: int = 0
    sweeps: int = 0
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.result is not None

    def stats(self) -> dict[str, float]:
        return {
            "states": self.states,
            "transitions": self.transitions,
            "input_symbols": self.input_symbols,
            "nonterminals": self.nonterminals,
            "productions": self.productions,
            "sweeps": self.sweeps,
            **{f"seconds_{stage}": seconds for stage, seconds in self.timings.items()},
        }


class _Stopwatch:
    def __init__(self, timings: dict[str, float]):
        self.timings = timings
        self.last = time.perf_counter()

    def lap(self, stage: str) -> None:
        now = time.perf_counter()
        self.timings[stage] = now - self.last
        self.last = now


def run_pipeline(net: Network, objective: Objective = Objective.HOPS) -> PipelineRun:
    run = PipelineRun(objective=objective)
    watch = _Stopwatch(run.timings)

    pda = build_pda(net)
    watch.lap("build")
    run.states = len(pda.states)
    if objective is Objective.ADAPTATIONS:
        pda = transform_pda(pda)
        watch.lap("transform")
    run.transitions = len(pda.transitions)
    run.input_symbols = len(pda.input_alphabet)

    cfg = pda_to_cfg(pda)
    watch.lap("cfg")
    run.nonterminals = len(cfg.nonterminals)
    run.productions = len(cfg.productions)

    lv = l_values(cfg)
    watch.lap("lvalues")
    run.sweeps = lv.sweeps

    shortest = shortest_word(cfg, lv)
    watch.lap("word")
    if shortest is None:
        logger.debug("no feasible path from %s to %s", net.source, net.destination)
        return run

    word = shortest.word
    trace = trace_from_word(expand_f(word))
    path = find_path(net, trace)
    watch.lap("path")

    run.result = PathResult(
        objective=objective,
        path=path,
        word=word,
        trace=trace,
        hops=path.hops,
        adaptations=path.adaptations,
        stats=run.stats(),
    )
    logger.debug("%s optimum: %s (hops=%d, adaptations=%d)", objective.value, path, path.hops, path.adaptations)
    return run


def solve(net: Network, objective: Objective = Objective.HOPS) -> PathResult | None:
    """Return an optimal feasible path for ``objective``, or None when none exists."""
    return run_pipeline(net, objective).result
