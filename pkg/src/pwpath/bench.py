"""Benchmark sweep: pipeline sizes and stage timings over random instances."""

from __future__ import annotations

import logging
import statistics
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from pwpath.config import (
    BENCH_INSTANCES,
    GEN_EDGE_PROBABILITY,
    GEN_FUNCTION_DENSITY,
    GEN_SEED,
)
from pwpath.network.generator import GenSpec, generate
from pwpath.routing.solver import Objective, run_pipeline

logger = logging.getLogger(__name__)

STAGES = ("build", "transform", "cfg", "lvalues", "word", "path")


@dataclass
class BenchRow:
    nodes: int
    protocols: int
    instances: int
    feasible: int
    max_states: int
    state_bound: int
    max_transitions: int
    max_nonterminals: int
    max_productions: int
    max_sweeps: int
    seconds: dict[str, float] = field(default_factory=dict)

    @property
    def within_bounds(self) -> bool:
        return self.max_states <= self.state_bound and self.max_sweeps <= self.max_nonterminals


def instance_seed(base: int, nodes: int, index: int) -> int:
    return (base + 1000 * nodes + index) % 2**64


def _measure(spec: GenSpec, objective: Objective) -> tuple[bool, dict[str, float]]:
    run = run_pipeline(generate(spec), objective)
    return run.feasible, run.stats()


def run_sweep(
    node_range: Iterable[int],
    protocol_count: int,
    instances: int = BENCH_INSTANCES,
    edge_probability: float = GEN_EDGE_PROBABILITY,
    function_density: float = GEN_FUNCTION_DENSITY,
    seed: int = GEN_SEED,
    objective: Objective = Objective.ADAPTATIONS,
    workers: int = 1,
) -> list[BenchRow]:
    """Solve ``instances`` random networks per node count and aggregate the sizes.

    With ``workers > 1`` the instances run in a process pool; results do not depend on
    the number of workers.
    """
    specs = [
        GenSpec(
            node_count=n,
            protocol_count=protocol_count,
            edge_probability=edge_probability,
            function_density=function_density,
            seed=instance_seed(seed, n, k),
        )
        for n in node_range
        for k in range(instances)
    ]
    objectives = [objective] * len(specs)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            measured = list(pool.map(_measure, specs, objectives))
    else:
        measured = [_measure(spec, obj) for spec, obj in zip(specs, objectives)]

    groups: dict[int, list[tuple[bool, dict[str, float]]]] = {}
    for spec, outcome in zip(specs, measured):
        groups.setdefault(spec.node_count, []).append(outcome)

    rows = []
    for n, outcomes in groups.items():
        stats = [s for _, s in outcomes]
        rows.append(
            BenchRow(
                nodes=n,
                protocols=protocol_count,
                instances=len(outcomes),
                feasible=sum(1 for ok, _ in outcomes if ok),
                max_states=max(int(s["states"]) for s in stats),
                state_bound=2 + (n - 1) * protocol_count,
                max_transitions=max(int(s["transitions"]) for s in stats),
                max_nonterminals=max(int(s["nonterminals"]) for s in stats),
                max_productions=max(int(s["productions"]) for s in stats),
                max_sweeps=max(int(s["sweeps"]) for s in stats),
                seconds={
                    stage: statistics.fmean(s.get(f"seconds_{stage}", 0.0) for s in stats)
                    for stage in STAGES
                },
            )
        )
        logger.debug("bench |V|=%d: %d/%d feasible", n, rows[-1].feasible, len(outcomes))
    return rows
