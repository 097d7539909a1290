"""Seeded random network instances."""

from __future__ import annotations

import random
import string

from pydantic import BaseModel, ConfigDict, Field

from pwpath.config import (
    DESTINATION_NODE,
    GEN_EDGE_PROBABILITY,
    GEN_FUNCTION_DENSITY,
    GEN_NODE_COUNT,
    GEN_PASSIVE_FLOOR,
    GEN_PROTOCOL_COUNT,
    GEN_SEED,
    RELAY_PREFIX,
    SOURCE_NODE,
)
from pwpath.network.models import AdaptationFunction, Network


class GenSpec(BaseModel):
    """Parameters of a random instance; the same spec always yields the same network."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    node_count: int = Field(default=GEN_NODE_COUNT, ge=2)
    protocol_count: int = Field(default=GEN_PROTOCOL_COUNT, ge=1)
    edge_probability: float = Field(default=GEN_EDGE_PROBABILITY, ge=0.0, le=1.0)
    function_density: float = Field(default=GEN_FUNCTION_DENSITY, ge=0.0, le=1.0)
    passive_floor: float = Field(default=GEN_PASSIVE_FLOOR, ge=0.0, le=1.0)
    seed: int = Field(default=GEN_SEED, ge=0, lt=2**64)


def protocol_names(count: int) -> list[str]:
    if count <= len(string.ascii_lowercase):
        return list(string.ascii_lowercase[:count])
    return [f"p{i}" for i in range(count)]


def node_names(count: int) -> list[str]:
    relays = [f"{RELAY_PREFIX}{i}" for i in range(1, count - 1)]
    return [SOURCE_NODE, *relays, DESTINATION_NODE]


def generate(spec: GenSpec) -> Network:
    """Build a random network from ``spec``.

    Links are drawn per ordered pair of distinct nodes. Every passive function is drawn
    with probability ``max(function_density, passive_floor)``, every encapsulation and
    decapsulation pair with probability ``function_density``.
    """
    rng = random.Random(spec.seed)
    protocols = protocol_names(spec.protocol_count)
    nodes = node_names(spec.node_count)

    edges = frozenset(
        (u, v)
        for u in nodes
        for v in nodes
        if u != v and rng.random() < spec.edge_probability
    )

    passive_probability = max(spec.function_density, spec.passive_floor)
    functions = {}
    for node in nodes:
        funcs = set()
        for a in protocols:
            if rng.random() < passive_probability:
                funcs.add(AdaptationFunction.passive(a))
            for b in protocols:
                if a == b:
                    continue
                if rng.random() < spec.function_density:
                    funcs.add(AdaptationFunction.encapsulation(a, b))
                if rng.random() < spec.function_density:
                    funcs.add(AdaptationFunction.decapsulation(a, b))
        functions[node] = frozenset(funcs)

    return Network(
        alphabet=tuple(protocols),
        nodes=tuple(nodes),
        edges=edges,
        functions=functions,
        source=SOURCE_NODE,
        destination=DESTINATION_NODE,
    )
