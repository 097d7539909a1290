"""Shared topology fixtures."""

import json

import pytest

from pwpath.network.documents import parse_network

# S - U - V - W - D: U encapsulates a in b, V forwards b, W decapsulates it again.
EX1 = {
    "protocols": ["a", "b"],
    "nodes": [
        {"id": "S", "functions": [{"kind": "passive", "a": "a"}]},
        {"id": "U", "functions": [{"kind": "encap", "a": "a", "b": "b"}, {"kind": "passive", "a": "a"}]},
        {"id": "V", "functions": [{"kind": "passive", "a": "b"}]},
        {"id": "W", "functions": [{"kind": "encap", "a": "a", "b": "b"}, {"kind": "decap", "a": "a", "b": "b"}]},
        {"id": "D", "functions": [{"kind": "passive", "a": "a"}]},
    ],
    "links": [["S", "U"], ["U", "V"], ["V", "W"], ["W", "D"]],
    "source": "S",
    "destination": "D",
}

EX0 = {
    "protocols": ["a"],
    "nodes": [
        {"id": "S", "functions": [{"kind": "passive", "a": "a"}]},
        {"id": "D", "functions": [{"kind": "passive", "a": "a"}]},
    ],
    "links": [["S", "D"]],
    "source": "S",
    "destination": "D",
}

# The only feasible path crosses X -> Y twice: once tunnelled in b, once as plain a.
LOOP = {
    "protocols": ["a", "b"],
    "nodes": [
        {"id": "S", "functions": [{"kind": "passive", "a": "a"}]},
        {"id": "X", "functions": [{"kind": "encap", "a": "a", "b": "b"}, {"kind": "decap", "a": "a", "b": "b"}]},
        {"id": "Y", "functions": [{"kind": "passive", "a": "b"}, {"kind": "passive", "a": "a"}]},
        {"id": "Z", "functions": [{"kind": "passive", "a": "b"}]},
        {"id": "D", "functions": [{"kind": "passive", "a": "a"}]},
    ],
    "links": [["S", "X"], ["X", "Y"], ["Y", "Z"], ["Z", "X"], ["Y", "D"]],
    "source": "S",
    "destination": "D",
}

DISCONNECTED = {
    "protocols": ["a"],
    "nodes": [
        {"id": "S", "functions": [{"kind": "passive", "a": "a"}]},
        {"id": "U", "functions": [{"kind": "passive", "a": "a"}]},
        {"id": "D", "functions": [{"kind": "passive", "a": "a"}]},
    ],
    "links": [["S", "U"], ["D", "U"]],
    "source": "S",
    "destination": "D",
}

EX1_PATH = ["S", "a", "U", "b", "V", "b̄", "W", "a", "D"]


def _net(doc):
    return parse_network(json.dumps(doc))


@pytest.fixture
def ex0():
    return _net(EX0)


@pytest.fixture
def ex1():
    return _net(EX1)


@pytest.fixture
def loop_net():
    return _net(LOOP)


@pytest.fixture
def mute_destination(ex0):
    """EX0 with the destination's functions removed, so In(D) is empty."""
    return ex0.with_functions("D", [])


@pytest.fixture
def disconnected():
    return _net(DISCONNECTED)


@pytest.fixture
def write_doc(tmp_path):
    """Write a JSON document to a temp file and return its path."""

    def _write(doc, name="topology.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc, ensure_ascii=False), encoding="utf-8")
        return path

    return _write
