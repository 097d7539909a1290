"""Text and graphviz renderings of networks and automata."""

from __future__ import annotations

from collections.abc import Iterator

from pwpath.automaton.pda import Pda, PdaState, PdaTransition, StateKind
from pwpath.config import EMPTY_PUSH, EPSILON
from pwpath.network.models import Network


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


def _push_text(t: PdaTransition) -> str:
    return "".join(str(s) for s in t.push) or EMPTY_PUSH


def transition_text(t: PdaTransition) -> str:
    """``(source, symbol, pop, push, target)``, e.g. ``(V_b, b̄₂, a, ∅, D_a)``."""
    symbol = EPSILON if t.symbol is None else str(t.symbol)
    return f"({t.source}, {symbol}, {t.pop}, {_push_text(t)}, {t.target})"


def pda_to_text(pda: Pda) -> str:
    lines = [f"# states ({len(pda.states)})"]
    lines.extend(str(s) for s in pda.ordered_states)
    lines.append(f"# transitions ({len(pda.transitions)})")
    lines.extend(transition_text(t) for t in pda.ordered_transitions)
    return "\n".join(lines)


def _state_shape(state: PdaState) -> str:
    if state.kind is StateKind.FINAL:
        return "doublecircle"
    if state.kind is StateKind.START:
        return "doubleoctagon"
    return "circle"


def iter_pda_dot(pda: Pda) -> Iterator[str]:
    yield "digraph pda {\n"
    yield "  rankdir=LR;\n"
    for state in pda.ordered_states:
        yield f"  {_gvquote(str(state))} [shape={_state_shape(state)}];\n"
    for t in pda.ordered_transitions:
        symbol = EPSILON if t.symbol is None else str(t.symbol)
        label = f"{symbol}, {t.pop}/{_push_text(t)}"
        yield f"  {_gvquote(str(t.source))} -> {_gvquote(str(t.target))} [label={_gvquote(label)}];\n"
    yield "}\n"


def pda_to_dot(pda: Pda) -> str:
    return "".join(iter_pda_dot(pda)).rstrip("\n")


def _functions_text(net: Network, node: str) -> str:
    return " ".join(str(f) for f in sorted(net.functions_at(node))) or "-"


def network_to_text(net: Network) -> str:
    lines = [
        f"protocols: {', '.join(net.alphabet)}",
        f"source: {net.source}",
        f"destination: {net.destination}",
        "nodes:",
    ]
    lines.extend(f"  {node}: {_functions_text(net, node)}" for node in net.nodes)
    lines.append("links:")
    lines.extend(f"  {u} -> {v}" for u, v in sorted(net.edges))
    return "\n".join(lines)


def network_to_dot(net: Network) -> str:
    lines = ["digraph network {", "  rankdir=LR;"]
    for node in net.nodes:
        shape = "doublecircle" if node in (net.source, net.destination) else "box"
        label = f"{node}\\n{_functions_text(net, node)}"
        lines.append(f'  {_gvquote(node)} [shape={shape}, label="{label}"];')
    for u, v in sorted(net.edges):
        lines.append(f"  {_gvquote(u)} -> {_gvquote(v)};")
    lines.append("}")
    return "\n".join(lines)
