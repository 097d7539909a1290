"""Test-only helpers: reference grammar algorithms and random instance builders."""

import itertools
import random
from collections import deque

from pwpath.automaton.pda import FINAL, InputSymbol, PdaState, StackSymbol, Z0
from pwpath.config import GEN_PASSIVE_FLOOR
from pwpath.errors import BoundExceededError
from pwpath.grammar.cfg import AXIOM_SYMBOL, Cfg, Nonterminal, Production
from pwpath.network.generator import GenSpec, generate
from pwpath.routing.oracle import brute_force, default_stack_bound


def random_network(
    seed,
    max_nodes=8,
    max_protocols=3,
    edge_probability=0.3,
    function_density=0.25,
    passive_floor=GEN_PASSIVE_FLOOR,
):
    rng = random.Random(seed)
    spec = GenSpec(
        node_count=rng.randint(3, max_nodes),
        protocol_count=rng.randint(1, max_protocols),
        edge_probability=edge_probability,
        function_density=function_density,
        passive_floor=passive_floor,
        seed=rng.getrandbits(32),
    )
    return generate(spec)


def st(name):
    """``"U_a"`` -> the automaton state of node U with protocol a."""
    node, protocol = name.split("_")
    return PdaState.at(node, protocol)


def sym(protocol, barred=False, index=1):
    return InputSymbol(protocol, barred, index)


def stack(*protocols):
    return tuple(Z0 if p is None else StackSymbol(p) for p in protocols)


def word(text):
    """``"a b ~b a"`` -> word of plain symbols."""
    return tuple(sym(s.lstrip("~"), s.startswith("~")) for s in text.split())


def oracle_optimum(net, objective, attempts=3):
    """Brute-force optimum, doubling the stack bound while the search is truncated.

    Returns ``(result, conclusive)``.
    """
    bound = default_stack_bound(net)
    for _ in range(attempts):
        try:
            return brute_force(net, objective, stack_bound=bound), True
        except BoundExceededError:
            bound *= 2
    return None, False


# ── Words ────────────────────────────────────────────────────────


def random_plain_word(rng, protocols, max_length=30):
    return tuple(
        InputSymbol(rng.choice(protocols), rng.random() < 0.3) for _ in range(rng.randint(0, max_length))
    )


def random_indexed_word(rng, protocols, max_length=30, max_index=4):
    return tuple(
        InputSymbol(rng.choice(protocols), rng.random() < 0.3, rng.randint(1, max_index))
        for _ in range(rng.randint(0, max_length))
    )


# ── Grammars ─────────────────────────────────────────────────────

TERMINALS = (InputSymbol("a"), InputSymbol("b"))


def _nonterminal(i):
    if i == 0:
        return AXIOM_SYMBOL
    return Nonterminal(PdaState.at(f"N{i}", "a"), Z0, FINAL)


def random_cfg(seed, max_nonterminals=10):
    """A random grammar without ε-productions and without unit cycles."""
    rng = random.Random(seed)
    count = rng.randint(1, max_nonterminals)
    nonterminals = [_nonterminal(i) for i in range(count)]
    productions = []
    for i, lhs in enumerate(nonterminals):
        for _ in range(rng.randint(1, 3)):
            size = rng.randint(1, 3)
            if size == 1:
                if i + 1 < count and rng.random() < 0.3:
                    rhs = (nonterminals[rng.randrange(i + 1, count)],)
                else:
                    rhs = (rng.choice(TERMINALS),)
            else:
                rhs = (rng.choice(TERMINALS),) + tuple(rng.choice(nonterminals) for _ in range(size - 1))
            productions.append(Production(lhs, rhs))
    productions = list(dict.fromkeys(productions))
    return Cfg(
        nonterminals=tuple(nonterminals),
        terminals=frozenset(TERMINALS),
        axiom=AXIOM_SYMBOL,
        productions=tuple(productions),
    )


def shortest_by_search(cfg, start, max_length=12):
    """Length of the shortest word derived from ``start`` by leftmost sentential-form BFS.

    Without ε-productions no sentential form is longer than the word it derives, so
    forms longer than ``max_length`` can be dropped. Returns None if nothing fits.
    """
    # a form is (terminals emitted so far, remaining symbols)
    first = (0, (start,))
    seen = {first}
    queue = deque([first])
    best = None
    while queue:
        emitted, rest = queue.popleft()
        while rest and not isinstance(rest[0], Nonterminal):
            emitted, rest = emitted + 1, rest[1:]
        if not rest:
            best = emitted if best is None else min(best, emitted)
            continue
        for production in cfg.productions_for(rest[0]):
            form = (emitted, production.rhs + rest[1:])
            if emitted + len(form[1]) > max_length or form in seen:
                continue
            seen.add(form)
            queue.append(form)
    return best


def derives(cfg, word):
    """Chart membership test: does the axiom derive ``word``?"""
    n = len(word)
    if n == 0:
        return False
    chart = {}

    def fits(rhs, i, j):
        if not rhs:
            return i == j
        head, tail = rhs[0], rhs[1:]
        if not isinstance(head, Nonterminal):
            return i < j and word[i] == head and fits(tail, i + 1, j)
        # every remaining symbol needs at least one position
        for k in range(i + 1, j - len(tail) + 1):
            if head in chart.get((i, k), ()) and fits(tail, k, j):
                return True
        return False

    for length in range(1, n + 1):
        for i in range(0, n - length + 1):
            j = i + length
            cell = chart.setdefault((i, j), set())
            changed = True
            while changed:
                changed = False
                for production in cfg.productions:
                    if production.lhs not in cell and fits(production.rhs, i, j):
                        cell.add(production.lhs)
                        changed = True
    return cfg.axiom in chart[(0, n)]


def bounded_languages(cfg, max_length):
    """Every word of length at most ``max_length`` derived from each nonterminal."""
    words = {nt: set() for nt in cfg.nonterminals}
    changed = True
    while changed:
        changed = False
        for production in cfg.productions:
            partial = {()}
            for symbol in production.rhs:
                options = words[symbol] if isinstance(symbol, Nonterminal) else {(symbol,)}
                partial = {p + o for p in partial for o in options if len(p) + len(o) <= max_length}
                if not partial:
                    break
            fresh = partial - words[production.lhs]
            if fresh:
                words[production.lhs] |= fresh
                changed = True
    return {nt: frozenset(found) for nt, found in words.items()}


def bounded_language(cfg, max_length):
    """Every word of length at most ``max_length`` generated by the axiom."""
    return bounded_languages(cfg, max_length)[cfg.axiom]


def all_words(symbols, max_length):
    """Every word over ``symbols`` of length 1 to ``max_length``."""
    return [w for n in range(1, max_length + 1) for w in itertools.product(symbols, repeat=n)]


def has_tunnel(word):
    return any(symbol.barred for symbol in word)
