"""pwpath CLI - optimal paths through multi-protocol networks."""

import logging
from enum import Enum
from pathlib import Path
from typing import Annotated, NoReturn, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from pwpath import __version__
from pwpath.config import (
    BENCH_INSTANCES,
    BENCH_MAX_NODES,
    BENCH_MIN_NODES,
    BENCH_WORKERS,
    GEN_EDGE_PROBABILITY,
    GEN_FUNCTION_DENSITY,
    GEN_NODE_COUNT,
    GEN_PASSIVE_FLOOR,
    GEN_PROTOCOL_COUNT,
    GEN_SEED,
)
from pwpath.errors import BoundExceededError, TopologyError
from pwpath.network.models import Network
from pwpath.routing.solver import Objective

app = typer.Typer(
    name="pwpath",
    help="Compute optimal feasible paths through networks of encapsulating nodes.",
    no_args_is_help=True,
)

console = Console()
err_console = Console(stderr=True)

EXIT_NO_PATH = 1
EXIT_INVALID = 2


class Emit(str, Enum):
    RESULT = "result"
    TRACE = "trace"
    WORD = "word"


class Artifact(str, Enum):
    NETWORK = "network"
    PDA = "pda"
    TPDA = "tpda"
    CFG = "cfg"


class Format(str, Enum):
    TEXT = "text"
    DOT = "dot"


def version_callback(value: bool) -> None:
    if value:
        console.print(f"pwpath {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        Optional[bool],
        typer.Option("--version", "-v", callback=version_callback, is_eager=True),
    ] = None,
    verbose: Annotated[bool, typer.Option("--verbose", "-V", help="Log pipeline sizes to stderr")] = False,
) -> None:
    """pwpath - shortest and least-adapting paths through encapsulating networks."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _fail(message: str, code: int = EXIT_INVALID) -> NoReturn:
    err_console.print(f"[red]Error:[/red] {message}", markup=True, highlight=False)
    raise typer.Exit(code)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot read {path}: {exc.strerror or exc}")
    except UnicodeDecodeError as exc:
        _fail(f"{path} is not valid UTF-8: {exc.reason} at byte {exc.start}")


def _load_network(path: Path) -> Network:
    from pwpath.network.documents import parse_network

    try:
        return parse_network(_read(path))
    except TopologyError as exc:
        _fail(f"{path}: {exc}")


# ── Path computation ─────────────────────────────────────────────


@app.command()
def solve(
    topology: Annotated[Path, typer.Argument(help="Topology document (JSON)")],
    objective: Annotated[
        Objective, typer.Option("--objective", "-o", help="What to minimise")
    ] = Objective.HOPS,
    emit: Annotated[Emit, typer.Option("--emit", "-e", help="What to print")] = Emit.RESULT,
) -> None:
    """Compute an optimal feasible path from the source to the destination."""
    from pwpath.automaton.pda import format_word
    from pwpath.routing.solver import solve as solve_network

    net = _load_network(topology)
    result = solve_network(net, objective)
    if result is None:
        err_console.print(f"[yellow]No feasible path[/yellow] from {net.source} to {net.destination}")
        raise typer.Exit(EXIT_NO_PATH)

    if emit is Emit.TRACE:
        typer.echo(format_word(result.trace))
    elif emit is Emit.WORD:
        typer.echo(format_word(result.word))
    else:
        typer.echo(result.to_document().model_dump_json(indent=2))


@app.command()
def verify(
    topology: Annotated[Path, typer.Argument(help="Topology document (JSON)")],
    path_file: Annotated[Path, typer.Argument(help="Path or result document (JSON)")],
    oracle: Annotated[bool, typer.Option("--oracle", help="Compare with the brute-force optimum")] = False,
    objective: Annotated[
        Objective, typer.Option("--objective", "-o", help="Cost compared with --oracle")
    ] = Objective.HOPS,
) -> None:
    """Check that a path is feasible and, with --oracle, that it is optimal."""
    from pwpath.network.documents import parse_path
    from pwpath.network.feasibility import check_path, count_adaptations
    from pwpath.routing.oracle import brute_force

    net = _load_network(topology)
    try:
        path = parse_path(_read(path_file), net)
    except TopologyError as exc:
        _fail(f"{path_file}: {exc}")

    reason = check_path(net, path)
    if reason is not None:
        typer.echo(f"infeasible: {reason}")
        raise typer.Exit(EXIT_NO_PATH)
    if not oracle:
        typer.echo("feasible")
        return

    cost = path.hops if objective is Objective.HOPS else count_adaptations(net, path)
    try:
        best = brute_force(net, objective)
    except BoundExceededError as exc:
        typer.echo("feasible; oracle inconclusive")
        err_console.print(f"[yellow]{exc}[/yellow]")
        return
    if best is None or cost == best.cost:
        typer.echo("feasible; optimal")
    else:
        typer.echo("feasible; not optimal")
    if best is not None:
        typer.echo(f"oracle {objective.value}: {best.cost} (path {objective.value}: {cost})")


# ── Artifacts ────────────────────────────────────────────────────


@app.command()
def export(
    topology: Annotated[Path, typer.Argument(help="Topology document (JSON)")],
    what: Annotated[Artifact, typer.Option("--what", "-w", help="Artifact to export")] = Artifact.NETWORK,
    fmt: Annotated[Format, typer.Option("--format", "-f", help="Output format")] = Format.TEXT,
) -> None:
    """Print the network, its automaton, the transformed automaton or the grammar."""
    from pwpath.automaton import export as render
    from pwpath.automaton.pda import build_pda
    from pwpath.automaton.transform import transform_pda
    from pwpath.grammar.cfg import cfg_to_text, pda_to_cfg

    if what is Artifact.CFG and fmt is Format.DOT:
        _fail("the grammar has no dot rendering; use --format text")

    net = _load_network(topology)
    if what is Artifact.NETWORK:
        out = render.network_to_dot(net) if fmt is Format.DOT else render.network_to_text(net)
    else:
        pda = build_pda(net)
        # the grammar is the one solved for adaptations, built on the transformed automaton
        if what in (Artifact.TPDA, Artifact.CFG):
            pda = transform_pda(pda)
        if what is Artifact.CFG:
            out = cfg_to_text(pda_to_cfg(pda))
        else:
            out = render.pda_to_dot(pda) if fmt is Format.DOT else render.pda_to_text(pda)
    typer.echo(out)


@app.command()
def gen(
    nodes: Annotated[int, typer.Option("--nodes", "-n", help="Number of nodes, S and D included")] = GEN_NODE_COUNT,
    protocols: Annotated[int, typer.Option("--protocols", "-p", help="Number of protocols")] = GEN_PROTOCOL_COUNT,
    edge_probability: Annotated[
        float, typer.Option("--edge-probability", help="Probability of each directed link")
    ] = GEN_EDGE_PROBABILITY,
    function_density: Annotated[
        float, typer.Option("--function-density", help="Probability of each encap/decap function")
    ] = GEN_FUNCTION_DENSITY,
    passive_floor: Annotated[
        float, typer.Option("--passive-floor", help="Minimum probability of each passive function")
    ] = GEN_PASSIVE_FLOOR,
    seed: Annotated[int, typer.Option("--seed", "-s", help="Random seed")] = GEN_SEED,
) -> None:
    """Print a random topology document; the same flags always give the same output."""
    from pydantic import ValidationError

    from pwpath.network.documents import dump_network
    from pwpath.network.generator import GenSpec, generate

    try:
        spec = GenSpec(
            node_count=nodes,
            protocol_count=protocols,
            edge_probability=edge_probability,
            function_density=function_density,
            passive_floor=passive_floor,
            seed=seed,
        )
    except ValidationError as exc:
        _fail(f"invalid generator settings: {exc.error_count()} error(s)\n{exc}")
    typer.echo(dump_network(generate(spec)))


@app.command()
def bench(
    min_nodes: Annotated[int, typer.Option("--min-nodes", help="Smallest node count")] = BENCH_MIN_NODES,
    max_nodes: Annotated[int, typer.Option("--max-nodes", help="Largest node count")] = BENCH_MAX_NODES,
    protocols: Annotated[int, typer.Option("--protocols", "-p", help="Number of protocols")] = GEN_PROTOCOL_COUNT,
    instances: Annotated[int, typer.Option("--instances", "-i", help="Instances per node count")] = BENCH_INSTANCES,
    edge_probability: Annotated[float, typer.Option("--edge-probability")] = GEN_EDGE_PROBABILITY,
    function_density: Annotated[float, typer.Option("--function-density")] = GEN_FUNCTION_DENSITY,
    seed: Annotated[int, typer.Option("--seed", "-s", help="Base random seed")] = GEN_SEED,
    objective: Annotated[Objective, typer.Option("--objective", "-o")] = Objective.ADAPTATIONS,
    workers: Annotated[int, typer.Option("--workers", help="Worker processes")] = BENCH_WORKERS,
) -> None:
    """Time every pipeline stage over random instances of growing size."""
    from pydantic import ValidationError

    from pwpath.bench import STAGES, run_sweep

    if min_nodes < 2 or max_nodes < min_nodes:
        _fail(f"invalid node range {min_nodes}..{max_nodes}")
    if instances < 1 or workers < 1:
        _fail("--instances and --workers must be at least 1")

    try:
        rows = run_sweep(
            range(min_nodes, max_nodes + 1),
            protocols,
            instances=instances,
            edge_probability=edge_probability,
            function_density=function_density,
            seed=seed,
            objective=objective,
            workers=workers,
        )
    except ValidationError as exc:
        _fail(f"invalid generator settings: {exc.error_count()} error(s)\n{exc}")

    table = Table(title=f"Pipeline sweep ({objective.value}, |A|={protocols})")
    table.add_column("|V|", justify="right", style="cyan")
    table.add_column("feasible", justify="right")
    table.add_column("|Q|", justify="right", style="green")
    table.add_column("|Q| bound", justify="right")
    table.add_column("|δ|", justify="right")
    table.add_column("|N|", justify="right")
    table.add_column("|P|", justify="right")
    table.add_column("sweeps", justify="right")
    for stage in STAGES:
        table.add_column(f"{stage} ms", justify="right", style="dim")

    for row in rows:
        table.add_row(
            str(row.nodes),
            f"{row.feasible}/{row.instances}",
            str(row.max_states),
            str(row.state_bound),
            str(row.max_transitions),
            str(row.max_nonterminals),
            str(row.max_productions),
            str(row.max_sweeps),
            *(f"{row.seconds[stage] * 1000:.2f}" for stage in STAGES),
        )

    console.print(table)
