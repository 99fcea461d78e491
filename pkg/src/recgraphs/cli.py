"""Command-line entry point: ``recgraphs list-programs | build | solve | check``.

Exit codes: 0 success, 1 usage or input error, 2 undecided under the budget
(or a failed check).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Callable, Optional

import click

from .checks import DEFAULT_BUDGET, SUITES, run_suite
from .constructions import (
    TreeSpec,
    cycle_ray_H,
    injection_get,
    ray_triangle_H,
    thm1_graph,
    thm2_graph,
    thm4_graph,
    thm5_graph,
    thm6_graph,
    thm7_G,
    thm9_G,
    thm10_G3,
    thm10_G4,
)
from .errors import BudgetExhausted, RecGraphError
from .graphs import ComputableGraph, FinitePrefix, from_json, prefix, to_dot, to_json
from .registry import manifest, registry_get
from .solvers import (
    chromatic_number,
    component_of,
    has_clique,
    independent_set,
    k_colorable,
    subgraph_embedding,
)

EXIT_OK, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2


class Undecided(click.ClickException):
    exit_code = EXIT_UNDECIDED


def _split(names: Optional[str]) -> list[str]:
    if not names:
        raise click.UsageError("a comma-separated list is required")
    return [n.strip() for n in names.split(",") if n.strip()]


def _need(value, flag: str):
    if value is None:
        raise click.UsageError(f"{flag} is required for this construction")
    return value


BUILDERS: dict[str, Callable[..., ComputableGraph]] = {
    "thm1": lambda a: thm1_graph(registry_get(_need(a["program"], "--program"))),
    "thm2": lambda a: thm2_graph(registry_get(_need(a["program"], "--program"))),
    "thm4": lambda a: thm4_graph(registry_get(_need(a["program"], "--program"))),
    "thm5": lambda a: thm5_graph(injection_get(a["injection"]), _need(a["n"], "--n")),
    "thm6": lambda a: thm6_graph(TreeSpec.named(_need(a["tree"], "--tree"))),
    "thm7-H": lambda a: ray_triangle_H(),
    "thm7-G": lambda a: thm7_G(registry_get(_need(a["program"], "--program"))),
    "thm9-H": lambda a: cycle_ray_H(_need(a["e"], "--e")),
    "thm9-G": lambda a: thm9_G([registry_get(n) for n in _split(a["programs"])]),
    "thm10-3": lambda a: thm10_G3(TreeSpec.named(_need(a["tree"], "--tree"))),
    "thm10-4": lambda a: thm10_G4([TreeSpec.named(n) for n in _split(a["trees"])]),
}


@click.group()
def cli() -> None:
    """Graph constructions over stage-bounded programs, with exact solvers."""


@cli.command("list-programs")
@click.option("--json", "as_json", is_flag=True, help="Emit the manifest as JSON.")
def list_programs_cmd(as_json: bool) -> None:
    """List the canned programs and their ground truth."""
    rows = manifest()
    if as_json:
        click.echo(json.dumps(rows, indent=2))
        return
    width = max(len(r["name"]) for r in rows)
    for r in rows:
        click.echo(f"{r['name']:<{width}}  {r['kind']:<8}  {r['ground_truth']}")


@cli.command()
@click.argument("construction")
@click.option("--program", help="Registry program name.")
@click.option("--programs", help="Comma-separated program names (thm9-G).")
@click.option("--tree", help="Registry tree program name.")
@click.option("--trees", help="Comma-separated tree program names (thm10-4).")
@click.option("--injection", default="doubling", show_default=True)
@click.option("--n", type=int, help="Graph index for thm5.")
@click.option("--e", type=int, help="Cycle parameter for thm9-H.")
@click.option("--count", type=click.IntRange(min=0), default=10, show_default=True)
@click.option("--budget", type=click.IntRange(min=0), default=DEFAULT_BUDGET, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="dot", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--require-decided", is_flag=True, help="Exit 2 if any pair is Pending.")
def build(construction, count, budget, fmt, out, require_decided, **args) -> None:
    """Write the first COUNT vertices of CONSTRUCTION as DOT or JSON."""
    if construction not in BUILDERS:
        raise click.UsageError(
            f"unknown construction {construction!r}; choose from {', '.join(BUILDERS)}"
        )
    graph = BUILDERS[construction](args)
    f = prefix(graph, count, budget)
    text = to_dot(f, graph.name) if fmt == "dot" else to_json(f) + "\n"
    if out:
        out.write_text(text)
    else:
        click.echo(text, nl=False)
    if require_decided and not f.decided:
        raise Undecided(f"{len(f.undecided)} undecided pair(s) at budget {budget}")


def _load(path: Path) -> FinitePrefix:
    try:
        return from_json(path.read_text())
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"cannot read graph {path}: {exc}") from exc


def _emit(witness) -> None:
    click.echo("none" if witness is None else json.dumps(witness))


@cli.command()
@click.argument("task", type=click.Choice(["color", "chrom", "clique", "subiso", "indep", "component"]))
@click.argument("files", nargs=-1, required=True, type=click.Path(path_type=Path))
@click.option("--k", type=int, help="Number of colors (color).")
@click.option("--size", type=int, help="Set size (clique, indep).")
@click.option("--vertex", help="Vertex label (component).")
def solve(task, files, k, size, vertex) -> None:
    """Run a solver on decided JSON graphs (as written by ``build --format json``)."""
    want = 2 if task == "subiso" else 1
    if len(files) != want:
        raise click.UsageError(f"{task} takes {want} graph file(s)")
    graphs = [_load(p) for p in files]
    f = graphs[0]
    if task == "color":
        col = k_colorable(f, _need(k, "--k"))
        _emit(None if col is None else {str(v): c for v, c in col.items()})
    elif task == "chrom":
        click.echo(chromatic_number(f))
    elif task == "clique":
        _emit(has_clique(f, _need(size, "--size")))
    elif task == "indep":
        _emit(independent_set(f, _need(size, "--size")))
    elif task == "component":
        comp = component_of(f, _need(vertex, "--vertex"))
        _emit([v for v in f.vertices if v in comp])
    else:
        emb = subgraph_embedding(graphs[0], graphs[1])
        _emit(None if emb is None else {str(a): str(b) for a, b in emb.items()})


@cli.command()
@click.argument("suite", type=click.Choice(["all", *SUITES]))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit reports as JSON lines.")
def check(suite: str, seed: int, as_json: bool) -> None:
    """Run property suites; exit 0 iff every property passes."""
    reports = run_suite(suite, seed)
    for rep in reports:
        click.echo(rep.to_json() if as_json else rep.to_text())
    if not all(r.passed for r in reports):
        raise Undecided(f"{sum(not r.passed for r in reports)} suite(s) failed")


def main(argv: Optional[list[str]] = None) -> int:
    try:
        cli.main(args=argv, prog_name="recgraphs", standalone_mode=False)
    except Undecided as exc:
        exc.show()
        return EXIT_UNDECIDED
    except click.exceptions.Abort:
        return EXIT_INPUT
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except BudgetExhausted as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_UNDECIDED
    except (RecGraphError, ValueError, KeyError) as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
