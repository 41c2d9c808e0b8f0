"""Command-line front end: score, simulate, and compare from edge-list files.

Every run resolves all flags to concrete values and records them in a
manifest (subcommand, input, flags, rng seed, tool version).  With
``--output`` the manifest is embedded as a leading ``#`` comment line of
the file; otherwise the CSV goes to stdout and the manifest to stderr.
Exit codes: 0 on success, 2 on usage or input errors.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import click

from . import __version__
from .centrality import BETWEENNESS_MODES, PAIR_NORMALIZED, betweenness, degree_centrality
from .entropy import DEGREE_VIEWS, LOG_BASES, EntropyConfig, lse_all
from .graph import EdgeListParseError, Graph, UnknownNodeError, load_edge_list
from .ranking import compare_report
from .si import SIConfig, run_si


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to reproduce one CLI invocation."""

    subcommand: str
    input: str
    flags: dict = field(default_factory=dict)
    rng_seed: int | None = None
    version: str = __version__

    def to_json(self) -> str:
        payload = {
            "subcommand": self.subcommand,
            "input": self.input,
            "flags": self.flags,
            "rng_seed": self.rng_seed,
            "version": self.version,
        }
        return json.dumps(payload, sort_keys=True)


def _read_graph(path: Path) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return load_edge_list(handle)
    except EdgeListParseError as error:
        raise click.UsageError(f"{path}: {error}") from error


def _emit(text: str, manifest: RunManifest, output: Path | None) -> None:
    if output is None:
        click.echo(text, nl=False)
        click.echo(f"# manifest: {manifest.to_json()}", err=True)
        return
    try:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(f"# manifest: {manifest.to_json()}\n")
            handle.write(text)
    except OSError as error:
        raise click.UsageError(f"cannot write {output}: {error}") from error


_INPUT_OPTION = click.option(
    "--input",
    "input_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Edge-list file: two whitespace-separated labels per line.",
)
_OUTPUT_OPTION = click.option(
    "--output",
    "output_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write CSV here instead of stdout; the manifest is embedded.",
)


@click.group()
@click.version_option(__version__)
def main():
    """Node-influence measures and spreading experiments on undirected graphs."""


@main.command()
@_INPUT_OPTION
@click.option(
    "--measure",
    required=True,
    type=click.Choice(["degree", "betweenness", "lse"]),
    help="Which score to compute.",
)
@click.option(
    "--betweenness-mode",
    type=click.Choice(BETWEENNESS_MODES),
    default=None,
    help="Normalization for --measure betweenness (default pair-normalized).",
)
@click.option(
    "--log-base",
    type=click.Choice(sorted(LOG_BASES)),
    default=None,
    help="Logarithm base for --measure lse (default e).",
)
@click.option(
    "--degree-view",
    type=click.Choice(DEGREE_VIEWS),
    default=None,
    help="Degree view for --measure lse (default global).",
)
@_OUTPUT_OPTION
def centrality(input_path, measure, betweenness_mode, log_base, degree_view, output_path):
    """Write one score per node as CSV, sorted by score."""
    if measure != "betweenness" and betweenness_mode is not None:
        raise click.UsageError("--betweenness-mode requires --measure betweenness")
    if measure != "lse" and (log_base is not None or degree_view is not None):
        raise click.UsageError("--log-base/--degree-view require --measure lse")
    g = _read_graph(input_path)
    flags = {"measure": measure}
    if measure == "degree":
        vector = degree_centrality(g)
    elif measure == "betweenness":
        mode = betweenness_mode or PAIR_NORMALIZED
        flags["betweenness_mode"] = mode
        vector = betweenness(g, mode)
    else:
        cfg = EntropyConfig(log_base=log_base or "e", degree_view=degree_view or "global")
        flags["log_base"] = cfg.log_base
        flags["degree_view"] = cfg.degree_view
        vector = lse_all(g, cfg)
    manifest = RunManifest("centrality", str(input_path), flags)
    _emit(vector.to_csv(), manifest, output_path)


@main.command()
@_INPUT_OPTION
@click.option("--seed-node", required=True, help="Label of the initially infected node.")
@click.option(
    "--beta",
    type=click.FloatRange(0.0, 1.0),
    default=0.05,
    show_default=True,
    help="Per-contact infection probability.",
)
@click.option(
    "--steps", required=True, type=click.IntRange(min=1), help="Number of synchronous rounds."
)
@click.option(
    "--replicates", required=True, type=click.IntRange(min=1), help="Independent chains to run."
)
@click.option("--rng-seed", type=int, default=42, show_default=True, help="Base RNG seed.")
@_OUTPUT_OPTION
def si(input_path, seed_node, beta, steps, replicates, rng_seed, output_path):
    """Run the spreading simulation and write the mean trajectory as CSV."""
    g = _read_graph(input_path)
    try:
        seed_id = g.id_of(seed_node)
    except UnknownNodeError:
        raise click.UsageError(f"unknown seed node label: {seed_node!r}") from None
    cfg = SIConfig(
        seed_node=seed_id, beta=beta, steps=steps, replicates=replicates, rng_seed=rng_seed
    )
    trajectory = run_si(g, cfg)
    flags = {
        "seed_node": seed_node,
        "beta": beta,
        "steps": steps,
        "replicates": replicates,
    }
    manifest = RunManifest("si", str(input_path), flags, rng_seed=rng_seed)
    _emit(trajectory.to_csv(), manifest, output_path)


@main.command()
@_INPUT_OPTION
@click.option(
    "--k", type=click.IntRange(min=1), default=6, show_default=True, help="Ranking depth."
)
@click.option(
    "--betweenness-mode",
    type=click.Choice(BETWEENNESS_MODES),
    default=PAIR_NORMALIZED,
    show_default=True,
)
@click.option("--log-base", type=click.Choice(sorted(LOG_BASES)), default="e", show_default=True)
@click.option(
    "--degree-view", type=click.Choice(DEGREE_VIEWS), default="global", show_default=True
)
@_OUTPUT_OPTION
def compare(input_path, k, betweenness_mode, log_base, degree_view, output_path):
    """Rank nodes under all measures and report top-k lists plus overlaps."""
    g = _read_graph(input_path)
    cfg = EntropyConfig(log_base=log_base, degree_view=degree_view)
    report = compare_report(g, k, cfg, betweenness_mode)
    flags = {
        "k": k,
        "betweenness_mode": betweenness_mode,
        "log_base": log_base,
        "degree_view": degree_view,
    }
    manifest = RunManifest("compare", str(input_path), flags)
    _emit(report.to_csv(), manifest, output_path)


if __name__ == "__main__":
    sys.exit(main())
