"""Monte Carlo susceptible-infective spreading on a graph.

One run seeds a single infected node and applies synchronous rounds: in
each round every infected node exposes each susceptible neighbor once,
independently, with the configured infection probability.  Infected nodes
never recover.  A node with k infected neighbors therefore turns with
probability 1 - (1 - beta)**k in that round.  Nodes infected during a
round start transmitting in the next round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

_SEED_MASK = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class SIConfig:
    """Simulation parameters; ``seed_node`` is an internal node id."""

    seed_node: int
    beta: float
    steps: int
    replicates: int
    rng_seed: int = 42

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must be in [0, 1], got {self.beta!r}")
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps!r}")
        if self.replicates < 1:
            raise ValueError(f"replicates must be >= 1, got {self.replicates!r}")


@dataclass(frozen=True)
class SITrajectory:
    """Infected-fraction statistics per round, aggregated over replicates.

    Index t of each tuple is the state after t rounds (t=0 is the seed
    state, exactly 1/node_count).  Standard deviations are population
    deviations over replicates.
    """

    replicates: int
    mean_infected_fraction: tuple[float, ...]
    stddev_infected_fraction: tuple[float, ...]

    @property
    def steps(self) -> int:
        return len(self.mean_infected_fraction) - 1

    def to_csv(self) -> str:
        lines = ["step,mean_infected_fraction,stddev,replicates"]
        for t, (mean, std) in enumerate(
            zip(self.mean_infected_fraction, self.stddev_infected_fraction)
        ):
            lines.append(f"{t},{mean!r},{std!r},{self.replicates}")
        return "\n".join(lines) + "\n"


def replicate_rng(rng_seed: int, replicate: int) -> np.random.Generator:
    """Independent, reproducible stream for one replicate.

    Streams are derived from (rng_seed, replicate index) only, so results
    cannot depend on how replicates are scheduled.
    """
    return np.random.default_rng(
        np.random.SeedSequence((rng_seed & _SEED_MASK, replicate))
    )


def si_step(g: Graph, infected: set[int], beta: float, rng: np.random.Generator) -> set[int]:
    """One synchronous infection round; returns the enlarged infected set.

    Candidates are processed in ascending node order with one uniform draw
    each, so a given stream state always yields the same outcome.
    """
    if not infected:
        raise ValueError("infected set must be nonempty")
    exposure: dict[int, int] = {}
    for v in infected:
        for w in g.neighbors(v):
            if w not in infected:
                exposure[w] = exposure.get(w, 0) + 1
    if not exposure:
        return set(infected)
    candidates = sorted(exposure)
    draws = rng.random(len(candidates))
    result = set(infected)
    for node, draw in zip(candidates, draws):
        if draw < 1.0 - (1.0 - beta) ** exposure[node]:
            result.add(node)
    return result


def run_si(g: Graph, cfg: SIConfig) -> SITrajectory:
    """Run independent replicate chains and aggregate infected fractions.

    Bit-reproducible for a fixed (graph, config): replicate r uses its own
    stream derived from (rng_seed, r), and the aggregation sums integer
    infected counts, so neither replicate scheduling nor summation order
    can perturb the output.
    """
    n = g.node_count
    if not 0 <= cfg.seed_node < n:
        g.label_of(cfg.seed_node)  # raises UnknownNodeError
    count_sums = [0] * (cfg.steps + 1)
    square_sums = [0] * (cfg.steps + 1)
    for replicate in range(cfg.replicates):
        rng = replicate_rng(cfg.rng_seed, replicate)
        infected = {cfg.seed_node}
        count_sums[0] += 1
        square_sums[0] += 1
        for t in range(1, cfg.steps + 1):
            infected = si_step(g, infected, cfg.beta, rng)
            size = len(infected)
            count_sums[t] += size
            square_sums[t] += size * size
    r = cfg.replicates
    means = tuple(s1 / (r * n) for s1 in count_sums)
    stddevs = tuple(
        math.sqrt(max(0, r * s2 - s1 * s1)) / (r * n)
        for s1, s2 in zip(count_sums, square_sums)
    )
    return SITrajectory(r, means, stddevs)
