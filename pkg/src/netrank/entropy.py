"""Ego-network entropy: Shannon entropy of local degree shares.

A node's local entropy is computed over its ego network (the node plus
its neighbors): each member contributes probability mass proportional to
its degree, and the score is the Shannon entropy of that distribution.
Nodes whose neighborhood degrees are spread evenly score high; a hub
dominating its neighborhood scores low relative to its size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .scores import ScoreVector

LOG_BASES = {"e": math.e, "2": 2.0, "10": 10.0}
DEGREE_VIEWS = ("global", "induced")

_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EntropyConfig:
    """Settings for the entropy measure.

    ``log_base`` rescales all scores by one positive constant, so rankings
    are identical across bases.  ``degree_view`` selects whether member
    degrees count all edges in the full graph (default) or only edges
    inside the ego network.  The convention 0*log(0) = 0 is fixed.
    """

    log_base: str = "e"
    degree_view: str = "global"

    def __post_init__(self):
        if self.log_base not in LOG_BASES:
            raise ValueError(f"log_base must be one of {tuple(LOG_BASES)}")
        if self.degree_view not in DEGREE_VIEWS:
            raise ValueError(f"degree_view must be one of {DEGREE_VIEWS}")

    def as_mode(self) -> dict[str, str]:
        return {"log_base": self.log_base, "degree_view": self.degree_view}


def shannon_entropy(p: Sequence[float], log_base: str = "e") -> float:
    """-sum(p * log p) in the given base; zero entries contribute nothing.

    Entries must be nonnegative and sum to 1 within 1e-9, else ValueError.
    Terms are added in sorted order so permutations of ``p`` give
    bit-identical results.
    """
    total = 0.0
    for value in p:
        if value < 0.0:
            raise ValueError(f"negative probability: {value!r}")
        total += value
    if abs(total - 1.0) > _SUM_TOLERANCE:
        raise ValueError(f"probabilities sum to {total!r}, not 1")
    nats = -sum(value * math.log(value) for value in sorted(p, reverse=True) if value > 0.0)
    return nats / math.log(LOG_BASES[log_base])


def local_structure_entropy(g: Graph, node: int, cfg: EntropyConfig = EntropyConfig()) -> float:
    """Entropy of the degree-share distribution over the node's ego network.

    Member degrees are taken per ``cfg.degree_view`` and normalized by their
    sum.  An isolated node has no distribution and scores 0 by convention.
    """
    ego = g.ego_network(node)
    if cfg.degree_view == "global":
        degrees = ego.member_degrees_global
    else:
        degrees = ego.member_degrees_induced
    total = sum(degrees.values())
    if total == 0:
        return 0.0
    shares = [degrees[m] / total for m in ego.members]
    return shannon_entropy(shares, cfg.log_base)


def lse_all(g: Graph, cfg: EntropyConfig = EntropyConfig()) -> ScoreVector:
    """Local entropy score for every node.

    Per-node computations are independent reads of the graph and could be
    parallelized without changing results.
    """
    values = tuple(local_structure_entropy(g, v, cfg) for v in g.nodes())
    return ScoreVector("lse", cfg.as_mode(), g.labels, values)
