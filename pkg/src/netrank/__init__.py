"""Node-influence analytics for undirected networks.

Measures: degree centrality, shortest-path betweenness (two normalization
modes), and an ego-network entropy score.  Rankings can be cross-compared
and evaluated with a seeded Monte Carlo susceptible-infective spreading
simulator.
"""

from .centrality import BETWEENNESS_MODES, EQ1_LITERAL, PAIR_NORMALIZED, betweenness, degree_centrality
from .datasets import karate_club
from .entropy import EntropyConfig, lse_all, local_structure_entropy, shannon_entropy
from .graph import EdgeListParseError, EgoNetwork, Graph, UnknownNodeError, load_edge_list
from .ranking import RankingReport, compare_report, overlap, top_k
from .scores import ScoreVector
from .si import SIConfig, SITrajectory, run_si, si_step

__version__ = "0.1.0"

__all__ = [
    "BETWEENNESS_MODES",
    "EQ1_LITERAL",
    "PAIR_NORMALIZED",
    "EdgeListParseError",
    "EgoNetwork",
    "EntropyConfig",
    "Graph",
    "RankingReport",
    "SIConfig",
    "SITrajectory",
    "ScoreVector",
    "UnknownNodeError",
    "betweenness",
    "compare_report",
    "degree_centrality",
    "karate_club",
    "load_edge_list",
    "local_structure_entropy",
    "lse_all",
    "overlap",
    "run_si",
    "shannon_entropy",
    "si_step",
    "top_k",
    "__version__",
]
