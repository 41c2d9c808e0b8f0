"""Top-k rankings per measure and cross-measure overlap reports."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .centrality import PAIR_NORMALIZED, betweenness, degree_centrality
from .entropy import EntropyConfig, lse_all
from .graph import Graph
from .scores import ScoreVector, format_score

MEASURE_ORDER = ("degree", "betweenness", "lse")


def top_k(scores: ScoreVector, k: int) -> list[str]:
    """Labels of the k highest-scoring nodes.

    Sorted by score descending with ties broken by label ascending, so the
    output is deterministic and invariant to storage order.  Returns
    min(k, node_count) labels.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k!r}")
    order = scores.ranked_indices()
    return [scores.labels[i] for i in order[:k]]


def overlap(a: Sequence[str], b: Sequence[str]) -> float:
    """Fraction of shared members between two equal-length rankings."""
    if not a or not b:
        raise ValueError("rankings must be nonempty")
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return len(set(a) & set(b)) / len(a)


@dataclass(frozen=True)
class RankingReport:
    """Top-k lists per measure plus pairwise overlap fractions."""

    k: int
    rankings: dict[str, list[tuple[str, float]]]
    overlaps: dict[tuple[str, str], float]

    def top_labels(self, measure: str) -> list[str]:
        return [label for label, _ in self.rankings[measure]]

    def to_csv(self) -> str:
        """One block of ranked rows per measure, then the overlap block."""
        lines = ["measure,rank,node,score"]
        for measure in MEASURE_ORDER:
            for rank, (label, value) in enumerate(self.rankings[measure], start=1):
                lines.append(f"{measure},{rank},{label},{format_score(value)}")
        lines.append("measure_a,measure_b,k,overlap")
        for (a, b), fraction in self.overlaps.items():
            lines.append(f"{a},{b},{self.k},{format_score(fraction)}")
        return "\n".join(lines) + "\n"


def compare_report(
    g: Graph,
    k: int,
    cfg: EntropyConfig = EntropyConfig(),
    mode: str = PAIR_NORMALIZED,
) -> RankingReport:
    """Rank nodes under all three measures and cross-compare the top-k sets."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k!r}")
    vectors = {
        "degree": degree_centrality(g),
        "betweenness": betweenness(g, mode),
        "lse": lse_all(g, cfg),
    }
    rankings: dict[str, list[tuple[str, float]]] = {}
    for measure, vector in vectors.items():
        order = vector.ranked_indices()[:k]
        rankings[measure] = [(vector.labels[i], vector.scores[i]) for i in order]
    overlaps: dict[tuple[str, str], float] = {}
    if g.node_count > 0:
        for i, a in enumerate(MEASURE_ORDER):
            for b in MEASURE_ORDER[i + 1 :]:
                overlaps[(a, b)] = overlap(
                    [label for label, _ in rankings[a]],
                    [label for label, _ in rankings[b]],
                )
    return RankingReport(k, rankings, overlaps)
