"""Degree and shortest-path betweenness baselines."""

from __future__ import annotations

from collections import deque

from .graph import Graph
from .scores import ScoreVector

PAIR_NORMALIZED = "pair-normalized"
EQ1_LITERAL = "eq1-literal"
BETWEENNESS_MODES = (PAIR_NORMALIZED, EQ1_LITERAL)


def degree_centrality(g: Graph) -> ScoreVector:
    """Score every node by its edge count."""
    return ScoreVector(
        "degree", {}, g.labels, tuple(float(d) for d in g.degrees())
    )


def betweenness(g: Graph, mode: str = PAIR_NORMALIZED) -> ScoreVector:
    """Share of shortest paths passing through each node.

    Both modes sum over unordered endpoint pairs ``s < t`` with
    ``s != i != t``; pairs in different components are excluded.

    ``pair-normalized`` (default): the mean over pairs of the fraction of
    s-t geodesics through i, i.e. ``sum(sigma_st(i)/sigma_st)`` divided by
    ``(n-1)(n-2)/2``.  Matches the common normalized convention and is
    comparable across graphs.

    ``eq1-literal``: the raw geodesic count through i divided by the total
    geodesic count over all pairs avoiding i, i.e.
    ``sum(sigma_st(i)) / sum(sigma_st)``.  Kept as an explicit alternative
    reading of the ratio; 0 when the denominator is empty.

    Runs one BFS plus a reverse dependency accumulation per source,
    O(n*m) for unweighted graphs.  Sources are independent, so the loop
    could be parallelized without changing results.
    """
    if mode not in BETWEENNESS_MODES:
        raise ValueError(f"unknown betweenness mode: {mode!r}")
    n = g.node_count
    meta = {"normalization": mode}
    if n < 3:
        return ScoreVector("betweenness", meta, g.labels, (0.0,) * n)

    adjacency = [g.neighbors(v) for v in g.nodes()]
    dependency_sum = [0.0] * n   # sum over sources of Brandes dependencies
    path_count_sum = [0.0] * n   # sum over sources of sigma_sv * (DAG paths from v)
    reach_paths = [0] * n        # per source s: total geodesics from s

    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1
        order: list[int] = []
        queue = deque((s,))
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v]
            sv = sigma[v]
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sv
                    preds[w].append(v)

        # Reverse pass.  delta accumulates the classical pair-dependency
        # ratios; dag_paths[v] counts geodesic continuations below v, so
        # sigma[v] * dag_paths[v] is the number of s-t geodesics through v.
        delta = [0.0] * n
        dag_paths = [0] * n
        for w in reversed(order):
            sw = sigma[w]
            coefficient = (1.0 + delta[w]) / sw
            extension = 1 + dag_paths[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coefficient
                dag_paths[v] += extension
            if w != s:
                dependency_sum[w] += delta[w]
                path_count_sum[w] += sigma[w] * dag_paths[w]
        reach_paths[s] = sum(sigma[t] for t in order) - 1

    if mode == PAIR_NORMALIZED:
        # dependency_sum counts ordered pairs; the pair count (n-1)(n-2)/2
        # absorbs the halving.
        scale = 1.0 / ((n - 1) * (n - 2))
        values = tuple(d * scale for d in dependency_sum)
    else:
        total_paths = sum(reach_paths) / 2
        values = []
        for i in range(n):
            denominator = total_paths - reach_paths[i]
            values.append(path_count_sum[i] / 2 / denominator if denominator > 0 else 0.0)
        values = tuple(values)
    return ScoreVector("betweenness", meta, g.labels, values)
