"""Independent reference implementations used to pin expected values.

Everything here deliberately avoids the library's algorithms: betweenness
is computed by enumerating every geodesic of every pair, entropy by
high-precision arbitrary-precision summation, and spreading bounds by
plain BFS.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

import mpmath

from netrank import Graph


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.node_count
    dist[source] = 0
    queue = deque((source,))
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def bfs_ball(g: Graph, source: int, radius: int) -> set[int]:
    """Nodes within graph distance ``radius`` of ``source``."""
    dist = bfs_distances(g, source)
    return {v for v, d in enumerate(dist) if 0 <= d <= radius}


def _all_geodesics(g: Graph, source: int, target: int, dist: list[int]) -> list[list[int]]:
    """Every shortest path from source to target, via backward DFS."""
    paths: list[list[int]] = []

    def extend(v: int, suffix: list[int]) -> None:
        if v == source:
            paths.append([v] + list(reversed(suffix)))
            return
        for w in g.neighbors(v):
            if dist[w] == dist[v] - 1:
                extend(w, suffix + [v])

    extend(target, [])
    return paths


def brute_force_betweenness(g: Graph, mode: str) -> list[float]:
    """Betweenness by full geodesic enumeration; small graphs only."""
    n = g.node_count
    ratio_sum = [0.0] * n
    through_sum = [0.0] * n
    excluded_pair_paths = [0.0] * n
    for s, t in combinations(range(n), 2):
        dist = bfs_distances(g, s)
        if dist[t] < 0:
            continue
        paths = _all_geodesics(g, s, t, dist)
        count = len(paths)
        interior: dict[int, int] = {}
        for path in paths:
            for v in path[1:-1]:
                interior[v] = interior.get(v, 0) + 1
        for i in range(n):
            c = interior.get(i, 0)
            ratio_sum[i] += c / count
            through_sum[i] += c
            if i != s and i != t:
                excluded_pair_paths[i] += count
    if n < 3:
        return [0.0] * n
    if mode == "pair-normalized":
        pairs = (n - 1) * (n - 2) / 2
        return [value / pairs for value in ratio_sum]
    return [
        through / denom if denom > 0 else 0.0
        for through, denom in zip(through_sum, excluded_pair_paths)
    ]


def entropy_nats(counts: list[int]) -> float:
    """-sum(p log p) over counts/total at 50 decimal digits, then float."""
    with mpmath.workdps(50):
        total = mpmath.mpf(sum(counts))
        result = -mpmath.fsum(
            (c / total) * mpmath.log(c / total) for c in counts if c > 0
        )
        return float(result)
