"""Graph builders shared across test modules."""

from __future__ import annotations

import random

from netrank import Graph


def complete_graph(n: int) -> Graph:
    """K_n with labels 1..n."""
    return Graph.from_edges(
        [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)],
        extra_nodes=range(1, n + 1),
    )


def path_graph(n: int) -> Graph:
    """Path 1-2-...-n."""
    return Graph.from_edges([(i, i + 1) for i in range(1, n)], extra_nodes=[1])


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Graph.from_edges(edges)


def star_graph(leaves: int) -> Graph:
    """Center labeled 0 joined to leaves 1..leaves."""
    return Graph.from_edges([(0, i) for i in range(1, leaves + 1)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi style graph with labels 1..n (isolated nodes kept)."""
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.from_edges(edges, extra_nodes=range(1, n + 1))


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform-attachment random tree with labels 1..n."""
    edges = [(rng.randint(1, i - 1), i) for i in range(2, n + 1)]
    return Graph.from_edges(edges, extra_nodes=[1])


def random_connected_graph(n: int, extra_edges: int, rng: random.Random) -> Graph:
    """Random tree plus extra random chords."""
    edges = {(rng.randint(1, i - 1), i) for i in range(2, n + 1)}
    attempts = 0
    while extra_edges > 0 and attempts < 50 * extra_edges:
        attempts += 1
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u == v:
            continue
        pair = (min(u, v), max(u, v))
        if pair not in edges:
            edges.add(pair)
            extra_edges -= 1
    return Graph.from_edges(sorted(edges), extra_nodes=[1])


def random_graph_with_edge_count(n: int, m: int, rng: random.Random) -> Graph:
    """Exactly m distinct edges among n nodes labeled 1..n."""
    edges: set[tuple[int, int]] = set()
    while len(edges) < m:
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(sorted(edges), extra_nodes=range(1, n + 1))


def bridged_clusters_graph() -> Graph:
    """Two 4-cliques joined only through node 1 (a degree-2 cut vertex)."""
    a = ["a1", "a2", "a3", "a4"]
    b = ["b1", "b2", "b3", "b4"]
    edges = [(x, y) for i, x in enumerate(a) for y in a[i + 1 :]]
    edges += [(x, y) for i, x in enumerate(b) for y in b[i + 1 :]]
    edges += [("1", "a1"), ("1", "b1")]
    return Graph.from_edges(edges)


def degree_mix_ego_graph() -> Graph:
    """Hub 8 with neighbors 7,9,10,11,12,13 and outside spurs.

    Global member degrees of node 8's ego network are
    {7:2, 13:2, 9:4, 11:1, 10:3, 12:1, 8:6}, summing to 19 (odd, because
    three edges leave the member set).
    """
    edges = [
        (8, 7), (8, 13), (8, 9), (8, 11), (8, 10), (8, 12),
        (9, 7), (9, 10),
        (9, 20), (10, 21), (13, 22),
    ]
    return Graph.from_edges(edges)


def degree_classes_graph() -> Graph:
    """Eight nodes whose degrees split into classes {2,8,6}:1 {1,5,4}:2 {7}:3 {3}:4."""
    edges = [(3, 2), (3, 8), (3, 6), (3, 7), (7, 1), (7, 5), (1, 4), (5, 4)]
    return Graph.from_edges(edges)
