"""Immutable undirected simple graphs with dense internal ids and label maps."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

log = logging.getLogger(__name__)


class EdgeListParseError(ValueError):
    """A line of edge-list input could not be parsed."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UnknownNodeError(KeyError):
    """A node id or label does not exist in the graph."""


@dataclass(frozen=True)
class EgoNetwork:
    """A focal node together with all of its neighbors.

    ``member_degrees_global`` counts each member's edges in the full graph;
    ``member_degrees_induced`` counts only edges whose both endpoints are
    members.  The induced degree sum is always even (handshake lemma); the
    global sum may be odd because it counts edges leaving the member set.
    """

    focus: int
    members: tuple[int, ...]
    member_degrees_global: dict[int, int]
    member_degrees_induced: dict[int, int]

    @property
    def size(self) -> int:
        return len(self.members)


class Graph:
    """Undirected simple graph, immutable once built.

    Nodes carry external string labels mapped to dense internal ids
    ``0..node_count-1`` in order of first appearance.  Adjacency lists are
    sorted, symmetric, and free of self-loops and duplicates; construction
    raises ``ValueError`` if the input violates these invariants.

    Instances are safe to share across threads.
    """

    __slots__ = ("_adjacency", "_labels", "_ids", "_edge_count")

    def __init__(self, adjacency: Iterable[Iterable[int]], labels: Iterable[str]):
        adj = tuple(tuple(sorted(neighbors)) for neighbors in adjacency)
        labs = tuple(str(label) for label in labels)
        if len(labs) != len(adj):
            raise ValueError("labels and adjacency must have the same length")
        ids = {label: i for i, label in enumerate(labs)}
        if len(ids) != len(labs):
            raise ValueError("duplicate node labels")
        n = len(adj)
        half_edges = 0
        for i, neighbors in enumerate(adj):
            previous = -1
            for j in neighbors:
                if not 0 <= j < n:
                    raise ValueError(f"neighbor id {j} out of range for node {i}")
                if j == i:
                    raise ValueError(f"self-loop at node {i}")
                if j == previous:
                    raise ValueError(f"duplicate edge {i}-{j} in adjacency")
                previous = j
            half_edges += len(neighbors)
        neighbor_sets = [set(neighbors) for neighbors in adj]
        for i, neighbors in enumerate(adj):
            for j in neighbors:
                if i not in neighbor_sets[j]:
                    raise ValueError(f"asymmetric adjacency: {i}->{j} without {j}->{i}")
        self._adjacency = adj
        self._labels = labs
        self._ids = ids
        self._edge_count = half_edges // 2

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[object, object]],
        extra_nodes: Iterable[object] = (),
    ) -> "Graph":
        """Build a graph from (label, label) pairs.

        Duplicate edges collapse silently and self-loops are dropped; use
        :func:`load_edge_list` when those conditions should be reported.
        ``extra_nodes`` adds isolated nodes that appear in no edge.
        """
        labels: list[str] = []
        ids: dict[str, int] = {}

        def intern(token: object) -> int:
            key = str(token)
            if key not in ids:
                ids[key] = len(labels)
                labels.append(key)
            return ids[key]

        pair_set: set[tuple[int, int]] = set()
        for a, b in edges:
            u, v = intern(a), intern(b)
            if u == v:
                continue
            pair_set.add((min(u, v), max(u, v)))
        for token in extra_nodes:
            intern(token)
        adjacency: list[list[int]] = [[] for _ in labels]
        for u, v in pair_set:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(adjacency, labels)

    @property
    def node_count(self) -> int:
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def nodes(self) -> range:
        return range(len(self._adjacency))

    def has_label(self, label: object) -> bool:
        return str(label) in self._ids

    def id_of(self, label: object) -> int:
        try:
            return self._ids[str(label)]
        except KeyError:
            raise UnknownNodeError(f"unknown node label: {label!r}") from None

    def label_of(self, node: int) -> str:
        self._check(node)
        return self._labels[node]

    def degree(self, node: int) -> int:
        self._check(node)
        return len(self._adjacency[node])

    def neighbors(self, node: int) -> tuple[int, ...]:
        self._check(node)
        return self._adjacency[node]

    def degrees(self) -> list[int]:
        return [len(neighbors) for neighbors in self._adjacency]

    def ego_network(self, node: int) -> EgoNetwork:
        """The node plus its neighbors, with both degree views populated."""
        self._check(node)
        members = tuple(sorted((node, *self._adjacency[node])))
        member_set = frozenset(members)
        global_view = {m: len(self._adjacency[m]) for m in members}
        induced_view = {
            m: sum(1 for w in self._adjacency[m] if w in member_set) for m in members
        }
        return EgoNetwork(node, members, global_view, induced_view)

    def connected_component(self, node: int) -> set[int]:
        """All nodes reachable from ``node``."""
        self._check(node)
        seen = {node}
        stack = [node]
        while stack:
            v = stack.pop()
            for w in self._adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def _check(self, node: int) -> None:
        if not 0 <= node < len(self._adjacency):
            raise UnknownNodeError(f"node id {node} out of range")

    def __repr__(self) -> str:
        return f"Graph(node_count={self.node_count}, edge_count={self.edge_count})"


def load_edge_list(source: Iterable[str]) -> Graph:
    """Parse whitespace-separated edge-list text into a :class:`Graph`.

    Each data line holds exactly two tokens (the endpoint labels); blank
    lines and lines starting with ``#`` are skipped.  Duplicate edges are
    collapsed and self-loops dropped, both logged as warnings with their
    line number.  Empty input yields an empty graph.

    Raises :class:`EdgeListParseError` on a line that does not have exactly
    two tokens.
    """
    labels: list[str] = []
    ids: dict[str, int] = {}

    def intern(token: str) -> int:
        if token not in ids:
            ids[token] = len(labels)
            labels.append(token)
        return ids[token]

    pair_set: set[tuple[int, int]] = set()
    for line_number, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                line_number, f"expected 2 tokens, found {len(tokens)}: {line!r}"
            )
        u, v = intern(tokens[0]), intern(tokens[1])
        if u == v:
            log.warning("line %d: dropped self-loop at %r", line_number, tokens[0])
            continue
        pair = (min(u, v), max(u, v))
        if pair in pair_set:
            log.warning(
                "line %d: collapsed duplicate edge %r %r", line_number, tokens[0], tokens[1]
            )
            continue
        pair_set.add(pair)
    adjacency: list[list[int]] = [[] for _ in labels]
    for u, v in pair_set:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(adjacency, labels)
