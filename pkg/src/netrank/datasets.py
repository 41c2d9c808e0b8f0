"""Bundled benchmark graphs."""

from __future__ import annotations

from importlib import resources

from .graph import Graph, load_edge_list


def karate_club_path():
    """Filesystem path of the bundled Zachary karate-club edge list."""
    return resources.files("netrank") / "data" / "karate_club.txt"


def karate_club() -> Graph:
    """Zachary's karate-club social network: 34 nodes, 78 edges, labels 1..34."""
    with karate_club_path().open("r", encoding="utf-8") as handle:
        return load_edge_list(handle)
