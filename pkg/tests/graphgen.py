"""Random-graph helpers shared by the test modules."""

from __future__ import annotations

import random

from sw_forge import Graph, from_edge_list


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Random spanning tree plus density-p extra edges: connected by design."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    if p is None:
        p = rng.uniform(0.1, 0.7)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return from_edge_list(n, sorted(edges))


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Erdos-Renyi-style graph; may be disconnected."""
    if p is None:
        p = rng.uniform(0.05, 0.6)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edge_list(n, edges)
