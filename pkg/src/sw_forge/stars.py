"""Nested-star construction: stars with extra hub vertices.

On vertices 0..n-1, an edge (i, j) with i < j is present iff j is a hub or
j = n-1.  Vertex n-1 is adjacent to everything, so the graph is a star with
extra substars hanging below each hub; each hub a lowers SW_k below the plain
star value by exactly C(a, k-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import BadSpecError
from .graph import Graph


@dataclass(frozen=True)
class NestedStarSpec:
    """Star size n plus strictly increasing hubs with 1 <= a_1, a_r <= n-2."""

    n: int
    hubs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise BadSpecError(f"need n >= 2, got n = {self.n}")
        hubs = tuple(self.hubs)
        object.__setattr__(self, "hubs", hubs)
        if hubs:
            if hubs[0] < 1 or hubs[-1] > self.n - 2:
                raise BadSpecError(f"hubs {hubs} outside 1..{self.n - 2}")
            if any(a >= b for a, b in zip(hubs, hubs[1:])):
                raise BadSpecError(f"hubs {hubs} not strictly increasing")


def build(spec: NestedStarSpec) -> Graph:
    """Materialize the spec; edge count is (n-1) + sum of hubs."""
    n = spec.n
    adj = [0] * n
    for j in list(spec.hubs) + [n - 1]:
        below = (1 << j) - 1  # all vertices i < j
        adj[j] |= below
        for i in range(j):
            adj[i] |= 1 << j
    return Graph(n, tuple(adj))


def hub_deficit_count(a: int, k: int) -> int:
    """Number of k-subsets avoiding n-1 with max = a and d(S) = k - 1.

    These are exactly the k-subsets of 0..a with maximum a: the hub a is
    adjacent to everything below it, so such a subset induces a connected
    star.  C(a, k-1), which is 0 for a < k - 1.
    """
    if a < 1:
        raise ValueError(f"hub value must be >= 1, got {a}")
    if k < 2:
        raise ValueError(f"subset size must be >= 2, got {k}")
    return comb(a, k - 1)


def parse_hubs(text: str) -> tuple[int, ...]:
    """Parse the CLI form "3,8" into a hub tuple; empty string means none."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))
