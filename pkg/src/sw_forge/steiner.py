"""Exact Steiner distance d(S): the fewest edges of a connected subgraph
whose vertex set contains the terminal set S.

Two independent routes are provided.  steiner_distance runs a
Dreyfus-Wagner dynamic program over (terminal-subset, attachment-vertex)
states and is the production path.  steiner_distance_oracle minimizes
|U| - 1 over vertex supersets U of S whose induced subgraph is connected;
it is deliberately naive and serves as ground truth in tests.
"""

from __future__ import annotations

from typing import Iterable

from .errors import (
    DisconnectedError,
    EmptyTerminalsError,
    IndexOutOfRangeError,
    TooLargeError,
)
from .graph import Graph, is_connected, mask_is_connected

_INF = 1 << 30

_ORACLE_MAX_N = 20


def all_pairs_distances(g: Graph) -> list[list[int]]:
    """Hop-count matrix via BFS from every vertex; requires connectivity."""
    if not is_connected(g):
        raise DisconnectedError("all_pairs_distances requires a connected graph")
    n = g.n
    adj = g.adj
    dist = []
    for src in range(n):
        row = [_INF] * n
        row[src] = 0
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
            m = frontier
            while m:
                low = m & -m
                row[low.bit_length() - 1] = d
                m ^= low
        dist.append(row)
    return dist


def _check_terminals(g: Graph, terminals: Iterable[int]) -> tuple[int, ...]:
    terms = tuple(sorted(set(terminals)))
    if not terms:
        raise EmptyTerminalsError("terminal set is empty")
    if terms[0] < 0 or terms[-1] >= g.n:
        raise IndexOutOfRangeError(f"terminals {terms} outside 0..{g.n - 1}")
    return terms


def steiner_distance(g: Graph, terminals: Iterable[int]) -> int:
    """Dreyfus-Wagner DP; exact for any connected graph at desk scale.

    States: dp[mask][v] = fewest edges of a tree containing {terminals in
    mask} plus v.  Masks are merged pairwise at a shared vertex, then closed
    with one min-plus pass against the shortest-path matrix.
    """
    terms = _check_terminals(g, terminals)
    dist = all_pairs_distances(g)  # also performs the connectivity check
    k = len(terms)
    if k == 1:
        return 0
    if k == 2:
        return dist[terms[0]][terms[1]]
    n = g.n
    full = (1 << k) - 1
    dp: list[list[int] | None] = [None] * (full + 1)
    for i, t in enumerate(terms):
        dp[1 << i] = dist[t]
    for mask in range(3, full + 1):
        if mask.bit_count() < 2 or dp[mask] is not None:
            continue
        rest = mask & (mask - 1)  # drop the lowest terminal bit
        low = mask ^ rest
        merged = [_INF] * n
        sub = rest
        while sub:
            a = dp[low | (rest ^ sub)]
            b = dp[sub]
            for v in range(n):
                cand = a[v] + b[v]
                if cand < merged[v]:
                    merged[v] = cand
            sub = (sub - 1) & rest
        if mask == full:
            # final mask is never a sub-state: evaluate at one terminal only
            t0 = terms[0]
            drow = dist[t0]
            return min(merged[v] + drow[v] for v in range(n))
        dp[mask] = [
            min(merged[u] + dist[u][v] for u in range(n)) for v in range(n)
        ]
    raise AssertionError("unreachable")


def steiner_distance_oracle(g: Graph, terminals: Iterable[int]) -> int:
    """Brute force: min |U| - 1 over supersets U of S with g[U] connected.

    Any Steiner tree's vertex set induces a connected subgraph, and any
    connected induced subgraph on |U| vertices contains a spanning tree with
    |U| - 1 edges, so this equals steiner_distance wherever both apply.
    """
    if g.n > _ORACLE_MAX_N:
        raise TooLargeError(f"oracle supports n <= {_ORACLE_MAX_N}, got {g.n}")
    terms = _check_terminals(g, terminals)
    if not is_connected(g):
        raise DisconnectedError("steiner_distance_oracle requires a connected graph")
    smask = 0
    for t in terms:
        smask |= 1 << t
    others = ((1 << g.n) - 1) ^ smask
    best = g.n - 1
    sub = others
    while True:  # sub runs over all subsets of the non-terminal vertices
        u = smask | sub
        if u.bit_count() - 1 < best and mask_is_connected(g, u):
            best = u.bit_count() - 1
        if sub == 0:
            break
        sub = (sub - 1) & others
    return best
