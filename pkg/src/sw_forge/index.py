"""Exact Steiner-Wiener index SW_k(G) and star closed forms.

SW_k(G) sums the Steiner distance d(S) over all C(n, k) vertex subsets of
size k.  Rather than re-running the per-subset dynamic program from scratch
C(n, k) times, steiner_wiener_sweep runs one Dreyfus-Wagner table over all
vertex subsets of size <= k, sharing every sub-state between subsets.  The
recurrence is identical to steiner.steiner_distance; only the state sharing
differs.

All arithmetic is in Python ints, so index values never overflow.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import BadKError, TooLargeError
from .graph import Graph
from .stars import NestedStarSpec
from .steiner import all_pairs_distances

_INF = 1 << 30

# dp states kept live at once; C(14, <=5) is ~3.5k, well under this
_MAX_STATES = 1 << 22


def star_closed_form(n: int, k: int) -> int:
    """SW_k of the star on n vertices: (n-1) * C(n-1, k-1)."""
    if k < 2:
        raise BadKError(f"subset size k must be >= 2, got {k}")
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    value = (n - 1) * comb(n - 1, k - 1)
    # same quantity counted per-subset: k per subset minus one per subset
    # whose induced star is already a tree
    assert value == k * comb(n, k) - comb(n - 1, k - 1)
    return value


def nested_star_closed_form(spec: NestedStarSpec, k: int) -> int:
    """Star value minus one C(a_i, k-1) deficit per hub."""
    if k < 2:
        raise BadKError(f"subset size k must be >= 2, got {k}")
    return star_closed_form(spec.n, k) - sum(comb(a, k - 1) for a in spec.hubs)


def steiner_wiener_sweep(g: Graph, k_max: int) -> dict[int, int]:
    """SW_k(g) for every k in 2..k_max from a single shared DP table.

    Returns {k: SW_k}; entries with k > n are 0 (empty sum).
    """
    if k_max < 2:
        raise BadKError(f"subset size k must be >= 2, got {k_max}")
    n = g.n
    totals = {k: 0 for k in range(2, k_max + 1)}
    k_hi = min(k_max, n)
    if k_hi < 2:
        return totals
    if sum(comb(n, j) for j in range(k_hi + 1)) > _MAX_STATES:
        raise TooLargeError(f"SW_{k_max} sweep on n = {n} exceeds the state budget")
    dist = all_pairs_distances(g)  # raises DisconnectedError when applicable
    dp: dict[int, list[int]] = {1 << v: dist[v] for v in range(n)}
    for size in range(2, k_hi + 1):
        keep = size < k_hi  # top-size masks are never sub-states
        for verts in combinations(range(n), size):
            low_v = verts[0]
            mask = 0
            for v in verts:
                mask |= 1 << v
            low = 1 << low_v
            rest = mask ^ low
            merged = None
            sub = rest
            while sub:
                a = dp[low | (rest ^ sub)]
                b = dp[sub]
                if merged is None:
                    merged = [x + y for x, y in zip(a, b)]
                else:
                    merged = [
                        m if m < x + y else x + y
                        for m, x, y in zip(merged, a, b)
                    ]
                sub = (sub - 1) & rest
            drow = dist[low_v]
            totals[size] += min(m + d for m, d in zip(merged, drow))
            if keep:
                dp[mask] = [
                    min(m + d for m, d in zip(merged, dist[v]))
                    for v in range(n)
                ]
    return totals


def steiner_wiener(g: Graph, k: int) -> int:
    """Exact SW_k(g); 0 when k > n."""
    return steiner_wiener_sweep(g, k)[k]
