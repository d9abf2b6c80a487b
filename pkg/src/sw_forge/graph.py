"""Simple undirected graphs on vertices 0..n-1 with bitset adjacency.

Graphs are immutable values: every operation downstream of construction is a
pure function.  Adjacency is stored as one int bitmask per vertex, which keeps
BFS and induced-subgraph tests cheap at the scales this package works at
(n <= 62, the short-form graph6 limit).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    IndexOutOfRangeError,
    LoopEdgeError,
    MalformedGraph6Error,
    TooLargeError,
)

MAX_VERTICES = 62  # short-form graph6 limit


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; adj[v] is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def neighbors(self, v: int) -> Iterable[int]:
        m = self.adj[v]
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                low = m & -m
                out.append((u, low.bit_length() - 1))
                m ^= low
        return out


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from unordered vertex pairs; duplicates collapse.

    Raises LoopEdgeError on (v, v) pairs and IndexOutOfRangeError when an
    endpoint is outside 0..n-1.
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    if n > MAX_VERTICES:
        raise TooLargeError(f"at most {MAX_VERTICES} vertices supported, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopEdgeError(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency_masks(n: int, adj: Iterable[int]) -> Graph:
    """Internal fast constructor; caller guarantees symmetry/irreflexivity."""
    return Graph(n, tuple(adj))


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (true for n = 1)."""
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def mask_is_connected(g: Graph, mask: int) -> bool:
    """True iff the subgraph induced by the vertex bitmask is connected."""
    if mask == 0:
        return False
    seen = mask & -mask
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62): size byte chr(63 + n), then the upper-triangle
# bits b(0,1), b(0,2), b(1,2), b(0,3), ... (column-major, i < j), packed 6 per
# character MSB-first, each character offset by 63, zero-padded at the end.
# ---------------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise TooLargeError(f"graph6 short form supports n <= {MAX_VERTICES}")
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for pos in range(0, len(bits), 6):
        val = 0
        for b in bits[pos : pos + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return "".join(chars)


def parse_graph6(line: str) -> Graph:
    """Decode a short-form graph6 string; inverse of encode_graph6."""
    s = line.strip()
    if not s:
        raise MalformedGraph6Error("empty graph6 string")
    if any(not (63 <= ord(c) <= 126) for c in s):
        raise MalformedGraph6Error(f"character outside 63..126 in {s!r}")
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise MalformedGraph6Error(f"size byte encodes n = {n} > {MAX_VERTICES}")
    if n < 1:
        raise MalformedGraph6Error("graph6 size byte encodes n = 0")
    nbits = n * (n - 1) // 2
    want = 1 + (nbits + 5) // 6
    if len(s) != want:
        raise MalformedGraph6Error(
            f"expected {want} characters for n = {n}, got {len(s)}"
        )
    bits = []
    for c in s[1:]:
        val = ord(c) - 63
        bits.extend((val >> shift & 1) for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6Error("nonzero padding bits")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


def to_edge_list(g: Graph) -> str:
    """Edge-list text: first line "n m", then one "u v" line per edge, u < v."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Inverse of to_edge_list (used for CLI graph ingestion)."""
    rows = [r for r in (line.strip() for line in text.splitlines()) if r]
    if not rows:
        raise ValueError("empty edge-list text")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        u, v = row.split()
        edges.append((int(u), int(v)))
    return from_edge_list(n, edges)


def to_dot(g: Graph) -> str:
    """Undirected DOT output for visualization."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
