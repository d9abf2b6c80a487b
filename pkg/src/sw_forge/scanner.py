"""Exhaustive small-graph enumeration and exceptional-value scanning.

The scan is only as trustworthy as its coverage, so the moving parts are:

* a canonical form (color refinement plus individualization search with
  pruning by discovered automorphisms) used to deduplicate isomorphism
  classes;
* built-in enumeration of connected graphs: labeled enumeration with
  first-seen orbit marking up to n = 7, vertex-augmentation from the n-1
  classes for n = 8; beyond that an external graph6 corpus is required
  (write_corpus can produce one for n = 9 if no standard tooling is at
  hand);
* scan itself, which certifies a value as exceptional only when every
  vertex count that could attain a value within the limit was fully
  enumerated.  Graphs whose forced minimum (k-1) * C(n, k) already exceeds
  the limit are tallied but not evaluated.

Corpus coverage of a vertex count beyond the built-in range is certified by
matching the per-n class tally against the published counts of connected
graphs (1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571 for n = 1..10).
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb
from multiprocessing import Pool
from typing import Iterable, Iterator, TextIO

import numpy as np

from .errors import BadKError, IncompleteCoverageError, TooLargeError
from .graph import Graph, encode_graph6, is_connected, parse_graph6
from .index import steiner_wiener

_BUILTIN_MAX_N = 8
_LABELED_MAX_N = 7

#: connected graphs on n vertices up to isomorphism, n = 1..10
KNOWN_CONNECTED_CLASS_COUNTS = {
    1: 1,
    2: 1,
    3: 2,
    4: 6,
    5: 21,
    6: 112,
    7: 853,
    8: 11117,
    9: 261080,
    10: 11716571,
}


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

_MAX_STORED_AUTOS = 200
_MAX_LEAVES = 1_000_000


def _refine(nbrs: list[tuple[int, ...]], colors: list[int]) -> list[int]:
    """Iterate neighbor-color refinement to a stable canonical coloring.

    A vertex signature packs (own color, multiset of neighbor colors) into
    one int: 6 bits per color class hold the neighbor count (counts and
    color ids stay below 64 at the n <= 62 cap), with the own color above.
    Ranking signatures numerically therefore orders primarily by current
    color, so a stable partition maps back to exactly the same ids and the
    loop terminates.
    """
    n = len(nbrs)
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [rank[c] for c in colors]
    own_shift = 6 * n
    while True:
        shift = [1 << (6 * c) for c in colors]
        sigs = []
        for v in range(n):
            acc = colors[v] << own_shift
            for u in nbrs[v]:
                acc += shift[u]
            sigs.append(acc)
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _cert_bits(adj: tuple[int, ...], order: list[int]) -> bytes:
    """Upper-triangle adjacency of the reordered graph, packed MSB-first."""
    out = bytearray()
    acc = 0
    cnt = 0
    n = len(order)
    for j in range(1, n):
        oj = order[j]
        for i in range(j):
            acc = acc << 1 | (adj[order[i]] >> oj & 1)
            cnt += 1
            if cnt == 8:
                out.append(acc)
                acc = 0
                cnt = 0
    if cnt:
        out.append(acc << (8 - cnt))
    return bytes(out)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant certificate: equal iff graphs are isomorphic."""
    n = g.n
    adj = g.adj
    if n == 1:
        return bytes([1])
    nbrs = []
    for v in range(n):
        m = adj[v]
        row = []
        while m:
            low = m & -m
            row.append(low.bit_length() - 1)
            m ^= low
        nbrs.append(row)
    best: bytes | None = None
    best_order: list[int] | None = None
    # seed with twin swaps: vertices with equal open or closed neighborhoods
    # are interchangeable, which prunes the most common branch immediately
    autos: list[tuple[int, ...]] = []
    ident = tuple(range(n))
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            av = adj[v]
            if au == av or au ^ (1 << v) == av ^ (1 << u):
                sigma = list(ident)
                sigma[u] = v
                sigma[v] = u
                autos.append(tuple(sigma))
    leaves = 0

    def visit(colors: list[int], path: list[int]) -> None:
        nonlocal best, best_order, leaves
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = min((c for c, vs in cells.items() if len(vs) > 1), default=None)
        if target is None:
            leaves += 1
            if leaves > _MAX_LEAVES:
                raise RuntimeError("canonical search exceeded the leaf budget")
            order = sorted(range(n), key=colors.__getitem__)
            cert = _cert_bits(adj, order)
            if best is None or cert < best:
                best = cert
                best_order = order
            elif cert == best:
                # two labelings with identical certificates compose to an
                # automorphism; keep it for subtree pruning
                sigma = [0] * n
                for pos in range(n):
                    sigma[order[pos]] = best_order[pos]
                if len(autos) < _MAX_STORED_AUTOS:
                    autos.append(tuple(sigma))
            return
        tried: set[int] = set()
        for v in cells[target]:
            # skip v if the group generated by the path-fixing automorphisms
            # discovered so far moves v onto an already-explored sibling
            fixing = [s for s in autos if all(s[u] == u for u in path)]
            orbit = {v}
            queue = [v]
            hit = False
            while queue and not hit:
                w = queue.pop()
                for sigma in fixing:
                    x = sigma[w]
                    if x in tried:
                        hit = True
                        break
                    if x not in orbit:
                        orbit.add(x)
                        queue.append(x)
            if hit:
                continue
            tried.add(v)
            split = [c * 2 for c in colors]
            split[v] -= 1  # v sorts just below its former cell
            visit(_refine(nbrs, split), path + [v])

    visit(_refine(nbrs, [0] * n), [])
    assert best is not None
    return bytes([n]) + best


def graph_from_certificate(cert: bytes) -> Graph:
    """Rebuild the canonically labeled graph encoded by canonical_form."""
    n = cert[0]
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = cert[1 + pos // 8]
            if byte >> (7 - pos % 8) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# built-in enumeration
# ---------------------------------------------------------------------------


def _edge_positions(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    adj = [0] * n
    for e, (i, j) in enumerate(pairs):
        if mask >> e & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def _labeled_enumeration_classes(n: int) -> list[Graph]:
    """One connected representative per class: first-seen labeled graph,
    with the whole permutation orbit marked off via one matrix product."""
    if n == 1:
        return [Graph(1, (0,))]
    pairs = _edge_positions(n)
    n_edges = len(pairs)
    pos = {pair: e for e, pair in enumerate(pairs)}
    perms = list(permutations(range(n)))
    weights = np.zeros((len(perms), n_edges), dtype=np.int64)
    for pi, perm in enumerate(perms):
        for e, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            weights[pi, pos[(a, b)]] = 1 << e
    # weights[pi] @ bits-of-mask = mask of the relabeled graph
    seen = np.zeros(1 << n_edges, dtype=bool)
    out = []
    for mask in range(1 << n_edges):
        if seen[mask]:
            continue
        bits = np.array(
            [mask >> e & 1 for e in range(n_edges)], dtype=np.int64
        )
        seen[weights @ bits] = True
        g = _graph_from_mask(n, pairs, mask)
        if is_connected(g):
            out.append(g)
    return out


def _augment(parents: Iterable[Graph], n: int) -> Iterator[Graph]:
    """All connected classes on n vertices, grown from the connected classes
    on n-1 vertices by attaching one new vertex.  Every connected graph has
    a non-cut vertex, so deleting it shows this reaches every class."""
    seen: set[bytes] = set()
    for parent in parents:
        base = list(parent.adj)
        for hood in range(1, 1 << (n - 1)):
            adj = base.copy()
            adj.append(hood)
            m = hood
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= 1 << (n - 1)
                m ^= low
            g = Graph(n, tuple(adj))
            cert = canonical_form(g)
            if cert not in seen:
                seen.add(cert)
                yield g


@lru_cache(maxsize=4)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n <= _LABELED_MAX_N:
        return tuple(_labeled_enumeration_classes(n))
    return tuple(_augment(_connected_classes(n - 1), n))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative per connected isomorphism class, fixed order."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > _BUILTIN_MAX_N:
        raise TooLargeError(
            f"built-in enumeration stops at n = {_BUILTIN_MAX_N}; "
            "supply a graph6 corpus for larger n"
        )
    yield from _connected_classes(n)


def write_corpus(out: TextIO, n: int) -> int:
    """Write one graph6 line per connected class on n vertices; returns the
    class count.  Supports one step past the built-in range (n <= 9), for
    environments without standard generation tooling."""
    if n > _BUILTIN_MAX_N + 1:
        raise TooLargeError(f"corpus generation supports n <= {_BUILTIN_MAX_N + 1}")
    if n <= _BUILTIN_MAX_N:
        stream: Iterable[Graph] = enumerate_connected(n)
    else:
        stream = _augment(_connected_classes(n - 1), n)
    count = 0
    for g in stream:
        out.write(encode_graph6(g) + "\n")
        count += 1
    return count


# ---------------------------------------------------------------------------
# scanning
# ---------------------------------------------------------------------------


def min_sw_lower_bound(n: int, k: int) -> int:
    """(k-1) * C(n, k): every size-k subset needs at least k-1 edges."""
    if k < 2:
        raise BadKError(f"subset size k must be >= 2, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n = {n}, k = {k}")
    return (k - 1) * comb(n, k)


def required_vertex_counts(k: int, limit: int) -> list[int]:
    """All n whose graphs can attain a value <= limit."""
    out = []
    n = k
    while min_sw_lower_bound(n, k) <= limit:
        out.append(n)
        n += 1
    return out


@dataclass(frozen=True)
class ScanReport:
    k: int
    limit: int
    n_max_covered: int
    source: str  # "builtin" or "graph6-corpus"
    attainable: dict[int, str]  # value -> graph6 witness
    exceptions: tuple[int, ...]
    graph_counts: dict[int, int]
    complete: bool
    missing: tuple[int, ...]  # required n not covered (empty when complete)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "limit": self.limit,
            "n_max_covered": self.n_max_covered,
            "source": self.source,
            "complete": self.complete,
            "missing": list(self.missing),
            "attainable": sorted(self.attainable),
            "witnesses": {str(v): g6 for v, g6 in sorted(self.attainable.items())},
            "exceptions": list(self.exceptions),
            "graph_counts": {str(n): c for n, c in sorted(self.graph_counts.items())},
        }


def _worker_count() -> int:
    raw = os.environ.get("SW_FORGE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _sw_of_line(args: tuple[str, int]) -> tuple[str, int]:
    line, k = args
    return line, steiner_wiener(parse_graph6(line), k)


def scan(
    k: int,
    limit: int,
    corpus: Iterable[str] | None = None,
    strict: bool = True,
) -> ScanReport:
    """Determine which values in 1..limit are attained as SW_k.

    Built-in enumeration covers n <= 8; corpus lines (graph6, one per line)
    extend coverage.  Disconnected corpus entries are ignored.  When some
    required vertex count stays uncovered, strict=True raises
    IncompleteCoverageError and strict=False returns a report marked
    partial, whose exceptions are candidates only.
    """
    if k < 2:
        raise BadKError(f"subset size k must be >= 2, got {k}")
    if limit < 1:
        raise ValueError(f"need limit >= 1, got {limit}")
    required = required_vertex_counts(k, limit)
    counts: Counter[int] = Counter()
    covered: set[int] = set()
    todo: list[str] = []  # graph6 lines whose SW_k must be evaluated

    for n in required:
        if n > _BUILTIN_MAX_N:
            break
        for g in enumerate_connected(n):
            counts[n] += 1
            todo.append(encode_graph6(g))
        covered.add(n)

    source = "builtin"
    if corpus is not None:
        source = "graph6-corpus"
        corpus_counts: Counter[int] = Counter()
        for line in corpus:
            line = line.strip()
            if not line:
                continue
            g = parse_graph6(line)
            if not is_connected(g):
                continue
            corpus_counts[g.n] += 1
            if g.n >= k and min_sw_lower_bound(g.n, k) <= limit:
                todo.append(line)
        for n, c in corpus_counts.items():
            counts[n] += c
            if KNOWN_CONNECTED_CLASS_COUNTS.get(n) == c:
                covered.add(n)

    missing = tuple(n for n in required if n not in covered)
    if missing and strict:
        raise IncompleteCoverageError(
            f"no coverage for vertex counts {list(missing)}; "
            "supply a corpus or lower the limit"
        )

    attainable: dict[int, str] = {}
    workers = _worker_count()
    if workers > 1:
        with Pool(workers) as pool:
            results = pool.map(
                _sw_of_line, [(line, k) for line in todo], chunksize=256
            )
    else:
        results = ((line, steiner_wiener(parse_graph6(line), k)) for line in todo)
    for line, value in results:
        if 1 <= value <= limit and value not in attainable:
            attainable[value] = line

    exceptions = tuple(v for v in range(1, limit + 1) if v not in attainable)
    return ScanReport(
        k=k,
        limit=limit,
        n_max_covered=max(covered, default=0),
        source=source,
        attainable=attainable,
        exceptions=exceptions,
        graph_counts=dict(counts),
        complete=not missing,
        missing=missing,
    )
