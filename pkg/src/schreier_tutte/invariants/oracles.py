"""Brute-force counts that never touch a polynomial.

Each count enumerates the raw objects (edge subsets, orientations, colourings,
spin configurations) and checks the defining property directly.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from ..bipoly import LaurentPoly
from ..multigraph import MultiGraph

MAX_SUBSET_EDGES = 20
MAX_COLORING_VERTICES = 10
MAX_COLORS = 4
MAX_SPIN_VERTICES = 20


class OracleLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleCounts:
    trees: int
    forests: int
    connected_spanning: int
    acyclic_orientations: int
    colorings: dict[int, int]


def _bfs_components(n: int, pairs: list[tuple[int, int]]) -> tuple[int, bool]:
    """Number of components and whether the edge set contains a cycle."""
    adj = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(pairs):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    seen = [False] * n
    comps = 0
    cyclic = False
    for s in range(n):
        if seen[s]:
            continue
        comps += 1
        seen[s] = True
        queue = deque([(s, -1)])
        while queue:
            v, via = queue.popleft()
            for w, idx in adj[v]:
                if idx == via:
                    continue
                if seen[w]:
                    cyclic = True
                    continue
                seen[w] = True
                queue.append((w, idx))
    return comps, cyclic


def subset_counts(g: MultiGraph) -> tuple[int, int, int]:
    """(spanning trees, spanning forests, connected spanning subgraphs)."""
    m = len(g.edges)
    if m > MAX_SUBSET_EDGES:
        raise OracleLimitExceeded(f"subset enumeration limited to {MAX_SUBSET_EDGES} edges")
    pairs = [(e.u, e.v) for e in g.edges]
    trees = forests = connected = 0
    for mask in range(1 << m):
        chosen = [pairs[i] for i in range(m) if mask >> i & 1]
        comps, cyclic = _bfs_components(g.vertex_count, chosen)
        if not cyclic:
            forests += 1
        if comps == 1:
            connected += 1
            if not cyclic:
                trees += 1
    return trees, forests, connected


def acyclic_orientation_count(g: MultiGraph) -> int:
    if g.loop_count:
        return 0
    m = len(g.edges)
    if m > MAX_SUBSET_EDGES:
        raise OracleLimitExceeded(f"orientation enumeration limited to {MAX_SUBSET_EDGES} edges")
    pairs = [(e.u, e.v) for e in g.edges]
    count = 0
    for mask in range(1 << m):
        indeg = [0] * g.vertex_count
        out = [[] for _ in range(g.vertex_count)]
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                u, v = v, u
            out[u].append(v)
            indeg[v] += 1
        ready = [v for v in range(g.vertex_count) if indeg[v] == 0]
        removed = 0
        while ready:
            v = ready.pop()
            removed += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        count += removed == g.vertex_count
    return count


def coloring_count(g: MultiGraph, colors: int) -> int:
    """Proper vertex colourings with ``colors`` colours, by backtracking."""
    n = g.vertex_count
    if n > MAX_COLORING_VERTICES or colors > MAX_COLORS:
        raise OracleLimitExceeded(
            f"colouring enumeration limited to {MAX_COLORING_VERTICES} vertices and {MAX_COLORS} colours")
    if g.loop_count:
        return 0
    earlier = [[] for _ in range(n)]
    for e in g.edges:
        a, b = sorted((e.u, e.v))
        earlier[b].append(a)
    assignment = [0] * n

    def place(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for c in range(colors):
            if all(assignment[w] != c for w in earlier[v]):
                assignment[v] = c
                total += place(v + 1)
        return total

    return place(0)


def oracle_counts(g: MultiGraph, colors=(2, 3)) -> OracleCounts:
    trees, forests, connected = subset_counts(g)
    return OracleCounts(
        trees=trees,
        forests=forests,
        connected_spanning=connected,
        acyclic_orientations=acyclic_orientation_count(g),
        colorings={lam: coloring_count(g, lam) for lam in colors},
    )


def ising_oracle(g: MultiGraph) -> LaurentPoly:
    """``sum over spins of t**(sum over edges of s_u * s_v)`` by full enumeration."""
    if g.loop_count:
        raise ValueError("spin-sum oracle expects a loopless graph")
    n = g.vertex_count
    if n > MAX_SPIN_VERTICES:
        raise OracleLimitExceeded(f"spin enumeration limited to {MAX_SPIN_VERTICES} vertices")
    m = len(g.edges)
    us = np.array([e.u for e in g.edges], dtype=np.int64)
    vs = np.array([e.v for e in g.edges], dtype=np.int64)
    hist = np.zeros(2 * m + 1, dtype=np.int64)
    chunk = 1 << 16
    for start in range(0, 1 << n, chunk):
        configs = np.arange(start, min(start + chunk, 1 << n), dtype=np.int64)
        spins = 1 - 2 * ((configs[:, None] >> np.arange(n)) & 1)
        energy = (spins[:, us] * spins[:, vs]).sum(axis=1)
        hist += np.bincount(energy + m, minlength=2 * m + 1)
    return LaurentPoly.from_terms({k - m: int(c) for k, c in enumerate(hist) if c})
