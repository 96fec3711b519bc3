"""Cycle and path counting.

Two engines count cycles independently: a scan of the cycle space (the
oracle) and a path-counting backtracker anchored at each cycle's smallest edge
id (the production path). Parallel edges are grouped so the backtracker
multiplies by edge multiplicities instead of branching on each copy.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .gf2 import DEFAULT_CAP, CapExceeded, _gray_words
from .graph import GraphError, Multigraph, _is_cycle_bits, fundamental_cycles

__all__ = [
    "CycleCount",
    "count_cycles",
    "count_cycles_codespace",
    "count_cycles_backtrack",
    "count_paths",
    "cycles_through_edge",
    "f_multipath",
]

BY_LENGTH_MAX_Q = 64


@dataclass(frozen=True)
class CycleCount:
    total: int
    method: str
    by_length: Optional[Dict[int, int]] = field(default=None)


def count_cycles_codespace(g: Multigraph, by_length: bool = True, cap: int = DEFAULT_CAP) -> CycleCount:
    """Count cycles by testing every word of the cycle space."""
    if not g.is_connected():
        raise GraphError("codespace engine needs a connected graph")
    k = g.q - g.p + 1
    if k > cap:
        raise CapExceeded(f"k={k} exceeds the exhaustive cap of {cap}")
    if k == 0:
        return CycleCount(0, "codespace", {} if by_length else None)
    rows = [w.bits for w in fundamental_cycles(g)]
    lengths = Counter()
    for bits in _gray_words(rows):
        if _is_cycle_bits(g.edges, bits):
            lengths[bin(bits).count("1")] += 1
    total = sum(lengths.values())
    return CycleCount(total, "codespace", dict(sorted(lengths.items())) if by_length else None)


def _multiplicity_adjacency(p: int, edges) -> List[Dict[int, int]]:
    adj = [dict() for _ in range(p)]
    for u, v in edges:
        adj[u][v] = adj[u].get(v, 0) + 1
        adj[v][u] = adj[v].get(u, 0) + 1
    return adj


def _paths(adj: List[Dict[int, int]], x: int, y: int, lengths: Optional[Counter], offset: int = 0) -> int:
    """Simple x-y paths, each parallel-edge choice distinct; fills ``lengths`` if given."""
    visited = [False] * len(adj)
    visited[x] = True
    total = 0

    # iterative DFS: frames of (vertex, neighbour iterator, weight so far, depth)
    stack = [(x, iter(adj[x].items()), 1, 0)]
    while stack:
        v, it, w, d = stack[-1]
        step = next(it, None)
        if step is None:
            stack.pop()
            visited[v] = False
            continue
        u, m = step
        if visited[u]:
            continue
        if u == y:
            total += w * m
            if lengths is not None:
                lengths[d + 1 + offset] += w * m
            continue
        visited[u] = True
        stack.append((u, iter(adj[u].items()), w * m, d + 1))
    visited[x] = False
    return total


def count_cycles_backtrack(g: Multigraph, by_length: Optional[bool] = None) -> CycleCount:
    """Count cycles as, for each edge xy, the x-y paths through higher-numbered edges only.

    Every cycle is counted once, at its smallest edge id. Disconnected graphs
    are fine: components simply contribute independently.
    """
    if by_length is None:
        by_length = g.q <= BY_LENGTH_MAX_Q
    lengths = Counter() if by_length else None
    total = 0
    adj = _multiplicity_adjacency(g.p, ())
    # walk anchors from the top id down so the adjacency only ever grows
    for e in range(g.q - 1, -1, -1):
        x, y = g.edges[e]
        total += _paths(adj, x, y, lengths, offset=1)
        adj[x][y] = adj[x].get(y, 0) + 1
        adj[y][x] = adj[y].get(x, 0) + 1
    return CycleCount(total, "backtrack", dict(sorted(lengths.items())) if by_length else None)


def count_cycles(g: Multigraph, engine: str = "backtrack", by_length: Optional[bool] = None) -> CycleCount:
    if engine == "backtrack":
        return count_cycles_backtrack(g, by_length)
    if engine == "codespace":
        return count_cycles_codespace(g, by_length=True if by_length is None else by_length)
    raise ValueError(f"unknown engine {engine!r}")


def _check_vertex(g: Multigraph, v: int):
    if not 0 <= v < g.p:
        raise GraphError(f"vertex {v} outside 0..{g.p - 1}")


def count_paths(g: Multigraph, x: int, y: int) -> int:
    """Simple x-y paths; paths differing only in a parallel edge are distinct."""
    _check_vertex(g, x)
    _check_vertex(g, y)
    if x == y:
        raise GraphError("path endpoints must differ")
    return _paths(_multiplicity_adjacency(g.p, g.edges), x, y, None)


def cycles_through_edge(g: Multigraph, e: int) -> int:
    if not 0 <= e < g.q:
        raise GraphError(f"edge id {e} outside 0..{g.q - 1}")
    x, y = g.edges[e]
    return count_paths(g.delete_edge(e), x, y)


def f_multipath(q: int, p: int) -> int:
    """Most end-to-end paths in a multipath with p vertices and q edges (balanced multiplicities)."""
    if p < 2:
        raise ValueError(f"need p >= 2, got p={p}")
    if q < 0:
        raise ValueError(f"need q >= 0, got q={q}")
    if q < p - 1:
        return 0
    m, r = divmod(q, p - 1)
    return m ** (p - 1 - r) * (m + 1) ** r
