"""Loop-free multigraphs and their cycle codes.

Vertices are ``0..p-1``; edges are indexed ``0..q-1`` in file order and edge
``i`` is coordinate ``i`` of every cycle-code word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .gf2 import DEFAULT_CAP, BitWord, LinearCode, make_code

__all__ = [
    "GraphError",
    "Multigraph",
    "GraphProperties",
    "Suppression",
    "DEGENERATE",
    "parse_graph",
    "format_graph",
    "properties",
    "spanning_tree",
    "fundamental_cycles",
    "cycle_code",
    "is_cycle",
    "edge_set",
    "suppress_degree_two",
]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Multigraph:
    p: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.p < 1:
            raise GraphError(f"need at least one vertex, got p={self.p}")
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"edge {i} is a loop at vertex {u}")
            if not (0 <= u < self.p and 0 <= v < self.p):
                raise GraphError(f"edge {i} = ({u}, {v}) uses a vertex outside 0..{self.p - 1}")

    @property
    def q(self) -> int:
        return len(self.edges)

    def degrees(self) -> List[int]:
        deg = [0] * self.p
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def incidence(self) -> List[List[Tuple[int, int]]]:
        """Per vertex, ``(edge id, other end)`` pairs in edge-id order."""
        inc = [[] for _ in range(self.p)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((i, v))
            inc[v].append((i, u))
        return inc

    def is_connected(self) -> bool:
        return len(_component(self, 0)) == self.p

    def delete_edge(self, e: int) -> "Multigraph":
        return Multigraph(self.p, self.edges[:e] + self.edges[e + 1:])

    def add_edge(self, u: int, v: int) -> "Multigraph":
        return Multigraph(self.p, self.edges + ((u, v),))


@dataclass(frozen=True)
class GraphProperties:
    connected: bool
    degrees: List[int]
    eulerian: bool
    cyclomatic: Optional[int]


def _component(g: Multigraph, start: int) -> set:
    inc = g.incidence()
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for _, y in inc[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def parse_graph(text: str) -> Multigraph:
    """Read the edge-list format: ``p q`` header, then q lines ``u v``; ``#`` comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    try:
        p, q = (int(x) for x in lines[0].split())
        edges = []
        for ln in lines[1:]:
            u, v = (int(x) for x in ln.split())
            edges.append((u, v))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != q:
        raise GraphError(f"header declares q={q} edges but {len(edges)} found")
    return Multigraph(p, tuple(edges))


def format_graph(g: Multigraph) -> str:
    return "\n".join([f"{g.p} {g.q}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def properties(g: Multigraph) -> GraphProperties:
    deg = g.degrees()
    connected = g.is_connected()
    return GraphProperties(
        connected=connected,
        degrees=deg,
        eulerian=connected and all(d % 2 == 0 for d in deg),
        cyclomatic=g.q - g.p + 1 if connected else None,
    )


def _require_connected(g: Multigraph):
    if not g.is_connected():
        raise GraphError("graph is disconnected")


def edge_set(g: Multigraph, ids) -> BitWord:
    return BitWord.from_indices(ids, g.q)


def spanning_tree(g: Multigraph) -> BitWord:
    """Spanning tree chosen greedily in edge-id order (lowest id wins).

    With this rule every tree path closing a non-tree edge ``e`` uses only
    edges with id < ``e``, which makes the fundamental cycles an already
    reduced echelon basis.
    """
    _require_connected(g)
    if not g.q:
        raise GraphError("graph has no edges")
    parent = list(range(g.p))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bits = 0
    for i, (u, v) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            bits |= 1 << i
    return BitWord(bits, g.q)


def fundamental_cycles(g: Multigraph) -> List[BitWord]:
    """One cycle per non-tree edge, in edge-id order: the edge plus its tree path."""
    if not g.q:
        return []
    tree = spanning_tree(g).bits
    inc = [[] for _ in range(g.p)]
    for i, (u, v) in enumerate(g.edges):
        if (tree >> i) & 1:
            inc[u].append((i, v))
            inc[v].append((i, u))
    # root the tree at 0: parent edge and depth per vertex
    up: Dict[int, Tuple[int, int]] = {0: (-1, -1)}
    depth = {0: 0}
    stack = [0]
    while stack:
        x = stack.pop()
        for i, y in inc[x]:
            if y not in up:
                up[y] = (i, x)
                depth[y] = depth[x] + 1
                stack.append(y)
    out = []
    for i, (u, v) in enumerate(g.edges):
        if (tree >> i) & 1:
            continue
        bits = 1 << i
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            e, u = up[u]
            bits |= 1 << e
        out.append(BitWord(bits, g.q))
    return out


def cycle_code(g: Multigraph, cap: int = DEFAULT_CAP) -> LinearCode:
    """The ``[q, q-p+1]`` cycle code, generated by the fundamental cycles."""
    _require_connected(g)
    rows = fundamental_cycles(g)
    if not rows:
        raise GraphError("graph is a forest; its cycle code is trivial (k = 0)")
    return make_code(rows, cap=cap)


def is_cycle(g: Multigraph, s: BitWord) -> bool:
    """True iff the edges of ``s`` form one connected 2-regular subgraph (digons included)."""
    if s.length != g.q:
        raise GraphError(f"edge set length {s.length} does not match q={g.q}")
    return _is_cycle_bits(g.edges, s.bits)


def _is_cycle_bits(edges: Sequence[Tuple[int, int]], bits: int) -> bool:
    if not bits:
        return False
    deg: Dict[int, int] = {}
    adj: Dict[int, List[int]] = {}
    while bits:
        low = bits & -bits
        u, v = edges[low.bit_length() - 1]
        bits ^= low
        du = deg.get(u, 0) + 1
        dv = deg.get(v, 0) + 1
        if du > 2 or dv > 2:
            return False
        deg[u], deg[v] = du, dv
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(d != 2 for d in deg.values()):
        return False
    # 2-regular: connected iff walking from one vertex reaches all of them
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(deg)


@dataclass(frozen=True)
class Suppression:
    """A graph with degree-2 vertices suppressed.

    ``chains[i]`` lists the original edge ids merged into suppressed edge ``i``;
    ``vertices[j]`` is the original label of suppressed vertex ``j``.
    """

    graph: Multigraph
    chains: Tuple[Tuple[int, ...], ...]
    vertices: Tuple[int, ...]


class _Degenerate:
    def __repr__(self):
        return "DEGENERATE"

    def __bool__(self):
        return False


DEGENERATE = _Degenerate()


def suppress_degree_two(g: Multigraph) -> Union[Suppression, _Degenerate]:
    """Replace every maximal chain through degree-2 vertices by one edge.

    Returns :data:`DEGENERATE` when a chain would close into a loop, e.g. for a
    bare cycle.
    """
    _require_connected(g)
    deg = g.degrees()
    inc = g.incidence()
    branch = [v for v in range(g.p) if deg[v] != 2]
    if not branch:
        return DEGENERATE
    used = [False] * g.q
    chains = []
    for start in branch:
        for e, nxt in inc[start]:
            if used[e]:
                continue
            chain = [e]
            used[e] = True
            prev_e, cur = e, nxt
            while deg[cur] == 2:
                (e1, y1), (e2, y2) = inc[cur]
                e, y = (e2, y2) if e1 == prev_e else (e1, y1)
                chain.append(e)
                used[e] = True
                prev_e, cur = e, y
            if cur == start:
                return DEGENERATE
            # keep original orientation for single edges; otherwise start at the lowest id's end
            if len(chain) == 1:
                a, b = g.edges[chain[0]]
            elif chain[-1] < chain[0]:
                a, b = cur, start
            else:
                a, b = start, cur
            chains.append((min(chain), a, b, tuple(chain)))
    chains.sort()
    relabel = {v: j for j, v in enumerate(branch)}
    edges = tuple((relabel[a], relabel[b]) for _, a, b, _ in chains)
    return Suppression(
        graph=Multigraph(len(branch), edges),
        chains=tuple(c for *_, c in chains),
        vertices=tuple(branch),
    )
