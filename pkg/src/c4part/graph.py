"""Immutable simple-graph core: adjacency queries, 4-cycle detection, induced subgraphs.

Vertices are dense 0-based integers. External labels, if any, belong to the
I/O layer; everything here works on indices so that bitset tricks stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph input (self-loop, out-of-range endpoint, bad query)."""


@dataclass(frozen=True)
class FourCycle:
    """A cycle w-x-y-z-w on four distinct vertices."""

    vertices: tuple[int, int, int, int]

    def validates_in(self, g: "Graph") -> bool:
        w, x, y, z = self.vertices
        if len({w, x, y, z}) != 4:
            return False
        return x in g.adj[w] and y in g.adj[x] and z in g.adj[y] and w in g.adj[z]


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    `adj` holds one frozenset per vertex; `nbrs` the same neighborhoods as
    sorted tuples for deterministic iteration. Instances are immutable by
    convention and safe to share across threads.
    """

    __slots__ = ("n", "adj", "nbrs", "m", "_bits")

    def __init__(self, n: int, adjacency: list[set[int]]):
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adjacency)
        self.nbrs: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adjacency)
        self.m = sum(len(s) for s in adjacency) // 2
        self._bits: list[int] | None = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(len(s) for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.nbrs[u]:
                if u < v:
                    yield (u, v)

    def adjacency_bits(self) -> list[int]:
        """Neighborhoods as integers with bit w set iff w is adjacent (cached)."""
        if self._bits is None:
            nbytes = self.n // 8 + 1
            bits = []
            for u in range(self.n):
                ba = bytearray(nbytes)
                for w in self.adj[u]:
                    ba[w >> 3] |= 1 << (w & 7)
                bits.append(int.from_bytes(ba, "little"))
            self._bits = bits
        return self._bits

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, deduplicating parallel edges.

    Raises GraphError for a self-loop or an endpoint outside 0..n-1, naming
    the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(n, adjacency)


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices adjacent to both u and v; u and v must be distinct."""
    if u == v:
        raise GraphError(f"common_neighbors needs two distinct vertices, got {u} twice")
    return g.adj[u] & g.adj[v]


def find_four_cycle(g: Graph) -> FourCycle | None:
    """First 4-cycle of g, or None when no vertex pair has two common neighbors.

    The witness is deterministic: smallest vertex u lying on any 4-cycle,
    smallest opposite vertex v (the pair with >= 2 common neighbors), and the
    two smallest common neighbors in sorted order, reported as the cycle
    (u, w1, v, w2).
    """
    bits = g.adjacency_bits()
    hit_u = -1
    for u in range(g.n):
        nu = g.nbrs[u]
        if len(nu) < 2:
            continue
        mask_u = 1 << u
        acc = 0
        for w in nu:
            both = acc & bits[w]
            if both and both & ~mask_u:
                hit_u = u
                break
            acc |= bits[w]
        if hit_u >= 0:
            break
    if hit_u < 0:
        return None
    u = hit_u
    counts: dict[int, int] = {}
    for w in g.nbrs[u]:
        for x in g.nbrs[w]:
            if x != u:
                counts[x] = counts.get(x, 0) + 1
    v = min(x for x, c in counts.items() if c >= 2)
    w1, w2 = sorted(g.adj[u] & g.adj[v])[:2]
    return FourCycle((u, w1, v, w2))


def induced(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on s plus the old->new index map."""
    members = sorted(set(s))
    for v in members:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(members)}
    mset = set(members)
    adjacency: list[set[int]] = [set() for _ in members]
    for v in members:
        iv = index[v]
        for w in g.adj[v]:
            if w in mset:
                adjacency[iv].add(index[w])
    return Graph(len(members), adjacency), index


def degree_in(g: Graph, v: int, s: Iterable[int]) -> int:
    """Number of neighbors of v inside s."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    sset = s if isinstance(s, (set, frozenset)) else set(s)
    return len(g.adj[v] & sset)
