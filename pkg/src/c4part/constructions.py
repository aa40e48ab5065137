"""Instance generators: polarity graphs over prime fields, named test graphs,
seeded random 4-cycle-free graphs, and exhaustive small-graph enumeration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, build, find_four_cycle


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood 2014), fixed here so that
    seeded outputs are reproducible across implementations.

    State update: s += 0x9E3779B97F4A7C15; output mixes s with the constants
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shift-xor by 30, 27, 31).
    `below(k)` draws uniformly from 0..k-1 by rejection off the top 2**64 % k.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PolarityGraph:
    """Orthogonality graph on the projective plane over F_q.

    Vertices are the 1-dimensional subspaces of F_q^3, represented by the
    canonical vector whose first nonzero coordinate is 1, ordered
    lexicographically. Two distinct points are adjacent iff their dot product
    vanishes. Self-orthogonal points (the absolute points) get no loop; they
    are exactly the vertices of degree q, all others have degree q+1.
    """

    q: int
    graph: Graph
    absolute_points: frozenset[int]
    point_coords: tuple[tuple[int, int, int], ...]


def _canonical_points(q: int) -> list[tuple[int, int, int]]:
    pts = []
    pts.append((0, 0, 1))
    for z in range(q):
        pts.append((0, 1, z))
    for y in range(q):
        for z in range(q):
            pts.append((1, y, z))
    return sorted(pts)


def _normalize(vec: tuple[int, int, int], q: int) -> tuple[int, int, int]:
    for c in vec:
        if c % q:
            inv = pow(c, q - 2, q)
            return tuple((x * inv) % q for x in vec)  # type: ignore[return-value]
    raise ValueError("zero vector has no projective representative")


def er_polarity(q: int) -> PolarityGraph:
    """Polarity graph on q*q + q + 1 vertices; 4-cycle-free with degrees q and q+1.

    q must be prime (prime powers would need extension-field arithmetic and
    are out of scope).
    """
    if not _is_prime(q):
        raise ValueError(f"q must be a prime >= 2, got {q}")
    points = _canonical_points(q)
    index = {p: i for i, p in enumerate(points)}
    n = len(points)
    adjacency: list[set[int]] = [set() for _ in range(n)]
    absolute = set()
    for i, p in enumerate(points):
        a, b, c = p
        if (a * a + b * b + c * c) % q == 0:
            absolute.add(i)
        # Two independent generators of the orthogonal complement of p.
        if a == 0 and b == 0:
            g1, g2 = (0, 1, 0), (1, 0, 0)
        elif a == 0:
            g1, g2 = (1, 0, 0), (0, (-c) % q, b)
        else:
            g1, g2 = ((-b) % q, a, 0), ((-c) % q, 0, a)
        for w in _span_points(g1, g2, q):
            j = index[w]
            if j != i:
                adjacency[i].add(j)
                adjacency[j].add(i)
    g = Graph(n, adjacency)
    return PolarityGraph(q=q, graph=g, absolute_points=frozenset(absolute), point_coords=tuple(points))


def _span_points(g1: tuple[int, int, int], g2: tuple[int, int, int], q: int) -> list[tuple[int, int, int]]:
    """Canonical projective points of the plane spanned by g1, g2."""
    out = set()
    out.add(_normalize(g1, q))
    for alpha in range(q):
        vec = tuple((alpha * x + y) % q for x, y in zip(g1, g2))
        if any(vec):
            out.add(_normalize(vec, q))  # type: ignore[arg-type]
    return sorted(out)


_PARAM_NAME = re.compile(r"^(path|cycle|complete|star)\(?(\d+)\)?$")


def named_graph(name: str) -> Graph:
    """Standard labeled test graphs.

    Supported: triangle, petersen, heawood, path(n), cycle(n), complete(n),
    star(n). The Petersen graph uses outer cycle 0..4, inner pentagram 5..9,
    spokes i ~ i+5.
    """
    key = name.strip().lower()
    if key == "triangle":
        return build(3, [(0, 1), (1, 2), (2, 0)])
    if key == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        return build(10, edges)
    if key == "heawood":
        edges = [(i, (i + 1) % 14) for i in range(14)]
        edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
        return build(14, edges)
    m = _PARAM_NAME.match(key)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "path":
            if k < 1:
                raise ValueError("path(n) needs n >= 1 vertices")
            return build(k, [(i, i + 1) for i in range(k - 1)])
        if kind == "cycle":
            if k < 3:
                raise ValueError("cycle(n) needs n >= 3")
            return build(k, [(i, (i + 1) % k) for i in range(k)])
        if kind == "complete":
            if k < 1:
                raise ValueError("complete(n) needs n >= 1")
            return build(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
        if kind == "star":
            if k < 1:
                raise ValueError("star(n) needs n >= 1 leaves")
            return build(k + 1, [(0, i) for i in range(1, k + 1)])
    raise ValueError(
        f"unknown graph name {name!r}; supported: triangle, petersen, heawood, "
        "path(n), cycle(n), complete(n), star(n)"
    )


def _insertion_makes_c4(g_adj: list[set[int]], u: int, v: int) -> bool:
    """Would adding uv close a 4-cycle? True iff u,v share >= 2 common
    neighbors or some length-3 path u-w-x-v already joins them."""
    common = g_adj[u] & g_adj[v]
    if len(common) >= 2:
        return True
    for w in g_adj[u]:
        if w == v:
            continue
        for x in g_adj[w]:
            if x != u and x != v and v in g_adj[x]:
                return True
    return False


def random_c4_free(n: int, target_m: int, seed: int) -> Graph:
    """Seeded incremental 4-cycle-free graph: repeatedly insert a uniformly
    chosen non-edge whose insertion closes no 4-cycle, until target_m edges
    or saturation.

    Once an insertion would close a 4-cycle it stays that way as edges are
    only added, so rejected candidates are dropped from the pool; draws
    remain uniform over the still-valid candidates. Same (n, target_m, seed)
    yields the identical graph.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = SplitMix64(seed)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    adjacency: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    while pool and len(edges) < target_m:
        i = rng.below(len(pool))
        pool[i], pool[-1] = pool[-1], pool[i]
        u, v = pool.pop()
        if _insertion_makes_c4(adjacency, u, v):
            continue
        adjacency[u].add(v)
        adjacency[v].add(u)
        edges.append((u, v))
    return Graph(n, adjacency)


_PAIRS_CACHE: dict[int, list[tuple[int, int]]] = {}


def _pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs (u, v), u < v, ordered lexicographically; bit k of an
    edge mask refers to the k-th pair of this list."""
    if n not in _PAIRS_CACHE:
        _PAIRS_CACHE[n] = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return _PAIRS_CACHE[n]


def _mask_rows(n: int, mask: int) -> list[int]:
    rows = [0] * n
    for k, (u, v) in enumerate(_pair_list(n)):
        if mask >> k & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return rows


def _rows_c4_free(rows: list[int]) -> bool:
    n = len(rows)
    for u in range(n):
        ru = rows[u]
        if not ru:
            continue
        for v in range(u + 1, n):
            if (ru & rows[v]).bit_count() >= 2:
                return False
    return True


def _graph_from_mask(n: int, mask: int) -> Graph:
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for k, (u, v) in enumerate(_pair_list(n)):
        if mask >> k & 1:
            adjacency[u].add(v)
            adjacency[v].add(u)
    return Graph(n, adjacency)


def enumerate_small(
    n: int,
    c4_free: bool = False,
    min_degree: int = 0,
    allow_n8: bool = False,
) -> Iterator[Graph]:
    """Stream all labeled graphs on n vertices passing the filters.

    No isomorphism reduction; all 2**(n choose 2) edge subsets are visited in
    ascending mask order (pair k of the lexicographic pair list is bit k).
    Guarded at n <= 7 because of the doubly exponential blowup; allow_n8
    raises the bound to 8 at a documented cost of 2**28 graphs.
    """
    limit = 8 if allow_n8 else 7
    if n > limit:
        raise ValueError(f"enumeration bounded at n <= {limit} (got n={n}); pass allow_n8 to reach 8")
    if n < 0:
        raise ValueError("n must be non-negative")
    npairs = n * (n - 1) // 2
    for mask in range(1 << npairs):
        rows = _mask_rows(n, mask)
        if min_degree > 0 and any(r.bit_count() < min_degree for r in rows):
            continue
        if c4_free and not _rows_c4_free(rows):
            continue
        yield _graph_from_mask(n, mask)


def assert_c4_free(g: Graph) -> None:
    """Raise if g contains a 4-cycle (generator self-check helper)."""
    c = find_four_cycle(g)
    if c is not None:
        raise AssertionError(f"expected a C4-free graph, found {c.vertices}")
