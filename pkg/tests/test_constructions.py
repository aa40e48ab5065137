from __future__ import annotations

import itertools
from collections import Counter

import pytest

from c4part import enumerate_small, er_polarity, find_four_cycle, named_graph, random_c4_free
from c4part.constructions import SplitMix64
from c4part.graph import induced


def brute_c4_count_n4() -> int:
    """Count labeled C4-free graphs on 4 vertices by direct quadruple checks."""
    pairs = list(itertools.combinations(range(4), 2))
    count = 0
    for mask in range(1 << 6):
        edges = {pairs[k] for k in range(6) if mask >> k & 1}

        def has(u, v):
            return (min(u, v), max(u, v)) in edges

        found = False
        for quad in itertools.permutations(range(4), 4):
            w, x, y, z = quad
            if has(w, x) and has(x, y) and has(y, z) and has(z, w):
                found = True
                break
        if not found:
            count += 1
    return count


class TestPolarity:
    def test_er3_structure(self, er3):
        g = er3.graph
        assert g.n == 13
        degrees = Counter(g.degree(v) for v in range(13))
        assert degrees == {3: 4, 4: 9}
        assert find_four_cycle(g) is None
        low = {v for v in range(13) if g.degree(v) == 3}
        assert low == set(er3.absolute_points) and len(low) == 4
        # the low-degree vertices form an independent set
        for u in low:
            for v in low:
                if u != v:
                    assert not g.has_edge(u, v)

    def test_er3_high_degree_part_is_four_edge_disjoint_triangles(self, er3):
        g = er3.graph
        high = [v for v in range(13) if g.degree(v) == 4]
        sub, _ = induced(g, high)
        assert sub.n == 9 and sub.m == 12
        # connected
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for w in sub.adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        assert seen == set(range(9))
        # the 12 edges split into 4 edge-disjoint triangles (exact cover search)
        triangles = [
            t
            for t in itertools.combinations(range(9), 3)
            if sub.has_edge(t[0], t[1]) and sub.has_edge(t[1], t[2]) and sub.has_edge(t[0], t[2])
        ]

        all_edges = set(sub.edges())

        def cover(remaining, chosen):
            if not remaining:
                return len(chosen) == 4
            for t in triangles:
                tedges = {tuple(sorted(p)) for p in itertools.combinations(t, 2)}
                if tedges <= remaining:
                    if cover(remaining - tedges, chosen + [t]):
                        return True
            return False

        assert cover(frozenset(all_edges), [])

    def test_er2_structure(self, er2):
        g = er2.graph
        assert g.n == 7 and g.m == 9
        degrees = Counter(g.degree(v) for v in range(7))
        assert degrees == {2: 3, 3: 4}
        assert find_four_cycle(g) is None

    @pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
    def test_census_and_c4_freeness(self, q):
        pg = er_polarity(q)
        g = pg.graph
        assert g.n == q * q + q + 1
        degrees = Counter(g.degree(v) for v in range(g.n))
        assert degrees == {q: q + 1, q + 1: q * q}
        assert find_four_cycle(g) is None
        # absolute points are exactly the self-orthogonal ones, all of degree q
        for i, coords in enumerate(pg.point_coords):
            self_dot = sum(c * c for c in coords) % q
            assert (i in pg.absolute_points) == (self_dot == 0)
            assert g.degree(i) == (q if i in pg.absolute_points else q + 1)

    @pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 15])
    def test_non_prime_rejected(self, bad):
        with pytest.raises(ValueError):
            er_polarity(bad)


class TestNamed:
    def test_petersen(self, petersen):
        assert petersen.n == 10 and petersen.m == 15
        assert all(petersen.degree(v) == 3 for v in range(10))
        assert find_four_cycle(petersen) is None
        # girth 5: no triangles either
        for u, v in petersen.edges():
            assert not (petersen.adj[u] & petersen.adj[v])

    def test_heawood(self, heawood):
        assert heawood.n == 14 and heawood.m == 21
        assert all(heawood.degree(v) == 3 for v in range(14))
        assert find_four_cycle(heawood) is None
        # bipartite by parity, so girth 6 given C4-freeness
        for u, v in heawood.edges():
            assert u % 2 != v % 2

    def test_parametrized(self):
        assert named_graph("cycle(4)").m == 4
        assert named_graph("cycle4").m == 4
        assert named_graph("path(5)").m == 4
        assert named_graph("complete(5)").m == 10
        star = named_graph("star(3)")
        assert star.n == 4 and star.degree(0) == 3

    def test_unknown_name_lists_supported(self):
        with pytest.raises(ValueError, match="petersen"):
            named_graph("zarankiewicz")


class TestRandomC4Free:
    def test_deterministic(self):
        g1 = random_c4_free(10, 15, seed=7)
        g2 = random_c4_free(10, 15, seed=7)
        assert list(g1.edges()) == list(g2.edges())

    def test_seed_changes_output(self):
        g1 = random_c4_free(12, 18, seed=1)
        g2 = random_c4_free(12, 18, seed=2)
        assert g1.n == g2.n
        assert list(g1.edges()) != list(g2.edges())

    @pytest.mark.parametrize("n,m,seed", [(4, 6, 0), (10, 15, 7), (25, 60, 3), (50, 100, 1)])
    def test_always_c4_free_and_bounded(self, n, m, seed):
        g = random_c4_free(n, m, seed)
        assert g.n == n and g.m <= m
        assert find_four_cycle(g) is None

    def test_saturation_on_k4_budget(self):
        # n=4 cannot hold more than 4 edges without a 4-cycle
        g = random_c4_free(4, 6, seed=11)
        assert g.m == 4

    def test_splitmix_reference_values(self):
        # canonical test vectors: seed 0 and seed 1234567
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]
        rng = SplitMix64(1234567)
        assert [rng.next_u64() for _ in range(3)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
        ]


class TestEnumerateSmall:
    def test_counts_n3(self):
        assert sum(1 for _ in enumerate_small(3)) == 8

    def test_c4_free_count_n4_matches_brute_force(self):
        # 3 labeled 4-cycles, 4 supergraphs each, overlapping in K4:
        # 3*4 - 3 + 1 = 10 graphs contain a C4, leaving 64 - 10 = 54.
        assert brute_c4_count_n4() == 54
        assert sum(1 for _ in enumerate_small(4, c4_free=True)) == 54

    def test_min_degree3_c4_free_n5_empty(self):
        assert list(enumerate_small(5, c4_free=True, min_degree=3)) == []

    def test_filters_agree_with_detector(self):
        for g in enumerate_small(4, c4_free=True):
            assert find_four_cycle(g) is None

    def test_guard(self):
        with pytest.raises(ValueError):
            next(enumerate_small(9, allow_n8=True))
        with pytest.raises(ValueError):
            next(enumerate_small(8))
