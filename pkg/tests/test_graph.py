from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from c4part import GraphError, build, common_neighbors, degree_in, find_four_cycle, induced, named_graph
from c4part.constructions import enumerate_small


def brute_has_c4(g) -> bool:
    """Independent 4-cycle detector: try all ordered quadruples."""
    for quad in itertools.permutations(range(g.n), 4):
        w, x, y, z = quad
        if g.has_edge(w, x) and g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(z, w):
            return True
    return False


class TestBuild:
    def test_triangle_degrees(self, triangle):
        assert triangle.n == 3 and triangle.m == 3
        assert [triangle.degree(v) for v in range(3)] == [2, 2, 2]

    def test_duplicate_edges_collapse(self):
        g = build(2, [(0, 1), (0, 1), (1, 0)])
        assert g.m == 1 and g.has_edge(0, 1)

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match=r"\(0, 0\)"):
            build(1, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphError, match=r"\(0, 5\)"):
            build(3, [(0, 5)])

    def test_degree_sum_is_twice_edges(self, petersen):
        assert sum(petersen.degree(v) for v in range(petersen.n)) == 2 * petersen.m


class TestCommonNeighbors:
    def test_triangle(self, triangle):
        assert common_neighbors(triangle, 0, 1) == {2}

    def test_k2(self):
        g = build(2, [(0, 1)])
        assert common_neighbors(g, 0, 1) == frozenset()

    def test_four_cycle_pair(self):
        g = named_graph("cycle(4)")
        assert common_neighbors(g, 0, 2) == {1, 3}

    def test_same_vertex_rejected(self, triangle):
        with pytest.raises(GraphError):
            common_neighbors(triangle, 1, 1)


class TestFindFourCycle:
    def test_cycle4_witness(self):
        g = named_graph("cycle(4)")
        c = find_four_cycle(g)
        assert c is not None and c.vertices == (0, 1, 2, 3)
        assert c.validates_in(g)

    def test_k4_has_c4(self):
        g = named_graph("complete(4)")
        c = find_four_cycle(g)
        assert c is not None and c.validates_in(g)

    def test_petersen_c4_free(self, petersen):
        assert find_four_cycle(petersen) is None
        # independent check: no pair shares two common neighbors
        for u in range(10):
            for v in range(u + 1, 10):
                assert len(common_neighbors(petersen, u, v)) <= 1

    def test_triangle_c4_free(self, triangle):
        assert find_four_cycle(triangle) is None

    def test_agrees_with_pairwise_rule_exhaustively(self):
        for g in enumerate_small(4):
            found = find_four_cycle(g)
            pairwise = any(
                len(common_neighbors(g, u, v)) >= 2 for u in range(4) for v in range(u + 1, 4)
            )
            assert (found is not None) == pairwise
            if found is not None:
                assert found.validates_in(g)

    def test_agrees_with_brute_force_on_samples(self):
        for i, g in enumerate(enumerate_small(5)):
            if i % 37:  # sampled sweep to keep the suite quick
                continue
            assert (find_four_cycle(g) is not None) == brute_has_c4(g)

    def test_deterministic_witness(self):
        g = build(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 3)])
        c1 = find_four_cycle(g)
        c2 = find_four_cycle(build(6, [(5, 3), (4, 5), (2, 4), (3, 0), (2, 3), (1, 2), (0, 1)]))
        assert c1 == c2


class TestInduced:
    def test_petersen_outer_is_5cycle(self, petersen):
        sub, index = induced(petersen, range(5))
        assert sub.n == 5 and sub.m == 5
        assert all(sub.degree(v) == 2 for v in range(5))
        assert sub.has_edge(index[0], index[1]) and sub.has_edge(index[4], index[0])

    def test_whole_set_identity(self, petersen):
        sub, index = induced(petersen, range(10))
        assert sub == petersen
        assert index == {v: v for v in range(10)}

    def test_empty_set(self, petersen):
        sub, index = induced(petersen, [])
        assert sub.n == 0 and sub.m == 0 and index == {}

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_preserves_adjacency(self, data):
        n = data.draw(st.integers(2, 8))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        g = build(n, edges)
        s = data.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n))
        sub, index = induced(g, s)
        for u in s:
            for v in s:
                if u != v:
                    assert g.has_edge(u, v) == sub.has_edge(index[u], index[v])


class TestDegreeIn:
    def test_triangle_examples(self, triangle):
        assert degree_in(triangle, 0, {1, 2}) == 2
        assert degree_in(triangle, 0, {0}) == 0

    def test_petersen_full_set(self, petersen):
        assert all(degree_in(petersen, v, range(10)) == 3 for v in range(10))

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_partition_sum(self, data):
        n = data.draw(st.integers(1, 8))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)) if pairs else st.just([]))
        g = build(n, edges)
        a_side = set(data.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n)))
        b_side = set(range(n)) - a_side
        for v in range(n):
            assert degree_in(g, v, a_side) + degree_in(g, v, b_side) == g.degree(v)
