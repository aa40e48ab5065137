from __future__ import annotations

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from c4part import build, deficiency_set, f_core, is_degenerate, minimal_good
from c4part.constructions import enumerate_small


def all_good_subsets(g, s, f):
    """Brute-force list of f-good subsets of s (independent oracle)."""
    s = sorted(s)
    out = []
    for r in range(1, len(s) + 1):
        for combo in itertools.combinations(s, r):
            cset = set(combo)
            if all(len(g.adj[v] & cset) >= f[v] for v in combo):
                out.append(cset)
    return out


class TestFCore:
    def test_triangle_all_survive(self, triangle):
        assert f_core(triangle, range(3), [2, 2, 2]) == {0, 1, 2}

    def test_path_cascades_to_empty(self, path3):
        assert f_core(path3, range(3), [2, 2, 2]) == set()

    def test_petersen_3_regular(self, petersen):
        assert f_core(petersen, range(10), [3] * 10) == set(range(10))

    def test_demand_above_order_collapses(self, petersen):
        assert f_core(petersen, range(10), [11] * 10) == set()

    def test_core_equals_union_of_good_subsets_exhaustive(self):
        # every graph on 4 vertices, every subset, f in {1, 2}
        for g in enumerate_small(4):
            for f_val in (1, 2):
                f = [f_val] * 4
                for r in range(5):
                    for s in itertools.combinations(range(4), r):
                        goods = all_good_subsets(g, s, f)
                        union = set().union(*goods) if goods else set()
                        assert f_core(g, s, f) == union

    def test_core_union_property_on_petersen(self, petersen):
        f = [2] * 10
        goods = all_good_subsets(petersen, range(7), f)
        union = set().union(*goods) if goods else set()
        assert f_core(petersen, range(7), f) == union

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_order_independence(self, data):
        n = data.draw(st.integers(1, 9))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)) if pairs else st.just([]))
        g = build(n, edges)
        f = data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
        s = set(data.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n)))

        # reference peel scanning descending instead of the worklist order
        alive = set(s)
        changed = True
        while changed:
            changed = False
            for v in sorted(alive, reverse=True):
                if len(g.adj[v] & alive) < f[v]:
                    alive.discard(v)
                    changed = True
        assert f_core(g, s, f) == alive


class TestIsDegenerate:
    def test_path_examples(self, path3, triangle):
        assert is_degenerate(path3, range(3), [2, 2, 2])
        assert not is_degenerate(triangle, range(3), [2, 2, 2])

    def test_empty_set_vacuous(self, petersen):
        assert is_degenerate(petersen, [], [2] * 10)

    def test_matches_subset_oracle_exhaustive(self):
        for g in enumerate_small(4):
            for f_val in (1, 2, 3):
                f = [f_val] * 4
                for r in range(5):
                    for s in itertools.combinations(range(4), r):
                        assert is_degenerate(g, s, f) == (not all_good_subsets(g, s, f))


class TestMinimalGood:
    def test_petersen_minimal_2good_is_5cycle(self, petersen):
        m = minimal_good(petersen, range(10), [2] * 10)
        assert m is not None and len(m) == 5
        # induces a 5-cycle: 2-regular and connected
        assert all(len(petersen.adj[v] & m) == 2 for v in m)
        seen = {min(m)}
        frontier = [min(m)]
        while frontier:
            v = frontier.pop()
            for w in petersen.adj[v] & m:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        assert seen == m

    def test_minimality_certified(self, petersen):
        m = minimal_good(petersen, range(10), [2] * 10)
        for x in m:
            assert f_core(petersen, m - {x}, [2] * 10) == set()

    def test_triangle_itself(self, triangle):
        assert minimal_good(triangle, range(3), [2] * 3) == {0, 1, 2}

    def test_path_has_none(self, path3):
        assert minimal_good(path3, range(3), [2] * 3) is None

    def test_exact_demand_vertex_always_exists(self, heawood):
        for f_val in (2, 3):
            m = minimal_good(heawood, range(14), [f_val] * 14)
            if m is not None:
                assert any(len(heawood.adj[v] & m) == f_val for v in m)

    def test_exhaustive_minimality_small(self):
        for g in enumerate_small(5):
            m = minimal_good(g, range(5), [2] * 5)
            if m is None:
                assert f_core(g, range(5), [2] * 5) == set()
            else:
                assert all(len(g.adj[v] & m) >= 2 for v in m)
                for x in m:
                    assert f_core(g, m - {x}, [2] * 5) == set()


class TestDeficiencySet:
    def test_triangle_pair(self, triangle):
        assert deficiency_set(triangle, {0, 1}, [2] * 3) == [(0, 1), (1, 1)]

    def test_petersen_none(self, petersen):
        assert deficiency_set(petersen, range(10), [3] * 10) == []

    def test_star_leaves_only(self):
        # leaves have in-set degree 1 against demand 2, so slack 1; the center is fine
        star = build(4, [(0, 1), (0, 2), (0, 3)])
        assert deficiency_set(star, range(4), [2] * 4) == [(1, 1), (2, 1), (3, 1)]
