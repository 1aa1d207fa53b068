import random

import pytest
from hypothesis import given, settings

from matchcover.edges import (
    classify_all_edges,
    is_b_invariant,
    is_removable,
    is_solitary,
    vertex_tallies,
)
from matchcover.families import moebius_ladder, prism, wheel
from matchcover.graph import delete_edge, delete_vertices
from matchcover.matching import count_perfect_matchings
from matchcover.structure import brick_count, is_matching_covered

from strategies import graphs, random_matching_covered


def spokes(n):
    return [(0, v) for v in range(1, n)]


def rims(n):
    return [tuple(sorted((v, v % (n - 1) + 1))) for v in range(1, n)]


class TestPredicates:
    def test_wheel6(self, w6):
        for e in spokes(6):
            assert is_removable(w6, e) and is_b_invariant(w6, e) and is_solitary(w6, e)
        for e in rims(6):
            assert not is_removable(w6, e) and not is_b_invariant(w6, e) and not is_solitary(w6, e)

    def test_k4(self, k4):
        for e in k4.edges:
            assert not is_removable(k4, e)
            assert not is_b_invariant(k4, e)

    def test_w8_spoke(self):
        g = wheel(8)
        assert is_b_invariant(g, (0, 3))
        assert brick_count(delete_edge(g, (0, 3))) == 1

    def test_c6_all_solitary(self, c6):
        assert all(is_solitary(c6, e) for e in c6.edges)

    def test_unknown_edge(self, w6):
        with pytest.raises(ValueError):
            is_removable(w6, (1, 3))
        with pytest.raises(ValueError):
            is_b_invariant(w6, (1, 3))


class TestClassification:
    def test_wheel6_table(self, w6):
        rows = {r.edge: r for r in classify_all_edges(w6)}
        for e in spokes(6):
            r = rows[e]
            assert (r.removable, r.b_invariant, r.solitary, r.pm_count) == (True, True, True, 1)
        for e in rims(6):
            r = rows[e]
            assert (r.removable, r.b_invariant, r.solitary, r.pm_count) == (False, False, False, 2)

    def test_k4(self, k4):
        rows = classify_all_edges(k4)
        assert len(rows) == 6
        assert all(r.in_some_pm and not r.removable for r in rows)

    def test_petersen(self, pete):
        rows = classify_all_edges(pete)
        assert all(r.in_some_pm and r.pm_count == 2 for r in rows)

    def test_edge_order_is_edge_index_order(self, pete):
        assert [r.edge for r in classify_all_edges(pete)] == list(pete.edges)

    def test_rejects_non_matching_covered(self):
        from matchcover.families import path

        with pytest.raises(ValueError):
            classify_all_edges(path(4))

    @pytest.mark.parametrize("g,expected", [(moebius_ladder(8), 4), (moebius_ladder(12), 6), (prism(10), 5)])
    def test_extremal_counts(self, g, expected):
        assert sum(r.b_invariant for r in classify_all_edges(g)) == expected == g.n // 2

    def test_agrees_with_single_edge_predicates(self):
        rng = random.Random(2)
        done = 0
        while done < 40:
            g = random_matching_covered(rng, rng.choice([4, 6, 8]), 0.4)
            if g is None:
                continue
            done += 1
            for r in classify_all_edges(g):
                assert r.removable == is_removable(g, r.edge) == is_matching_covered(delete_edge(g, r.edge))
                assert r.b_invariant == is_b_invariant(g, r.edge)
                assert r.solitary == is_solitary(g, r.edge)

    @settings(max_examples=100)
    @given(graphs(min_order=2, max_order=8, even=True))
    def test_definition_chain(self, g):
        if not is_matching_covered(g):
            return
        for r in classify_all_edges(g):
            assert not r.b_invariant or r.removable
            assert not r.solitary or r.in_some_pm
            assert r.solitary == (r.pm_count == 1)
            assert r.in_some_pm == (r.pm_count >= 1)
            assert r.solitary == (count_perfect_matchings(delete_vertices(g, r.edge)) == 1)


class TestTallies:
    def test_wheel6(self, w6):
        t = vertex_tallies(w6)
        assert t[0].nonremovable == 0
        for v in range(1, 6):
            assert t[v].nonremovable == 2
            assert t[v].nonsolitary == 2

    def test_reuses_classification(self, w6):
        rows = classify_all_edges(w6)
        assert vertex_tallies(w6, rows) == vertex_tallies(w6)
