from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import complete_graph, cycle_graph, path_graph, star_graph
from uniqdim.common.exceptions import DisconnectedGraphError, SolverError
from uniqdim.constructions.families import construct_3k
from uniqdim.graphs.core import Graph, build_graph, distances, pair_index, twin_classes
from uniqdim.graphs.enumerate import enumerate_connected
from uniqdim.solver.basis import (
    all_bases,
    count_bases,
    greedy_hitting_set,
    hitting_sets_of_size,
    is_uniquely_dimensional,
    is_uniquely_k_dimensional,
    iter_bases,
    metric_dimension,
    order_lower_bound,
    twin_lower_bound,
)
from uniqdim.solver.oracle import naive_all_bases, naive_metric_dimension
from uniqdim.solver.resolving import (
    hits_all,
    is_resolving,
    pair_distinguishers,
    representation,
    resolves_subset,
)


class TestRepresentation:
    def test_order9_w6(self, order9):
        # w6 is adjacent to every u_i
        assert representation(distances(order9), 8, [0, 1, 2]) == (1, 1, 1)

    def test_landmark_has_zero_coordinate(self, p4):
        assert representation(distances(p4), 2, [0, 2]) == (2, 0)

    def test_resolving_cases(self, p4, c4, order9):
        assert is_resolving(distances(p4), [0])
        assert not is_resolving(distances(p4), [1])
        assert not is_resolving(distances(c4), [0, 2])
        assert is_resolving(distances(c4), [0, 1])
        assert is_resolving(distances(order9), [0, 1, 2])

    def test_resolves_subset(self, c4):
        d = distances(c4)
        assert resolves_subset(d, [0], [0, 1])
        assert not resolves_subset(d, [0], [1, 3])

    def test_distinguishers_match_resolving(self, c5):
        d = distances(c5)
        pd = pair_distinguishers(d)
        for k in range(1, 4):
            for w in combinations(range(5), k):
                assert hits_all(pd, w) == is_resolving(d, w)

    def test_distinguisher_lookup(self, p4):
        pd = pair_distinguishers(distances(p4))
        for (u, v), mask in zip(pd.pairs, pd.masks):
            assert pd.distinguisher(u, v) == mask
            assert pd.distinguisher(v, u) == mask
            assert mask >> u & 1 and mask >> v & 1


class TestMetricDimension:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_paths(self, n):
        assert metric_dimension(path_graph(n)) == 1

    @pytest.mark.parametrize("n", range(3, 10))
    def test_cycles(self, n):
        assert metric_dimension(cycle_graph(n)) == 2

    @pytest.mark.parametrize("n", range(2, 7))
    def test_complete(self, n):
        assert metric_dimension(complete_graph(n)) == n - 1

    def test_star(self):
        assert metric_dimension(star_graph(4)) == 3

    @pytest.mark.parametrize("k", range(2, 6))
    def test_3k_family(self, k):
        assert metric_dimension(construct_3k(k).graph) == k

    def test_k1(self):
        assert metric_dimension(build_graph(1, [])) == 0

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            metric_dimension(build_graph(4, [(0, 1), (2, 3)]))


@st.composite
def connected_masks(draw, n=7):
    """Order-n graph from a drawn edge mask joined with a Hamiltonian path over a drawn order."""
    mask = draw(st.integers(0, (1 << n * (n - 1) // 2) - 1))
    order = draw(st.permutations(range(n)))
    for a, b in zip(order, order[1:]):
        mask |= 1 << pair_index(a, b)
    return Graph.from_edge_mask(n, mask)


class TestAgainstOracle:
    @staticmethod
    def _compare(g):
        assert list(iter_bases(g)) == naive_all_bases(g)
        assert metric_dimension(g) == naive_metric_dimension(g)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_all_labeled(self, n):
        for g in enumerate_connected(n):
            self._compare(g)

    def test_order6_classes(self):
        for g in enumerate_connected(6, dedup=True):
            self._compare(g)

    @pytest.mark.slow
    def test_order6_labeled(self):
        for g in enumerate_connected(6):
            self._compare(g)

    @settings(max_examples=150, deadline=None)
    @given(connected_masks())
    def test_order7_sample(self, g):
        report = all_bases(g)
        assert report.bases == tuple(naive_all_bases(g))
        assert metric_dimension(g) == naive_metric_dimension(g) == report.dimension
        assert is_uniquely_dimensional(g) == (len(naive_all_bases(g)) == 1)


class TestHittingSets:
    def test_small_family(self):
        sets = (0b011, 0b110)
        assert list(hitting_sets_of_size(sets, 3, 1)) == [0b010]
        assert list(hitting_sets_of_size(sets, 3, 2)) == [0b011, 0b101, 0b110]
        assert list(hitting_sets_of_size(sets, 3, 0)) == []

    @pytest.mark.parametrize("n", range(2, 6))
    def test_sound_and_complete(self, n):
        for g in enumerate_connected(n, dedup=True):
            pd = pair_distinguishers(distances(g))
            for k in range(n + 1):
                found = set(hitting_sets_of_size(pd.minimal, n, k))
                for w in combinations(range(n), k):
                    mask = sum(1 << v for v in w)
                    assert (mask in found) == pd.hits_all(mask)

    def test_greedy_hits_everything(self, order9):
        pd = pair_distinguishers(distances(order9))
        assert pd.hits_all(greedy_hitting_set(pd.minimal))


class TestBounds:
    @pytest.mark.parametrize("n, d, expected", [
        (4, 3, 1),
        (11, 3, 2),
        (30, 3, 3),
        (1, 0, 0),
        (5, 1, 4),
        (9, 2, 3),
    ])
    def test_order_lower_bound(self, n, d, expected):
        assert order_lower_bound(n, d) == expected

    @pytest.mark.parametrize("n", range(2, 6))
    def test_lower_bounds_hold(self, n):
        for g in enumerate_connected(n):
            d = distances(g)
            k = metric_dimension(g, d)
            diam = max(max(row) for row in d.dist)
            assert twin_lower_bound(twin_classes(g)) <= k
            assert order_lower_bound(n, diam) <= k
            assert k <= n - diam

    @pytest.mark.parametrize("n", range(2, 6))
    def test_order_bound_pruning_same_dimension(self, n):
        for g in enumerate_connected(n):
            d = distances(g)
            assert metric_dimension(g, d, order_bound=True) == metric_dimension(g, d, order_bound=False)

    def test_order_bound_pruning_off_by_default(self, monkeypatch, c6):
        monkeypatch.setattr("uniqdim.solver.basis.order_lower_bound", lambda n, d: n)
        assert metric_dimension(c6) == 2
        with pytest.raises(SolverError):
            metric_dimension(c6, order_bound=True)

    def test_order_bound_pruning_setting(self, settings_env, monkeypatch, c6, order9):
        assert is_uniquely_k_dimensional(order9, 3)
        settings_env(ORDER_BOUND_PRUNING="true")
        monkeypatch.setattr("uniqdim.solver.basis.order_lower_bound", lambda n, d: n)
        with pytest.raises(SolverError):
            metric_dimension(c6)
        assert not is_uniquely_k_dimensional(order9, 3)
        assert metric_dimension(c6, order_bound=False) == 2

    @pytest.mark.parametrize("n", range(2, 7))
    def test_unique_graphs_have_no_twins(self, n):
        for g in enumerate_connected(n, dedup=True):
            if is_uniquely_dimensional(g):
                assert not twin_classes(g).has_twins


class TestAllBases:
    def test_triangle(self, k3):
        report = all_bases(k3)
        assert report.dimension == 2
        assert report.bases == ((0, 1), (0, 2), (1, 2))
        assert report.randomly_k is True
        assert not report.unique

    def test_k1_convention(self):
        report = all_bases(build_graph(1, []))
        assert report.trivial
        assert report.dimension == 0
        assert report.bases == ((),)
        assert report.unique

    def test_order9_unique(self, order9):
        report = all_bases(order9)
        assert report.bases == ((0, 1, 2),)
        assert report.unique
        assert report.randomly_k is False

    def test_count_bases_stops_at_limit(self, k3):
        assert count_bases(k3, limit=2) == (2, 2)
        assert count_bases(k3) == (2, 3)

    def test_randomly_k_not_evaluated_above_cap(self, settings_env, k3):
        settings_env(RANDOMLY_K_MAX_ORDER=2)
        assert all_bases(k3).randomly_k is None
        assert all_bases(k3, evaluate_randomly_k=True).randomly_k is True

    def test_self_check_mode(self, settings_env, c6):
        settings_env(SELF_CHECK="true")
        report = all_bases(c6)
        assert report.dimension == 2
        assert report.count == len(naive_all_bases(c6))

    def test_logs_completion(self, caplog, c5):
        with caplog.at_level("INFO", logger="uniqdim.solver.basis"):
            all_bases(c5)
        assert any("Completed all_bases" in r.getMessage() for r in caplog.records)


class TestUniquelyKDimensional:
    def test_order9(self, order9):
        assert is_uniquely_k_dimensional(order9, 3)
        assert not is_uniquely_k_dimensional(order9, 2)
        assert not is_uniquely_k_dimensional(order9, 4)

    def test_not_unique(self, c5, k3):
        assert not is_uniquely_k_dimensional(c5, 2)
        assert not is_uniquely_k_dimensional(k3, 2)

    def test_k1(self):
        k1 = build_graph(1, [])
        assert is_uniquely_k_dimensional(k1, 0)
        assert not is_uniquely_k_dimensional(k1, 1)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_agrees_with_enumeration(self, n):
        for g in enumerate_connected(n, dedup=True):
            k, count = count_bases(g)
            assert is_uniquely_k_dimensional(g, k) == (count == 1)
            assert not is_uniquely_k_dimensional(g, k + 1)
