import pytest

from uniqdim.common.exceptions import ClaimFalsifiedError, ConstructionError
from uniqdim.common.paths import base6_fixture_path
from uniqdim.constructions.base6 import find_base6, search_base6
from uniqdim.constructions.families import (
    ConstructedGraph,
    construct_3k,
    construct_5k_half,
    construct_k_plus_3k,
    construct_order9,
    extend_by_path,
    five_halves_order,
    join_identify,
    tuple_vertex,
    universal_vertex,
    verify_constructed,
)
from uniqdim.graphs.core import degree, diameter, distances, gamma_mask, max_degree
from uniqdim.graphs.formats import emit_graph6, parse_graph6
from uniqdim.solver.basis import count_bases, iter_bases
from uniqdim.solver.resolving import is_resolving, representation
from uniqdim.verifier.checks import Verdict, verify_extremal


@pytest.fixture(scope="module")
def base6():
    return find_base6()


class TestThreeK:
    def test_k2_edges(self):
        c = construct_3k(2)
        assert c.graph.edges() == [
            (0, 2), (0, 3), (1, 3), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
        ]
        assert c.designated_basis == (0, 1)
        assert c.labels[:3] == ('u1', 'u2', 'w1')

    @pytest.mark.parametrize("k", range(2, 6))
    def test_verified(self, k):
        c = construct_3k(k)
        report = verify_constructed(c)
        assert c.n == 3 * k
        assert report.bases == (tuple(range(k)),)

    @pytest.mark.parametrize("k", [1, 22])
    def test_out_of_range(self, k):
        with pytest.raises(ConstructionError):
            construct_3k(k)


class TestKPlus3K:
    def test_k2(self):
        c = construct_k_plus_3k(2)
        g = c.graph
        d = distances(g)
        assert g.n == 11
        assert d[tuple_vertex(2, (3, 3))][0] == 3
        assert representation(d, tuple_vertex(2, (1, 3)), [0, 1]) == (1, 3)
        verify_constructed(c)

    def test_every_tuple_is_its_own_representation(self):
        k = 2
        d = distances(construct_k_plus_3k(k).graph)
        for t in [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)]:
            assert representation(d, tuple_vertex(k, t), [0, 1]) == t

    def test_k3(self):
        c = construct_k_plus_3k(3)
        g = c.graph
        d = distances(g)
        assert g.n == 30
        assert diameter(g, d) == 3
        for u in range(3):
            assert gamma_mask(d, u, 3).bit_count() >= 9
        for w in range(3, 30):
            assert gamma_mask(d, w, 3).bit_count() <= 3
        verify_constructed(c)
        results = {r.check_id: r.verdict for r in verify_extremal(g)}
        assert results == {'extremal_diameter': Verdict.PASS, 'extremal_gamma': Verdict.PASS}

    def test_above_cap(self):
        with pytest.raises(ConstructionError):
            construct_k_plus_3k(4)


class TestOrder9:
    def test_verified(self):
        c = construct_order9()
        verify_constructed(c)
        assert max_degree(c.graph) == 8
        assert universal_vertex(c) == 8

    def test_metadata_line(self):
        assert construct_order9().metadata_line() == "# family=order9 k=3 m=0 n=9"


class TestBase6:
    def test_properties(self, base6):
        g = base6.graph
        assert g.n == 6
        assert diameter(g) == 2
        assert max_degree(g) == 5
        assert count_bases(g) == (2, 1)
        assert universal_vertex(base6) not in base6.designated_basis
        verify_constructed(base6)

    def test_fixture_written_and_reloaded(self, base6):
        path = base6_fixture_path()
        assert path.exists()
        lines = [l for l in path.read_text(encoding='utf-8').splitlines() if not l.startswith('#')]
        assert lines == [emit_graph6(base6.graph)]
        assert parse_graph6(lines[0]) == base6.graph

    def test_search_is_deterministic(self, base6):
        assert search_base6().graph == base6.graph


class TestJoin:
    def test_base6_pair(self, base6):
        c = join_identify(base6, base6)
        assert c.n == 11
        assert degree(c.graph, universal_vertex(base6)) == 10
        assert c.labels[universal_vertex(base6)] == 'v0'
        report = verify_constructed(c)
        assert report.dimension == 4

    def test_base6_with_order9(self, base6):
        c = join_identify(base6, construct_order9())
        assert c.n == 14
        assert max_degree(c.graph) == 13
        verify_constructed(c)

    def test_needs_universal_vertex(self, base6):
        with pytest.raises(ConstructionError):
            join_identify(construct_3k(3), base6)


class TestFiveHalves:
    @pytest.mark.parametrize("k, order", [(2, 6), (3, 9), (4, 11), (5, 14)])
    def test_orders(self, k, order):
        assert five_halves_order(k) == order
        c = construct_5k_half(k)
        assert c.n == order
        assert c.family == 'fivehalves'
        verify_constructed(c)

    def test_k1_rejected(self):
        with pytest.raises(ConstructionError):
            construct_5k_half(1)


class TestExtension:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_order9_extended(self, m):
        c = extend_by_path(construct_order9(), m)
        assert c.n == 9 + m
        assert c.params['m'] == m
        verify_constructed(c)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_base6_extended(self, base6, m):
        c = extend_by_path(base6, m)
        assert c.n == 6 + m
        report = verify_constructed(c)
        assert report.dimension == 2
        assert report.bases == (base6.designated_basis,)

    @pytest.mark.parametrize("m", range(1, 7))
    @pytest.mark.parametrize("prefer", ['lowest', 'highest'])
    def test_base6_unique_for_every_anchor(self, base6, m, prefer):
        for u in base6.designated_basis:
            c = extend_by_path(base6, m, u=u, prefer=prefer)
            assert count_bases(c.graph, limit=2) == (2, 1)
            assert next(iter_bases(c.graph)) == base6.designated_basis

    def test_path_representations(self):
        base = construct_order9()
        c = extend_by_path(base, 4)
        d = distances(c.graph)
        v0 = c.params['v0']
        r0 = representation(d, v0, base.designated_basis)
        for j in range(1, 5):
            rj = representation(d, 9 + j - 1, base.designated_basis)
            assert rj == tuple(x + j for x in r0)

    @pytest.mark.parametrize("u", [0, 1, 2])
    @pytest.mark.parametrize("prefer", ['lowest', 'highest'])
    def test_basis_stays_resolving(self, u, prefer):
        c = extend_by_path(construct_order9(), 3, u=u, prefer=prefer)
        assert is_resolving(distances(c.graph), c.designated_basis)

    def test_extend_twice_accumulates(self):
        c = extend_by_path(extend_by_path(construct_3k(2), 2), 3)
        assert c.params['m'] == 5
        assert c.n == 11
        verify_constructed(c)

    @pytest.mark.parametrize("kwargs", [{'m': 0}, {'m': 2, 'u': 5}, {'m': 2, 'prefer': 'middle'}])
    def test_bad_arguments(self, kwargs):
        with pytest.raises(ConstructionError):
            extend_by_path(construct_order9(), **kwargs)


def test_falsified_claim_carries_witness():
    c = construct_order9()
    wrong = ConstructedGraph(
        graph=c.graph,
        designated_basis=(3, 4, 5),
        predicted=c.predicted,
        family='order9',
    )
    with pytest.raises(ClaimFalsifiedError) as exc_info:
        verify_constructed(wrong)
    assert exc_info.value.context['bases'] == ((0, 1, 2),)
    assert exc_info.value.context['graph6'] == emit_graph6(c.graph)
