import networkx as nx
import pytest

from src.model.errors import PreconditionError
from src.model.gallery import (
    blowup,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty_graph,
    is_tournament,
    path,
    random_tournament,
    reflexivized_tournament,
    star,
    transitive_tournament,
)
from src.model.structure import Structure, is_graph
from src.util.graphs import edges, to_networkx


class TestNamedGraphs:
    def test_cycle(self, c5):
        assert edges(c5) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        assert is_graph(c5)

    def test_path_and_star(self):
        assert edges(path(3)) == [(0, 1), (1, 2)]
        assert edges(star(3)) == [(0, 1), (0, 2), (0, 3)]
        assert star(0) == empty_graph(1)

    def test_complete(self, k3):
        assert k3.tuple_count() == 6
        assert complete(1) == empty_graph(1)

    @pytest.mark.parametrize(
        "build, n", [(cycle, 2), (path, 0), (complete, -1), (star, -1)]
    )
    def test_rejects_bad_orders(self, build, n):
        with pytest.raises(PreconditionError):
            build(n)

    def test_disjoint_union(self):
        two_edges = disjoint_union([complete(2), complete(2)])
        assert two_edges == Structure.graph(4, [(0, 1), (2, 3)])
        with pytest.raises(PreconditionError):
            disjoint_union([])


class TestBlowup:
    def test_edge_blowup_is_complete_bipartite(self):
        g = blowup(complete(2), [2, 3])
        assert g == complete_multipartite([2, 3])
        assert nx.is_isomorphic(to_networkx(g), nx.complete_bipartite_graph(2, 3))

    def test_clouds_are_independent(self, c5):
        g = blowup(c5, [2, 1, 1, 1, 1])
        assert g.domain == 6
        assert not g.holds(0, (0, 1))
        assert g.holds(0, (0, 2)) and g.holds(0, (1, 2))

    def test_size_checks(self, c5, linear3):
        with pytest.raises(PreconditionError):
            blowup(c5, [1, 1])
        with pytest.raises(PreconditionError):
            blowup(c5, [1, 1, 0, 1, 1])
        with pytest.raises(PreconditionError):
            blowup(linear3, [1, 1, 1])


class TestTournaments:
    def test_transitive_tournament(self, linear3):
        assert transitive_tournament(3) == linear3
        assert is_tournament(linear3)
        assert linear3.relation(0) == [(0, 1), (0, 2), (1, 2)]

    def test_graphs_are_not_tournaments(self, k3):
        assert not is_tournament(k3)
        assert not is_tournament(Structure.binary(3, [(0, 1), (1, 2)]))

    def test_random_tournament_is_seeded(self):
        assert random_tournament(6, seed=3) == random_tournament(6, seed=3)
        assert is_tournament(random_tournament(6, seed=3))

    def test_random_tournament_default_seed(self, fresh_config):
        fresh_config.override(DEFAULT_SEED=11)
        assert random_tournament(5) == random_tournament(5, seed=11)

    def test_reflexivized_tournament(self):
        s = reflexivized_tournament(4, [1, 3])
        assert s.relation(0) == [(0, 2), (1, 1), (3, 3)]
        assert is_tournament(s, [0, 2])
        assert not is_tournament(s)

    def test_reflexivized_tournament_with_seed(self):
        s = reflexivized_tournament(5, [0], seed=2)
        assert s.holds(0, (0, 0))
        assert is_tournament(s, range(1, 5))

    def test_loops_must_lie_in_the_domain(self):
        with pytest.raises(PreconditionError):
            reflexivized_tournament(3, [3])
