import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from src.config.constant import CensusWhat, SearchMode
from src.model.census import census
from src.model.characterizations import (
    Deg2Classification,
    HensonDefect,
    blowup_certifies,
    classify_max_deg2,
    decompose_min_binary,
    every_vertex_in_kn1,
    henson_defects,
    is_maximal_knfree,
    is_minimal_connected,
    is_reflexivized_tournament,
    knfree_class,
    knfree_duality,
    knfree_duality_sides,
    local_bounds_member,
    max_omit_full_check,
    min_omit_empty_check,
    omit_class,
    spanning_tree,
)
from src.model.class_spec import member
from src.model.errors import PreconditionError
from src.model.extremal import is_maximal, is_minimal
from src.model.gallery import (
    blowup,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty_graph,
    path,
    star,
    transitive_tournament,
)
from src.model.structure import (
    Signature,
    Structure,
    complement,
    diagonal,
    full_mask,
    graph_complement,
)
from src.util.graphs import from_networkx, to_networkx
from tests.strategies import structures


def atlas(max_nodes):
    """Every graph on 1..max_nodes vertices, one per isomorphism class"""
    return [
        from_networkx(g)
        for g in nx.graph_atlas_g()
        if 0 < g.number_of_nodes() <= max_nodes
    ]


def all_binary(n):
    sig = Signature.binary()
    return [Structure(sig, n, (mask,)) for mask in range(full_mask(n, 2) + 1)]


def degree2_graphs(n):
    """Every graph on n vertices with all degrees <= 2, one per isomorphism class"""
    pieces = [(cycle, k) for k in range(3, n + 1)]
    pieces += [(path, k) for k in range(1, n + 1)]

    def parts(left, start):
        if left == 0:
            yield ()
            return
        for i in range(start, len(pieces)):
            if pieces[i][1] <= left:
                for rest in parts(left - pieces[i][1], i):
                    yield (pieces[i],) + rest

    for combo in parts(n, 0):
        yield disjoint_union([build(k) for build, k in combo])


def cloud_sizes(parts, total):
    """Size vectors in {1, 2, 3}^parts summing to at most total"""
    return [
        sizes
        for sizes in itertools.product((1, 2, 3), repeat=parts)
        if sum(sizes) <= total
    ]


class TestMaximalKnFree:
    @pytest.mark.parametrize(
        "g, n, expected",
        [
            (cycle(5), 3, True),
            (path(4), 3, False),
            (complete(2), 3, True),
            (cycle(4), 3, True),
        ],
    )
    def test_examples(self, g, n, expected):
        assert is_maximal_knfree(g, n) == expected

    def test_preconditions(self, k3, c5, linear3):
        with pytest.raises(PreconditionError):
            is_maximal_knfree(k3, 3)
        with pytest.raises(PreconditionError):
            is_maximal_knfree(c5, 2)
        with pytest.raises(PreconditionError):
            is_maximal_knfree(linear3, 3)

    def test_agrees_with_the_generic_engine(self):
        triangle_free = knfree_class(3)
        for g in atlas(7):
            if not member(g, triangle_free):
                continue
            assert is_maximal_knfree(g, 3) == is_maximal(g, triangle_free).certified

    def test_agrees_for_k4(self):
        k4_free = knfree_class(4)
        for g in atlas(6):
            if member(g, k4_free):
                assert is_maximal_knfree(g, 4) == is_maximal(g, k4_free).certified

    @pytest.mark.parametrize(
        "g, n", [(cycle(5), 3), (complete_multipartite([2, 3]), 3), (complete(4), 5)]
    )
    def test_every_vertex_in_kn1(self, g, n):
        assert every_vertex_in_kn1(g, n)

    def test_every_vertex_needs_a_maximal_graph(self, p4):
        with pytest.raises(PreconditionError):
            every_vertex_in_kn1(p4, 3)
        with pytest.raises(PreconditionError):
            every_vertex_in_kn1(complete(2), 5)

    def test_property_holds_across_the_atlas(self):
        for g in atlas(6):
            for n in (3, 4):
                if g.domain < n - 1 or not member(g, knfree_class(n)):
                    continue
                if is_maximal_knfree(g, n):
                    assert every_vertex_in_kn1(g, n)


class TestBlowups:
    def test_edge_blowup(self):
        g = blowup(complete(2), [2, 3])
        assert g == complete_multipartite([2, 3])
        assert is_maximal_knfree(g, 3)

    def test_pentagon_blowup_is_maximal_and_not_bipartite(self, c5):
        g = blowup(c5, [2, 1, 1, 1, 1])
        assert blowup_certifies(c5, 3)
        assert is_maximal_knfree(g, 3)
        assert not nx.is_bipartite(to_networkx(g))

    @pytest.mark.parametrize(
        "n, sizes",
        [(n, sizes) for n in (3, 4) for sizes in cloud_sizes(n - 1, 6)],
    )
    def test_complete_graph_blowups_are_maximal(self, n, sizes):
        g = blowup(complete(n - 1), sizes)
        assert g.domain == sum(sizes)
        assert is_maximal_knfree(g, n)
        assert is_maximal(g, knfree_class(n)).certified

    def test_small_bases_are_refused(self):
        assert not blowup_certifies(empty_graph(1), 3)
        assert not blowup_certifies(complete(3), 3)
        assert not blowup_certifies(path(4), 3)

    def test_certified_blowups_are_maximal(self):
        for g in atlas(5):
            if blowup_certifies(g, 3):
                sizes = [1 + x % 2 for x in range(g.domain)]
                assert is_maximal_knfree(blowup(g, sizes), 3)


class TestDuality:
    def test_pentagon(self, c5):
        assert knfree_duality_sides(c5, 3) == (True, True)

    def test_path(self, p4):
        assert knfree_duality_sides(p4, 3) == (False, False)

    def test_two_triangles(self):
        two_triangles = disjoint_union([complete(3), complete(3)])
        assert knfree_duality_sides(graph_complement(two_triangles), 3) == (True, True)

    def test_across_the_atlas(self):
        for g in atlas(5):
            assert knfree_duality(g, 3)


class TestHenson:
    def test_pentagon_defects(self, c5):
        defects = henson_defects(c5, 3)
        assert defects[0] == HensonDefect((0, 2), ())
        assert HensonDefect((0, 1, 2), (0, 2)) in defects

    def test_single_vertex(self):
        defects = henson_defects(empty_graph(1), 3)
        assert HensonDefect((0,), ()) in defects
        assert HensonDefect((0,), (0,)) in defects

    def test_cap_limits_the_sets(self, c5, fresh_config):
        assert all(len(d.H) <= 2 for d in henson_defects(c5, 3, cap=2))
        fresh_config.override(HENSON_CAP=1)
        assert henson_defects(c5, 3) == []

    def test_k_must_sit_inside_h(self):
        with pytest.raises(ValueError):
            HensonDefect((0,), (1,))

    def test_dict_form(self):
        assert HensonDefect((0, 2), (2,)).to_dict() == {"H": [0, 2], "K": [2]}


class TestOmitting:
    def test_tournament_is_minimal(self, linear3):
        assert min_omit_empty_check(linear3, 2)
        assert max_omit_full_check(complement(linear3), 2)

    def test_loops_on_two_points_are_not_minimal(self):
        assert not min_omit_empty_check(diagonal(2), 2)

    def test_preconditions(self, antichain3):
        with pytest.raises(PreconditionError):
            min_omit_empty_check(antichain3, 2)
        with pytest.raises(PreconditionError, match="single relation symbol"):
            min_omit_empty_check(Structure.empty(Signature((1, 2)), 2), 2)
        with pytest.raises(PreconditionError):
            min_omit_empty_check(transitive_tournament(2), 0)

    @settings(max_examples=80, deadline=None)
    @given(structures(Signature.binary()))
    def test_checks_agree_with_the_generic_engine(self, s):
        for m in (2, 3):
            empty_omitted = omit_class(s.signature, m)
            if member(s, empty_omitted):
                expected = is_minimal(s, empty_omitted, SearchMode.EXACT).certified
                assert min_omit_empty_check(s, m) == expected
            full_omitted = omit_class(s.signature, m, full=True)
            if member(s, full_omitted):
                expected = is_maximal(s, full_omitted, SearchMode.EXACT).certified
                assert max_omit_full_check(s, m) == expected

    @pytest.mark.parametrize("n, count", [(1, 1), (2, 4), (3, 17)])
    def test_minimal_members_are_reflexivized_tournaments(self, catalog, n, count):
        expected = [s for s in all_binary(n) if is_reflexivized_tournament(s)]
        found = census(n, catalog("omit_empty_pair"), CensusWhat.MIN)
        assert found == sorted(expected, key=Structure.sort_key)
        assert len(found) == count

    @pytest.mark.slow
    def test_minimal_members_on_four_points(self, catalog):
        found = census(4, catalog("omit_empty_pair"), CensusWhat.MIN, workers=2)
        assert len(found) == 112
        assert all(is_reflexivized_tournament(s) for s in found)


class TestDecomposition:
    def test_tournament(self, linear3):
        parts = decompose_min_binary(linear3, 2)
        assert parts.loops == ()
        assert parts.orientation == linear3

    def test_loop_and_pair(self):
        s = Structure.binary(3, [(0, 1), (2, 2)])
        parts = decompose_min_binary(s, 2)
        assert parts.loops == (2,)
        assert parts.orientation == Structure.binary(3, [(0, 1)])
        assert parts.reconstruct() == s
        assert parts.to_dict()["loops"] == [2]

    def test_non_minimal_input(self):
        with pytest.raises(PreconditionError):
            decompose_min_binary(diagonal(3), 2)

    def test_subset_size_range(self, linear3):
        with pytest.raises(PreconditionError):
            decompose_min_binary(linear3, 4)

    @pytest.mark.parametrize("m", [2, 3])
    def test_every_minimal_member_decomposes(self, m):
        spec = omit_class(Signature.binary(), m)
        for s in census(3, spec, CensusWhat.MIN):
            assert decompose_min_binary(s, m).reconstruct() == s


class TestDegreeTwo:
    def test_triangle_and_edge(self):
        g = disjoint_union([complete(3), complete(2)])
        result = classify_max_deg2(g)
        assert result.maximal
        assert (result.cycles, result.tail) == ((3,), "K2")

    def test_path_is_not_maximal(self, p4):
        expected = Deg2Classification(Deg2Classification.NOT_MAXIMAL)
        assert classify_max_deg2(p4) == expected

    def test_single_vertex(self):
        result = classify_max_deg2(empty_graph(1))
        assert result.maximal
        assert (result.cycles, result.tail) == ((), "K1")

    def test_cycles_only(self, c5):
        result = classify_max_deg2(disjoint_union([c5, complete(3)]))
        assert result.to_dict() == {
            "kind": "maximal",
            "decomposition": {"cycles": [3, 5], "tail": "empty"},
            "finite_only": True,
        }

    def test_degree_precondition(self):
        with pytest.raises(PreconditionError):
            classify_max_deg2(star(3))

    def test_agrees_with_the_generic_engine(self, catalog):
        deg2 = catalog("deg2")
        for g in atlas(7):
            if member(g, deg2):
                result = classify_max_deg2(g)
                assert result.maximal == is_maximal(g, deg2).certified
                if result.maximal:
                    assert result.tail in Deg2Classification.TAILS

    @pytest.mark.slow
    def test_agrees_with_the_generic_engine_on_eight_vertices(self, catalog):
        deg2 = catalog("deg2")
        graphs = list(degree2_graphs(8))
        assert sum(classify_max_deg2(g).maximal for g in graphs) > 1
        for g in graphs:
            assert g.domain == 8 and member(g, deg2)
            result = classify_max_deg2(g)
            assert result.maximal == is_maximal(g, deg2).certified
            if result.maximal:
                assert result.tail in Deg2Classification.TAILS


class TestConnectivity:
    def test_spanning_tree(self):
        tree = spanning_tree(cycle(4))
        assert tree.tuple_count() == 6
        assert nx.is_tree(to_networkx(tree))

    def test_minimal_connected_graphs_are_trees(self, k3, p4):
        assert not is_minimal_connected(k3)
        assert is_minimal_connected(p4)
        assert is_minimal_connected(star(3))

    def test_disconnected_input(self):
        with pytest.raises(PreconditionError):
            spanning_tree(empty_graph(2))

    def test_agrees_with_the_generic_engine(self, catalog):
        connected = catalog("connected_graph")
        for g in atlas(6):
            if member(g, connected):
                assert is_minimal_connected(g) == is_minimal(g, connected).certified


class TestLocalBounds:
    def test_pentagon(self, c5):
        assert local_bounds_member(c5, [3], 1, 2)
        assert not local_bounds_member(complete(4), [3], 1, 2)

    def test_bad_bounds(self, c5):
        with pytest.raises(PreconditionError):
            local_bounds_member(c5, [3], 2, 1)

    def test_agrees_with_membership(self, catalog):
        ramsey = catalog("ramsey12")
        for g in atlas(6):
            assert local_bounds_member(g, [3], 1, 2) == member(g, ramsey)
