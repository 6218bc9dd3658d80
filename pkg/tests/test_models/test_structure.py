import pytest
from hypothesis import given, settings

from src.model.errors import (
    DomainMismatchError,
    InvalidStructureError,
    SignatureMismatchError,
)
from src.model.gallery import complete, cycle, empty_graph, path
from src.model.structure import (
    DomainMap,
    Signature,
    Structure,
    check_same_shape,
    complement,
    decode,
    diagonal,
    direct_image,
    encode,
    graph_complement,
    induced_substructure,
    intersect,
    inverse_image,
    is_graph,
    is_subinterpretation,
    tuples_over,
    union,
)
from tests.strategies import permutations, structure_pairs, structures


class TestCoding:
    def test_codes_follow_lexicographic_order(self):
        table = tuples_over(3, 2)
        assert list(table) == sorted(table)
        assert encode((1, 2), 3) == 5
        assert decode(5, 3, 2) == (1, 2)

    def test_relation_lists_tuples_in_order(self):
        s = Structure.binary(3, [(2, 0), (0, 1), (1, 1)])
        assert s.relation(0) == [(0, 1), (1, 1), (2, 0)]
        assert s.tuple_count() == 3


class TestConstruction:
    def test_rejects_tuple_outside_domain(self):
        with pytest.raises(InvalidStructureError):
            Structure.binary(2, [(0, 2)])

    def test_rejects_wrong_arity(self):
        with pytest.raises(InvalidStructureError):
            Structure.binary(2, [(0, 1, 1)])

    def test_rejects_empty_domain(self):
        with pytest.raises(InvalidStructureError):
            Structure.empty(Signature.binary(), 0)

    def test_rejects_bad_signature(self):
        with pytest.raises(InvalidStructureError):
            Signature(())
        with pytest.raises(InvalidStructureError):
            Signature((0,))

    def test_graph_rejects_loop(self):
        with pytest.raises(InvalidStructureError):
            Structure.graph(2, [(1, 1)])

    def test_from_dict_rejects_duplicate_tuple(self):
        data = {"signature": [2], "domain": 2, "relations": [[[0, 1], [0, 1]]]}
        with pytest.raises(InvalidStructureError):
            Structure.from_dict(data)

    def test_from_dict_rejects_missing_field(self):
        with pytest.raises(InvalidStructureError):
            Structure.from_dict({"signature": [2], "relations": [[]]})

    def test_dict_form(self, linear3):
        data = linear3.to_dict()
        assert data == {
            "signature": [2],
            "domain": 3,
            "relations": [[[0, 1], [0, 2], [1, 2]]],
        }
        assert Structure.from_dict(data) == linear3

    def test_str(self):
        assert str(Structure.binary(2, [(0, 1)])) == "<n=2 (0,1)>"
        assert str(Structure.empty(Signature((1, 2)), 1)) == "<n=1 -; ->"

    def test_constants(self):
        sig = Signature((1, 2))
        assert Structure.full(sig, 2).tuple_count() == 2 + 4
        assert Structure.empty(sig, 2).tuple_count() == 0
        assert diagonal(3).relation(0) == [(0, 0), (1, 1), (2, 2)]


class TestComplement:
    def test_complement_of_single_loop(self):
        s = Structure.binary(2, [(0, 0)])
        assert complement(s).relation(0) == [(0, 1), (1, 0), (1, 1)]

    def test_complement_of_empty_is_full(self, binary):
        assert complement(Structure.empty(binary, 2)) == Structure.full(binary, 2)

    def test_complement_of_diagonal(self):
        assert complement(diagonal(3)) == complete(3)

    @given(structures())
    def test_complement_is_an_involution(self, s):
        assert complement(complement(s)) == s

    def test_graph_complement(self):
        assert graph_complement(complete(3)) == empty_graph(3)
        assert graph_complement(empty_graph(1)) == empty_graph(1)
        assert graph_complement(graph_complement(cycle(5))) == cycle(5)

    def test_graph_complement_needs_a_graph(self, linear3):
        with pytest.raises(InvalidStructureError):
            graph_complement(linear3)

    def test_is_graph(self, linear3):
        assert is_graph(cycle(4))
        assert not is_graph(linear3)
        assert not is_graph(diagonal(2))


class TestLattice:
    def test_union_with_empty(self, c5):
        assert union([c5, Structure.empty(c5.signature, 5)]) == c5

    def test_intersection_with_complement(self, c5):
        assert intersect([c5, complement(c5)]) == Structure.empty(c5.signature, 5)

    def test_union_of_chain_is_its_top(self):
        low = Structure.binary(3, [(0, 1)])
        high = Structure.binary(3, [(0, 1), (1, 2)])
        assert union([low, high]) == high

    def test_empty_family(self):
        with pytest.raises(InvalidStructureError):
            union([])

    @given(structure_pairs())
    def test_de_morgan(self, pair):
        a, b = pair
        assert complement(union([a, b])) == intersect([complement(a), complement(b)])
        assert complement(intersect([a, b])) == union([complement(a), complement(b)])

    @given(structure_pairs())
    def test_union_bounds(self, pair):
        a, b = pair
        assert is_subinterpretation(a, union([a, b]))
        assert is_subinterpretation(intersect([a, b]), b)

    def test_subinterpretation_examples(self, c5):
        assert is_subinterpretation(Structure.empty(c5.signature, 5), c5)
        assert is_subinterpretation(c5, c5)
        assert not is_subinterpretation(
            Structure.binary(2, [(0, 1)]), Structure.binary(2, [(1, 0)])
        )

    def test_shape_mismatch(self):
        with pytest.raises(SignatureMismatchError):
            check_same_shape(
                Structure.empty(Signature((1,)), 2), Structure.empty(Signature((2,)), 2)
            )
        with pytest.raises(DomainMismatchError):
            union([empty_graph(2), empty_graph(3)])


class TestImages:
    def test_identity_image(self, c5):
        assert direct_image(DomainMap.identity(5), c5) == c5
        assert inverse_image(DomainMap.identity(5), c5) == c5

    def test_transposition(self):
        swap = DomainMap.permutation([1, 0])
        edge = Structure.binary(2, [(0, 1)])
        assert direct_image(swap, edge) == Structure.binary(2, [(1, 0)])

    def test_collapsing_map(self):
        f = DomainMap(3, 1, (0, 0, 0))
        loop = Structure.binary(1, [(0, 0)])
        assert direct_image(f, path(3)) == loop
        assert inverse_image(f, loop) == Structure.full(Signature.binary(), 3)

    def test_domain_checks(self, c5):
        with pytest.raises(DomainMismatchError):
            direct_image(DomainMap.identity(4), c5)
        with pytest.raises(DomainMismatchError):
            inverse_image(DomainMap.identity(4), c5)

    @settings(max_examples=50)
    @given(structures(n=4), permutations(4))
    def test_bijective_images_undo_each_other(self, s, f):
        assert direct_image(f, inverse_image(f, s)) == s
        assert inverse_image(f, direct_image(f, s)) == s
        assert direct_image(f.inverse(), direct_image(f, s)) == s


class TestDomainMap:
    def test_rejects_values_outside_target(self):
        with pytest.raises(InvalidStructureError):
            DomainMap(2, 2, (0, 2))

    def test_rejects_non_permutation(self):
        with pytest.raises(InvalidStructureError):
            DomainMap.permutation([0, 0])

    def test_compose_and_inverse(self):
        f = DomainMap.permutation([1, 2, 0])
        assert f.compose(f.inverse()) == DomainMap.identity(3)
        assert f.compose(f)(0) == 2

    def test_compose_checks_sizes(self):
        with pytest.raises(DomainMismatchError):
            DomainMap.identity(2).compose(DomainMap.identity(3))

    def test_dict_form(self):
        f = DomainMap(3, 2, (0, 1, 1))
        assert DomainMap.from_dict(f.to_dict()) == f
        assert f.is_surjective() and not f.is_injective()


class TestInducedSubstructure:
    def test_three_vertices_of_a_pentagon(self, c5):
        assert induced_substructure(c5, [0, 1, 2]) == path(3)
        assert induced_substructure(c5, [0, 2]) == empty_graph(2)

    def test_relabels_in_increasing_order(self):
        s = Structure.binary(4, [(3, 1), (1, 1)])
        assert induced_substructure(s, [3, 1]) == Structure.binary(2, [(1, 0), (0, 0)])

    def test_rejects_bad_vertex_sets(self, c5):
        with pytest.raises(InvalidStructureError):
            induced_substructure(c5, [])
        with pytest.raises(DomainMismatchError):
            induced_substructure(c5, [5])
