import pytest
from hypothesis import given, strategies as st

from covgran import (
    Covering,
    InputError,
    OperatorTable,
    Relation,
    Subset,
    SubsetFamily,
    Universe,
    family_complement,
    is_covering,
    refines,
)
from covgen import coverings, families, relations

import reference


class TestUniverse:
    def test_basic(self, u3):
        assert u3.n == 3
        assert u3.index("2") == 1
        assert u3.name(2) == "3"
        assert u3.full_mask == 0b111

    def test_rejects_duplicates(self):
        with pytest.raises(InputError):
            Universe.of("a", "a")

    def test_rejects_empty(self):
        with pytest.raises(InputError):
            Universe(())

    def test_rejects_oversize(self):
        with pytest.raises(InputError):
            Universe.numbered(25)

    def test_unknown_element(self, u3):
        with pytest.raises(InputError):
            u3.index("9")


class TestSubset:
    def test_algebra(self, u3):
        a = u3.subset(["1", "3"])
        b = u3.subset(["2", "3"])
        assert str(a | b) == "{1,2,3}"
        assert str(a & b) == "{3}"
        assert str(a - b) == "{1}"
        assert str(a.complement()) == "{2}"
        assert a <= u3.full()
        assert "1" in a and "2" not in a
        assert len(a) == 2
        assert list(a) == ["1", "3"]

    def test_mask_bounds(self, u3):
        with pytest.raises(InputError):
            Subset(u3, 8)

    def test_universe_mismatch(self, u3, u4):
        with pytest.raises(InputError):
            u3.full().union(u4.full())

    @given(st.integers(min_value=0, max_value=31), st.integers(min_value=0, max_value=31))
    def test_de_morgan(self, m1, m2):
        u = Universe.numbered(5)
        a, b = Subset(u, m1), Subset(u, m2)
        assert (a | b).complement() == a.complement() & b.complement()
        assert a.complement().complement() == a


class TestFamilyComplement:
    def test_shared_element_example(self, beta0, u3):
        assert family_complement(beta0) == SubsetFamily.from_names(
            u3, [["2"], ["1"], ["1", "2"]]
        )

    def test_whole_universe_block(self, u3):
        fam = SubsetFamily.from_names(u3, [["1", "2", "3"]])
        assert family_complement(fam) == SubsetFamily.from_names(u3, [[]])

    def test_partition(self, partition3, u3):
        assert family_complement(partition3) == SubsetFamily.from_names(
            u3, [["2", "3"], ["1", "3"], ["1", "2"]]
        )

    @given(families())
    def test_involution(self, fam):
        assert family_complement(family_complement(fam)) == fam


class TestIsCovering:
    def test_examples(self, beta0, u3):
        assert is_covering(beta0)
        assert not is_covering(family_complement(beta0))
        assert not is_covering(SubsetFamily.from_names(u3, [[], ["1", "2", "3"]]))

    def test_constructor_enforces(self, u3):
        with pytest.raises(InputError):
            Covering.from_names(u3, [["1"], ["2"]])
        with pytest.raises(InputError):
            Covering.from_names(u3, [[], ["1", "2", "3"]])


class TestCanonicalization:
    def test_order_and_duplicates_ignored(self, u3):
        a = Covering.from_names(u3, [["1", "3"], ["2", "3"], ["3"], ["1", "3"]])
        b = Covering.from_names(u3, [["3"], ["2", "3"], ["1", "3"]])
        assert a == b
        assert hash(a) == hash(b)
        assert len(a) == 3

    def test_covering_equals_plain_family(self, beta0, u3):
        assert beta0 == SubsetFamily.from_masks(u3, beta0.masks)


class TestRefines:
    def test_examples(self, beta0, u3):
        from covgran import point_closure_system

        assert refines(point_closure_system(beta0), beta0)
        assert refines(beta0, beta0)
        alpha = Covering.from_names(Universe.of("1", "2"), [["1"], ["1", "2"]])
        beta = Covering.from_names(Universe.of("1", "2"), [["1", "2"]])
        assert refines(alpha, beta) and refines(beta, alpha) and alpha != beta

    def test_preorder_exhaustively(self):
        covers = [
            Covering.from_names(Universe.of("1", "2"), [sorted(b) for b in fam])
            for fam in reference.all_coverings(["1", "2"])
        ]
        assert len(covers) == 5
        for a in covers:
            assert refines(a, a)
            for b in covers:
                for c in covers:
                    if refines(a, b) and refines(b, c):
                        assert refines(a, c)

    def test_universe_mismatch(self, beta0, cycle4):
        with pytest.raises(InputError):
            refines(beta0, cycle4)


class TestRelation:
    def test_pairs_roundtrip(self, u3):
        rel = Relation.from_pairs(u3, [("1", "3"), ("3", "2"), ("1", "1")])
        assert list(rel.pairs()) == [("1", "1"), ("1", "3"), ("3", "2")]
        assert rel.holds("1", "3") and not rel.holds("3", "1")

    def test_predicates(self, u3):
        ident = Relation.identity(u3)
        assert ident.is_reflexive() and ident.is_symmetric() and ident.is_transitive()
        chain = Relation.from_pairs(u3, [("1", "2"), ("2", "3")])
        assert not chain.is_reflexive()
        assert not chain.is_symmetric()
        assert not chain.is_transitive()

    @given(relations())
    def test_inverse_involution(self, rel):
        assert rel.inverse().inverse() == rel

    @given(relations())
    def test_inverse_swaps_pairs(self, rel):
        assert sorted(rel.inverse().pairs()) == sorted(
            (b, a) for a, b in rel.pairs()
        )


class TestOperatorTable:
    def test_identity(self, u3):
        table = OperatorTable.identity(u3)
        x = u3.subset(["1", "3"])
        assert table.apply(x) == x

    def test_requires_totality(self, u3):
        with pytest.raises(InputError):
            OperatorTable(u3, (0,) * 7)

    def test_size_cap(self):
        with pytest.raises(InputError):
            OperatorTable.identity(Universe.numbered(6))

    def test_from_function(self, u3):
        table = OperatorTable.from_function(u3, lambda x: x.complement())
        assert table.apply(u3.empty()) == u3.full()


@given(coverings())
def test_random_coverings_are_coverings(cov):
    assert is_covering(cov)
