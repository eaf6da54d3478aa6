"""Approximation operators: frozen example values, equality of the literal
and relational computation routes, duality, and the cross-kind identities."""

import pytest
from hypothesis import given, settings

from covgran import (
    Covering,
    OperatorKind,
    Universe,
    covering_lower,
    covering_upper,
    induced_tolerance,
    literal_lower,
    literal_upper,
    point_closure_system,
    rel_lower,
    rel_upper,
)
from covgen import covering_and_subset, partitions

import reference

FIRST, SECOND, THIRD, FOURTH = (
    OperatorKind.FIRST,
    OperatorKind.SECOND,
    OperatorKind.THIRD,
    OperatorKind.FOURTH,
)


class TestRelationalPair:
    def test_upper_examples(self, beta0, u3):
        t = induced_tolerance(beta0)
        assert str(rel_upper(t, u3.subset(["1"]))) == "{1,3}"
        assert rel_upper(t, u3.empty()).is_empty
        from covgran import Relation

        x = u3.subset(["2", "3"])
        assert rel_upper(Relation.identity(u3), x) == x

    def test_lower_examples(self, beta0, u3):
        t = induced_tolerance(beta0)
        assert str(rel_lower(t, u3.subset(["1", "3"]))) == "{1}"
        assert rel_lower(t, u3.full()) == u3.full()
        from covgran import Relation

        x = u3.subset(["1"])
        assert rel_lower(Relation.identity(u3), x) == x

    def test_against_reference(self, beta0, u3):
        t = induced_tolerance(beta0)
        for x in u3.subsets():
            succ = lambda name: set(t.successor(name))  # noqa: E731
            assert set(rel_upper(t, x)) == reference.ref_rel_upper(
                succ, u3.elements, set(x)
            )
            assert set(rel_lower(t, x)) == reference.ref_rel_lower(
                succ, u3.elements, set(x)
            )


class TestUpperExamples:
    @pytest.mark.parametrize(
        "kind,xs,expected",
        [
            (FIRST, ["1"], "{1,3}"),
            (SECOND, ["1"], "{1,3}"),
            (THIRD, ["3"], "{3}"),
            (FOURTH, ["3"], "{1,2,3}"),
            (FOURTH, ["1"], "{1}"),
        ],
    )
    def test_shared_element_example(self, beta0, u3, kind, xs, expected):
        assert str(covering_upper(kind, beta0, u3.subset(xs))) == expected

    @pytest.mark.parametrize("kind", list(OperatorKind))
    def test_singleton_partition_is_identity(self, partition3, u3, kind):
        for x in u3.subsets():
            assert covering_upper(kind, partition3, x) == x


class TestLowerExamples:
    @pytest.mark.parametrize(
        "kind,xs,expected",
        [
            (FIRST, ["1", "3"], "{1}"),
            (FOURTH, ["1", "3"], "{1,3}"),
            (THIRD, ["1"], "{1}"),
        ],
    )
    def test_shared_element_example(self, beta0, u3, kind, xs, expected):
        assert str(covering_lower(kind, beta0, u3.subset(xs))) == expected

    @pytest.mark.parametrize("kind", list(OperatorKind))
    def test_singleton_partition_is_identity(self, partition3, u3, kind):
        for x in u3.subsets():
            assert covering_lower(kind, partition3, x) == x


def test_literal_route_exhaustively_small():
    """Literal defining formulas against the relational route, over every
    covering of a two-element universe and every subset."""
    names = ["1", "2"]
    u = Universe.of(*names)
    seen = 0
    for fam in reference.all_coverings(names):
        cov = Covering.from_names(u, [sorted(b) for b in fam])
        for kind in OperatorKind:
            for x in u.subsets():
                assert covering_upper(kind, cov, x) == literal_upper(kind, cov, x)
                assert covering_lower(kind, cov, x) == literal_lower(kind, cov, x)
        seen += 1
    assert seen == 5


@given(covering_and_subset())
@settings(max_examples=150)
def test_literal_matches_relational(cov_x):
    cov, x = cov_x
    for kind in OperatorKind:
        assert covering_upper(kind, cov, x) == literal_upper(kind, cov, x)
        assert covering_lower(kind, cov, x) == literal_lower(kind, cov, x)


@given(covering_and_subset())
@settings(max_examples=150)
def test_duality(cov_x):
    cov, x = cov_x
    for kind in OperatorKind:
        assert covering_lower(kind, cov, x) == (
            covering_upper(kind, cov, x.complement()).complement()
        )


@given(covering_and_subset())
@settings(max_examples=100)
def test_second_kind_is_first_on_point_closures(cov_x):
    cov, x = cov_x
    assert covering_upper(SECOND, cov, x) == covering_upper(
        FIRST, point_closure_system(cov), x
    )


@given(covering_and_subset())
@settings(max_examples=100)
def test_third_fourth_idempotent(cov_x):
    cov, x = cov_x
    for kind in (THIRD, FOURTH):
        h = covering_upper(kind, cov, x)
        assert covering_upper(kind, cov, h) == h


def test_first_kind_need_not_be_idempotent(beta0, u3):
    x = u3.subset(["1"])
    once = covering_upper(FIRST, beta0, x)
    assert covering_upper(FIRST, beta0, once) != once


@given(covering_and_subset())
@settings(max_examples=100)
def test_adjunction(cov_x):
    cov, x = cov_x
    u = cov.universe
    for y in u.subsets():
        left = covering_upper(THIRD, cov, x) <= y
        right = x <= covering_lower(FOURTH, cov, y)
        assert left == right


@given(partitions())
def test_partitions_collapse_all_kinds(cov):
    """On a partition all four pairs coincide with the equivalence pair."""
    u = cov.universe
    for x in u.subsets():
        values = {
            (kind, str(covering_upper(kind, cov, x)), str(covering_lower(kind, cov, x)))
            for kind in OperatorKind
        }
        uppers = {v[1] for v in values}
        lowers = {v[2] for v in values}
        assert len(uppers) == 1 and len(lowers) == 1
