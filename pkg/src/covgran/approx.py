"""Rough approximation operators over relations and coverings.

The relation-based pair: the upper approximation keeps the points whose
successor set meets X, the lower keeps those whose successor set fits inside
X. The four covering-based pairs instantiate this with the four relations a
covering induces:

    first    tolerance of the covering (successors = stars)
    second   tolerance of the point closure system
    third    specialization preorder (successors = up granules)
    fourth   inverse preorder (successors = down granules)

``covering_upper``/``covering_lower`` compute through those relational forms.
``literal_upper``/``literal_lower`` evaluate the defining union/quantifier
formulas directly, kept as an independent oracle path; their agreement with
the relational path is verified by the test suite and the claim registry
rather than assumed. The literal lower formula of the third kind is taken as
the complement dual of the literal upper formula, which is also its up-set
characterization.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .closure import cl_from_relation, int_from_relation
from .errors import InputError
from .granulation import granule_profile, induced_tolerance, point_closure_system, specialization_preorder
from .model import Relation, Subset, SubsetFamily, _same_universe, bits


class OperatorKind(Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"
    FOURTH = "fourth"

    @classmethod
    def from_string(cls, label: str) -> OperatorKind:
        try:
            return cls(label)
        except ValueError:
            raise InputError(f"unknown operator kind {label!r}") from None


def rel_upper(relation: Relation, x: Subset) -> Subset:
    """Points whose successor set meets X."""
    _same_universe(relation.universe, x.universe)
    mask = 0
    for i, succ in enumerate(relation.successors):
        if succ & x.mask:
            mask |= 1 << i
    return Subset(relation.universe, mask)


def rel_lower(relation: Relation, x: Subset) -> Subset:
    """Points whose successor set stays inside X; dual of rel_upper."""
    _same_universe(relation.universe, x.universe)
    mask = 0
    for i, succ in enumerate(relation.successors):
        if succ & ~x.mask == 0:
            mask |= 1 << i
    return Subset(relation.universe, mask)


@lru_cache(maxsize=8192)
def kind_relation(kind: OperatorKind, covering: SubsetFamily) -> Relation:
    """The relation whose rough pair realizes the given operator kind."""
    if kind is OperatorKind.FIRST:
        return induced_tolerance(covering)
    if kind is OperatorKind.SECOND:
        return induced_tolerance(point_closure_system(covering))
    if kind is OperatorKind.THIRD:
        return specialization_preorder(covering)
    return specialization_preorder(covering).inverse()


def covering_upper(kind: OperatorKind, covering: SubsetFamily, x: Subset) -> Subset:
    _same_universe(covering.universe, x.universe)
    return rel_upper(kind_relation(kind, covering), x)


def covering_lower(kind: OperatorKind, covering: SubsetFamily, x: Subset) -> Subset:
    _same_universe(covering.universe, x.universe)
    return rel_lower(kind_relation(kind, covering), x)


def literal_upper(kind: OperatorKind, covering: SubsetFamily, x: Subset) -> Subset:
    """The defining formula of the upper operator, evaluated literally."""
    _same_universe(covering.universe, x.universe)
    u = covering.universe
    downs = granule_profile(covering).downs
    mask = 0
    if kind is OperatorKind.FIRST:
        # union of the blocks meeting X
        for m in covering.masks:
            if m & x.mask:
                mask |= m
    elif kind is OperatorKind.SECOND:
        # union of the down granules meeting X
        for d in downs:
            if d & x.mask:
                mask |= d
    elif kind is OperatorKind.THIRD:
        # union of the down granules of the members of X
        for i in bits(x.mask):
            mask |= downs[i]
    else:
        # points whose down granule meets X
        for i, d in enumerate(downs):
            if d & x.mask:
                mask |= 1 << i
    return Subset(u, mask)


def literal_lower(kind: OperatorKind, covering: SubsetFamily, x: Subset) -> Subset:
    """The defining formula of the lower operator, evaluated literally."""
    _same_universe(covering.universe, x.universe)
    u = covering.universe
    downs = granule_profile(covering).downs
    mask = 0
    if kind is OperatorKind.FIRST:
        # points all of whose blocks stay inside X
        for i in range(u.n):
            if all(m & ~x.mask == 0 for m in covering.masks if m >> i & 1):
                mask |= 1 << i
    elif kind is OperatorKind.SECOND:
        # points all of whose covering down granules stay inside X
        for i in range(u.n):
            if all(d & ~x.mask == 0 for d in downs if d >> i & 1):
                mask |= 1 << i
    elif kind is OperatorKind.THIRD:
        # complement dual of the third literal upper formula
        return literal_upper(kind, covering, x.complement()).complement()
    else:
        # points whose down granule stays inside X
        for i, d in enumerate(downs):
            if d & ~x.mask == 0:
                mask |= 1 << i
    return Subset(u, mask)


def upper_via_closure(kind: OperatorKind, covering: SubsetFamily, x: Subset) -> Subset:
    """The same operator through the closure-operator route; all four kind
    relations are reflexive, so closure and upper approximation coincide."""
    return cl_from_relation(kind_relation(kind, covering), x)


def lower_via_interior(kind: OperatorKind, covering: SubsetFamily, x: Subset) -> Subset:
    return int_from_relation(kind_relation(kind, covering), x)
