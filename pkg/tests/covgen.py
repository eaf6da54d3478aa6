"""Hypothesis strategies for random model values."""

from hypothesis import strategies as st

from covgran import Covering, Relation, SubsetFamily, Universe


@st.composite
def universes(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return Universe.numbered(n)


@st.composite
def coverings(draw, max_n=5):
    u = draw(universes(max_n))
    full = u.full_mask
    masks = draw(
        st.sets(st.integers(min_value=1, max_value=full), min_size=1, max_size=6)
    )
    union = 0
    for m in masks:
        union |= m
    if union != full:
        masks = set(masks) | {full}
    return Covering.from_masks(u, masks)


@st.composite
def families(draw, max_n=5):
    u = draw(universes(max_n))
    masks = draw(
        st.sets(st.integers(min_value=0, max_value=u.full_mask), max_size=6)
    )
    return SubsetFamily.from_masks(u, masks)


def _subset(draw, universe):
    from covgran import Subset

    mask = draw(st.integers(min_value=0, max_value=universe.full_mask))
    return Subset(universe, mask)


@st.composite
def covering_and_subset(draw, max_n=5):
    cov = draw(coverings(max_n))
    return cov, _subset(draw, cov.universe)


@st.composite
def relations(draw, max_n=5):
    u = draw(universes(max_n))
    succ = tuple(
        draw(st.integers(min_value=0, max_value=u.full_mask)) for _ in range(u.n)
    )
    return Relation(u, succ)


@st.composite
def relation_and_subset(draw, max_n=5):
    rel = draw(relations(max_n))
    return rel, _subset(draw, rel.universe)


@st.composite
def partitions(draw, max_n=6):
    u = draw(universes(max_n))
    groups: dict[int, int] = {}
    for i in range(u.n):
        label = draw(st.integers(min_value=0, max_value=u.n - 1))
        groups[label] = groups.get(label, 0) | (1 << i)
    return Covering.from_masks(u, groups.values())
