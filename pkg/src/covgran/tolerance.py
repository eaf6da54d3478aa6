"""Tolerance spaces: classes, maximal blocks, kernels, reconstruction.

A tolerance is a reflexive symmetric relation. Its class T(x) collects
everything compatible with x; its blocks are the maximal sets of pairwise
compatible elements, i.e. the maximal cliques of the compatibility graph;
the kernel of x is the intersection of all classes containing x. Classes,
blocks and kernels are three coverings induced by the same tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .granulation import granule_profile, induced_tolerance
from .model import Covering, Relation, Subset, SubsetFamily, bits


@dataclass(frozen=True)
class Tolerance:
    """A relation checked to be reflexive and symmetric at construction."""

    relation: Relation

    def __post_init__(self) -> None:
        if not self.relation.is_reflexive():
            raise InputError("a tolerance must be reflexive")
        if not self.relation.is_symmetric():
            raise InputError("a tolerance must be symmetric")

    @classmethod
    def from_covering(cls, covering: SubsetFamily) -> Tolerance:
        return cls(induced_tolerance(covering))

    @classmethod
    def from_pairs(cls, universe, pairs) -> Tolerance:
        return cls(Relation.from_pairs(universe, pairs))

    @property
    def universe(self):
        return self.relation.universe

    def class_mask(self, i: int) -> int:
        return self.relation.successors[i]

    def class_of(self, name: str) -> Subset:
        return self.relation.successor(name)


def classes(t: Tolerance) -> Covering:
    """The covering of all classes {T(x)}; also the star system of blocks(t)."""
    return Covering(t.universe, t.relation.successors)


def _maximal_cliques(adjacency: tuple[int, ...], full: int) -> list[int]:
    # Bron-Kerbosch with pivoting on bitmask candidate sets. Loops never
    # appear in `adjacency`; candidates are iterated in index order, so the
    # search tree (hence the result set) is deterministic.
    found: list[int] = []

    def expand(clique: int, candidates: int, excluded: int) -> None:
        if candidates == 0 and excluded == 0:
            found.append(clique)
            return
        pool = candidates | excluded
        pivot = -1
        best = -1
        for u in bits(pool):
            gain = (candidates & adjacency[u]).bit_count()
            if gain > best:
                best = gain
                pivot = u
        for v in bits(candidates & ~adjacency[pivot]):
            vbit = 1 << v
            expand(clique | vbit, candidates & adjacency[v], excluded & adjacency[v])
            candidates &= ~vbit
            excluded |= vbit

    expand(0, full, 0)
    return found


def blocks(t: Tolerance) -> Covering:
    """The covering of maximal blocks (maximal cliques of the tolerance)."""
    u = t.universe
    adjacency = tuple(
        mask & ~(1 << i) for i, mask in enumerate(t.relation.successors)
    )
    return Covering(u, tuple(_maximal_cliques(adjacency, u.full_mask)))


def kernel(t: Tolerance, name: str) -> Subset:
    """Intersection of all classes containing the element.

    Computed from classes; :func:`kernel_via_blocks` takes the block route,
    and their agreement is a verified property rather than an assumption.
    """
    u = t.universe
    i = u.index(name)
    mask = u.full_mask
    for class_mask in t.relation.successors:
        if class_mask >> i & 1:
            mask &= class_mask
    return Subset(u, mask)


def kernel_via_blocks(t: Tolerance, name: str) -> Subset:
    """Intersection of all maximal blocks containing the element."""
    u = t.universe
    i = u.index(name)
    mask = u.full_mask
    for block_mask in blocks(t).masks:
        if block_mask >> i & 1:
            mask &= block_mask
    return Subset(u, mask)


def kernel_system(t: Tolerance) -> Covering:
    """The covering of all kernels; the point closure system of both the
    class covering and the block covering."""
    u = t.universe
    return Covering(u, granule_profile(classes(t)).downs)


def cheng_condition(t: Tolerance) -> bool:
    """True iff every compatible pair lies jointly inside some kernel.

    This quantified condition is checked directly; its equivalence with the
    tolerance being recoverable from its kernel system is verified
    exhaustively elsewhere, never assumed here.
    """
    kernels = kernel_system_masks(t)
    for a, class_mask in enumerate(t.relation.successors):
        for b in bits(class_mask):
            abit = 1 << a
            bbit = 1 << b
            if not any(k & abit and k & bbit for k in kernels):
                return False
    return True


def kernel_system_masks(t: Tolerance) -> tuple[int, ...]:
    """Kernel mask per element, in element order (not deduplicated)."""
    return granule_profile(classes(t)).downs
