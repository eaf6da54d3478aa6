"""Granules carved out of a block family, and the worlds they form.

Three granules matter for an element x of a covered universe: the *star*
(union of all blocks containing x, the coarse granule), the *down granule*
or point closure (intersection of those blocks, the fine granule), and the
*up granule* or core (point closure of x with respect to the complemented
family). Collecting a granule over all elements yields an induced covering:
the star system, the point closure system, and the core system.

Two relations characterize these worlds. The specialization preorder holds
between x and y when every block containing y also contains x, making the
successor set of x exactly its up granule and the predecessor set its down
granule. The induced tolerance relates two elements when some block contains
both, making the successor set of x its star.

Conventions: a union over no blocks is empty, an intersection over no blocks
is the whole universe. The second convention is what makes the up granule
the principal up-set of the preorder even when no complement block contains
the element. "Down/up granule" here is covering vocabulary; it is distinct
from the topological neighbourhood used in :mod:`covgran.closure`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError
from .model import Covering, Relation, Subset, SubsetFamily, bits


@dataclass(frozen=True)
class GranuleProfile:
    """Per-element granule masks of one family, computed once and shared."""

    family: SubsetFamily
    stars: tuple[int, ...]
    downs: tuple[int, ...]
    ups: tuple[int, ...]

    def blocks_containing(self, name: str) -> SubsetFamily:
        i = self.family.universe.index(name)
        return SubsetFamily(
            self.family.universe,
            tuple(m for m in self.family.masks if m >> i & 1),
        )


@lru_cache(maxsize=8192)
def granule_profile(family: SubsetFamily) -> GranuleProfile:
    universe = family.universe
    n = universe.n
    full = universe.full_mask
    stars = [0] * n
    downs = [full] * n
    ups = [full] * n
    for m in family.masks:
        comp = full ^ m
        for i in bits(m):
            stars[i] |= m
            downs[i] &= m
        for i in bits(comp):
            ups[i] &= comp
    return GranuleProfile(family, tuple(stars), tuple(downs), tuple(ups))


def star(family: SubsetFamily, name: str) -> Subset:
    """Union of the blocks containing the element."""
    prof = granule_profile(family)
    return Subset(family.universe, prof.stars[family.universe.index(name)])


def point_closure(family: SubsetFamily, name: str) -> Subset:
    """Intersection of the blocks containing the element (its down granule)."""
    prof = granule_profile(family)
    return Subset(family.universe, prof.downs[family.universe.index(name)])


def core(family: SubsetFamily, name: str) -> Subset:
    """Point closure of the element with respect to the complemented family
    (its up granule); equals {y : x below y} in the specialization preorder."""
    prof = granule_profile(family)
    return Subset(family.universe, prof.ups[family.universe.index(name)])


def star_system(family: SubsetFamily) -> Covering:
    """The covering of all stars. Requires the family itself to cover."""
    prof = granule_profile(family)
    if 0 in prof.stars:
        raise InputError("star system exists only for families that cover")
    return Covering(family.universe, prof.stars)


def point_closure_system(family: SubsetFamily) -> Covering:
    """The covering of all down granules; idempotent as a transformation."""
    prof = granule_profile(family)
    return Covering(family.universe, prof.downs)


def core_system(family: SubsetFamily) -> Covering:
    """The covering of all up granules; equals the point closure system of
    the complemented family."""
    prof = granule_profile(family)
    return Covering(family.universe, prof.ups)


@lru_cache(maxsize=8192)
def specialization_preorder(family: SubsetFamily) -> Relation:
    """The reflexive transitive relation with x related to y iff every block
    containing y contains x. Successor sets are up granules; the inverse
    relation's successor sets are down granules."""
    prof = granule_profile(family)
    return Relation(family.universe, prof.ups)


@lru_cache(maxsize=8192)
def induced_tolerance(family: SubsetFamily) -> Relation:
    """The relation pairing elements that share a block; over a covering it
    is reflexive and symmetric and its successor sets are stars."""
    prof = granule_profile(family)
    return Relation(family.universe, prof.stars)
