"""Finite-universe set algebra over named elements.

Element names map to dense bit positions in declaration order. Subsets are
immutable bitmasks over those positions, families are canonically ordered
tuples of block masks, relations are per-element successor masks, and
operator tables are total maps over the power set. Every value is immutable
and hashable, every operation is a pure function, and rendered output always
uses element names, never indices.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

from .errors import InputError

# Set algebra stays cheap up to here; operator tables store 2**n rows and
# therefore get a much tighter bound.
MAX_UNIVERSE_SIZE = 24
MAX_TABLE_UNIVERSE_SIZE = 5


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Universe:
    """Ordered finite set of distinct element names."""

    elements: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise InputError("a universe needs at least one element")
        if len(elems) > MAX_UNIVERSE_SIZE:
            raise InputError(
                f"universe capacity is {MAX_UNIVERSE_SIZE} elements, got {len(elems)}"
            )
        index: dict[str, int] = {}
        for i, name in enumerate(elems):
            if not isinstance(name, str) or not name:
                raise InputError("element names must be nonempty strings")
            if name in index:
                raise InputError(f"duplicate element name {name!r}")
            index[name] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, *names: str) -> Universe:
        return cls(tuple(names))

    @classmethod
    def numbered(cls, n: int) -> Universe:
        """The universe named "1".."n", canonical for enumeration."""
        return cls(tuple(str(i + 1) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown element {name!r}") from None

    def name(self, i: int) -> str:
        return self.elements[i]

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    def singleton(self, name: str) -> Subset:
        return Subset(self, 1 << self.index(name))

    def subset(self, names: Iterable[str] = ()) -> Subset:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return Subset(self, mask)

    def subsets(self) -> Iterator[Subset]:
        """All 2**n subsets, ascending by mask."""
        for mask in range(1 << self.n):
            yield Subset(self, mask)

    def __repr__(self) -> str:
        return f"Universe({', '.join(self.elements)})"


def _same_universe(a: Universe, b: Universe) -> None:
    if a != b:
        raise InputError("operands live on different universes")


@dataclass(frozen=True)
class Subset:
    """Membership mask over a universe."""

    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.mask <= self.universe.full_mask:
            raise InputError("subset mask out of range for its universe")

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.universe.index(name) & 1)

    def __iter__(self) -> Iterator[str]:
        for i in bits(self.mask):
            yield self.universe.elements[i]

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def names(self) -> tuple[str, ...]:
        return tuple(self)

    def union(self, other: Subset) -> Subset:
        _same_universe(self.universe, other.universe)
        return Subset(self.universe, self.mask | other.mask)

    def intersection(self, other: Subset) -> Subset:
        _same_universe(self.universe, other.universe)
        return Subset(self.universe, self.mask & other.mask)

    def difference(self, other: Subset) -> Subset:
        _same_universe(self.universe, other.universe)
        return Subset(self.universe, self.mask & ~other.mask)

    def complement(self) -> Subset:
        return Subset(self.universe, self.universe.full_mask ^ self.mask)

    def issubset(self, other: Subset) -> bool:
        _same_universe(self.universe, other.universe)
        return self.mask & ~other.mask == 0

    def issuperset(self, other: Subset) -> bool:
        return other.issubset(self)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def __lt__(self, other: Subset) -> bool:
        return self.issubset(other) and self.mask != other.mask

    def __str__(self) -> str:
        return "{" + ",".join(self) + "}"

    def __repr__(self) -> str:
        return f"Subset({self})"


@dataclass(frozen=True, eq=False)
class SubsetFamily:
    """Finite family of subsets, deduplicated and ordered by mask value.

    Blocks may be empty here; only :class:`Covering` forbids that. Equality
    ignores the concrete class, so a covering compares equal to the plain
    family with the same blocks.
    """

    universe: Universe
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted(set(self.masks)))
        object.__setattr__(self, "masks", canon)
        full = self.universe.full_mask
        for m in canon:
            if not 0 <= m <= full:
                raise InputError("block mask out of range for its universe")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsetFamily):
            return NotImplemented
        return self.universe == other.universe and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.universe, self.masks))

    @classmethod
    def from_masks(cls, universe: Universe, masks: Iterable[int]) -> SubsetFamily:
        return cls(universe, tuple(masks))

    @classmethod
    def from_subsets(cls, universe: Universe, subsets: Iterable[Subset]) -> SubsetFamily:
        masks = []
        for s in subsets:
            _same_universe(universe, s.universe)
            masks.append(s.mask)
        return cls(universe, tuple(masks))

    @classmethod
    def from_names(
        cls, universe: Universe, blocks: Iterable[Iterable[str]]
    ) -> SubsetFamily:
        return cls(universe, tuple(universe.subset(b).mask for b in blocks))

    @property
    def blocks(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, m) for m in self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, block: Subset) -> bool:
        return block.universe == self.universe and block.mask in self.masks

    def union(self) -> Subset:
        mask = 0
        for m in self.masks:
            mask |= m
        return Subset(self.universe, mask)

    def intersection(self) -> Subset:
        """Intersection of all blocks; the empty family meets in the whole universe."""
        mask = self.universe.full_mask
        for m in self.masks:
            mask &= m
        return Subset(self.universe, mask)

    def __str__(self) -> str:
        return "{" + ", ".join(str(b) for b in self.blocks) + "}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


@dataclass(frozen=True, eq=False, repr=False)
class Covering(SubsetFamily):
    """Family of nonempty blocks whose union is the whole universe."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(m == 0 for m in self.masks):
            raise InputError("covering blocks must be nonempty")
        if self.union().mask != self.universe.full_mask:
            raise InputError("covering blocks must union to the whole universe")


def family_complement(family: SubsetFamily) -> SubsetFamily:
    """The family of blockwise complements; an involution on families."""
    full = family.universe.full_mask
    return SubsetFamily(family.universe, tuple(full ^ m for m in family.masks))


def is_covering(family: SubsetFamily) -> bool:
    """True iff every block is nonempty and the blocks union to the universe."""
    return (
        all(m != 0 for m in family.masks)
        and family.union().mask == family.universe.full_mask
    )


def refines(alpha: SubsetFamily, beta: SubsetFamily) -> bool:
    """True iff alpha refines beta: every block of alpha fits inside some block
    of beta. Reflexive and transitive, but not antisymmetric."""
    _same_universe(alpha.universe, beta.universe)
    return all(any(a & ~b == 0 for b in beta.masks) for a in alpha.masks)


@dataclass(frozen=True)
class Relation:
    """Binary relation stored as per-element successor masks:
    ``successors[i]`` holds every j with element_i related to element_j."""

    universe: Universe
    successors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.successors) != self.universe.n:
            raise InputError("relation needs one successor mask per element")
        full = self.universe.full_mask
        for m in self.successors:
            if not 0 <= m <= full:
                raise InputError("successor mask out of range for its universe")

    @classmethod
    def from_pairs(
        cls, universe: Universe, pairs: Iterable[tuple[str, str]]
    ) -> Relation:
        succ = [0] * universe.n
        for a, b in pairs:
            succ[universe.index(a)] |= 1 << universe.index(b)
        return cls(universe, tuple(succ))

    @classmethod
    def identity(cls, universe: Universe) -> Relation:
        return cls(universe, tuple(1 << i for i in range(universe.n)))

    def successor_mask(self, i: int) -> int:
        return self.successors[i]

    def successor(self, name: str) -> Subset:
        return Subset(self.universe, self.successors[self.universe.index(name)])

    def pairs(self) -> Iterator[tuple[str, str]]:
        """Related pairs as names, ordered by (source, target) index."""
        elems = self.universe.elements
        for i, mask in enumerate(self.successors):
            for j in bits(mask):
                yield elems[i], elems[j]

    def holds(self, a: str, b: str) -> bool:
        return bool(self.successors[self.universe.index(a)] >> self.universe.index(b) & 1)

    def inverse(self) -> Relation:
        inv = [0] * self.universe.n
        for i, mask in enumerate(self.successors):
            for j in bits(mask):
                inv[j] |= 1 << i
        return Relation(self.universe, tuple(inv))

    def is_reflexive(self) -> bool:
        return all(m >> i & 1 for i, m in enumerate(self.successors))

    def is_symmetric(self) -> bool:
        return self == self.inverse()

    def is_transitive(self) -> bool:
        return all(
            self.successors[j] & ~mask == 0
            for i, mask in enumerate(self.successors)
            for j in bits(mask)
        )

    def __str__(self) -> str:
        return "{" + ", ".join(f"({a},{b})" for a, b in self.pairs()) + "}"


@dataclass(frozen=True)
class OperatorTable:
    """Total map from every subset of the universe to a subset, stored as
    ``outputs[input_mask] = output_mask``. The honest representation for
    axiom checks that quantify over the whole power set, which is why the
    universe is capped at ``MAX_TABLE_UNIVERSE_SIZE`` elements."""

    universe: Universe
    outputs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.universe.n
        if n > MAX_TABLE_UNIVERSE_SIZE:
            raise InputError(
                f"operator tables support at most {MAX_TABLE_UNIVERSE_SIZE} elements, got {n}"
            )
        if len(self.outputs) != 1 << n:
            raise InputError("operator table must assign an output to all 2**n inputs")
        full = self.universe.full_mask
        for m in self.outputs:
            if not 0 <= m <= full:
                raise InputError("output mask out of range for its universe")

    @classmethod
    def from_function(
        cls, universe: Universe, fn: Callable[[Subset], Subset]
    ) -> OperatorTable:
        """Materialize a subset-to-subset function into a total table."""
        outputs = []
        for x in universe.subsets():
            y = fn(x)
            _same_universe(universe, y.universe)
            outputs.append(y.mask)
        return cls(universe, tuple(outputs))

    @classmethod
    def identity(cls, universe: Universe) -> OperatorTable:
        return cls(universe, tuple(range(1 << universe.n)))

    def apply_mask(self, mask: int) -> int:
        return self.outputs[mask]

    def apply(self, x: Subset) -> Subset:
        _same_universe(self.universe, x.universe)
        return Subset(self.universe, self.outputs[x.mask])

    def singleton_row(self, i: int) -> int:
        """Output mask for the singleton input {element_i}."""
        return self.outputs[1 << i]

    def rows(self) -> Iterator[tuple[Subset, Subset]]:
        for mask, out in enumerate(self.outputs):
            yield Subset(self.universe, mask), Subset(self.universe, out)
