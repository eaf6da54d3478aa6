"""Axiom checking and covering reconstruction for upper-operator tables.

Two families of axioms apply to a candidate upper approximation operator H.
The additive family:

    1H  H of the empty set is empty
    2H  H is extensive
    3H  H distributes over unions
    4H  membership between singletons is symmetric: y in H({x}) iff x in H({y})
    5H  every singleton edge lies inside a common kernel, where the kernel
        of u is the intersection of the singleton rows containing u

and the closure family H1-H4, where H1-H3 coincide with 1H-3H and H4 is
idempotence. Tables passing 1H-4H are exactly the first-kind covering upper
operators, 1H-5H the second kind, and H1-H4 both the third and the fourth
kind (same axioms, generally different coverings). ``reconstruct`` builds a
covering witnessing each case; the round trip reproduces the table exactly.

Finite universes let 3H be decided on two-set unions plus singleton
decompositions, which this checker quantifies over completely; both are
equivalent to additivity over arbitrary index families here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .approx import OperatorKind
from .errors import AxiomPreconditionError, InputError
from .model import Covering, OperatorTable, Relation, Subset, bits
from .tolerance import Tolerance, blocks


def _fmt(table: OperatorTable, mask: int) -> str:
    return str(Subset(table.universe, mask))


@dataclass(frozen=True)
class AxiomReport:
    """Exhaustive axiom flags for one table, with one witness per failure."""

    empty_fixed: bool          # 1H / H1
    extensive: bool            # 2H / H2
    additive: bool             # 3H / H3
    singleton_symmetric: bool  # 4H
    kernel_witnessed: bool     # 5H
    idempotent: bool           # H4
    witnesses: dict[str, str] = field(default_factory=dict)

    def flags(self) -> dict[str, bool]:
        return {
            "1H": self.empty_fixed,
            "2H": self.extensive,
            "3H": self.additive,
            "4H": self.singleton_symmetric,
            "5H": self.kernel_witnessed,
            "H1": self.empty_fixed,
            "H2": self.extensive,
            "H3": self.additive,
            "H4": self.idempotent,
        }

    @property
    def first_kind(self) -> bool:
        return self.empty_fixed and self.extensive and self.additive and self.singleton_symmetric

    @property
    def second_kind(self) -> bool:
        return self.first_kind and self.kernel_witnessed

    @property
    def closure_kind(self) -> bool:
        """The axiom set shared by the third and the fourth kind."""
        return self.empty_fixed and self.extensive and self.additive and self.idempotent


def table_kernels(table: OperatorTable) -> tuple[int, ...]:
    """Per-element kernels read off the singleton rows: the kernel of u is
    the intersection of the rows containing u (the whole universe if none)."""
    u = table.universe
    kernels = []
    for c in range(u.n):
        mask = u.full_mask
        for z in range(u.n):
            row = table.singleton_row(z)
            if row >> c & 1:
                mask &= row
        kernels.append(mask)
    return tuple(kernels)


def check_axioms(table: OperatorTable) -> AxiomReport:
    """Check 1H-5H and H4, quantifying over every subset, pair and element."""
    u = table.universe
    n = u.n
    out = table.outputs
    size = len(out)
    witnesses: dict[str, str] = {}

    empty_fixed = out[0] == 0
    if not empty_fixed:
        witnesses["1H"] = f"H({{}}) = {_fmt(table, out[0])}"

    extensive = True
    for m in range(size):
        if m & ~out[m]:
            extensive = False
            witnesses["2H"] = f"H({_fmt(table, m)}) = {_fmt(table, out[m])} loses members"
            break

    additive = True
    for a in range(size):
        for b in range(size):
            if out[a | b] != out[a] | out[b]:
                additive = False
                witnesses["3H"] = (
                    f"H({_fmt(table, a)} | {_fmt(table, b)}) = {_fmt(table, out[a | b])}"
                    f" but the row union is {_fmt(table, out[a] | out[b])}"
                )
                break
        if not additive:
            break
    if additive:
        for m in range(size):
            combined = 0
            for i in bits(m):
                combined |= out[1 << i]
            if out[m] != combined:
                additive = False
                witnesses["3H"] = (
                    f"H({_fmt(table, m)}) = {_fmt(table, out[m])} but its singleton"
                    f" decomposition gives {_fmt(table, combined)}"
                )
                break

    singleton_symmetric = True
    for i in range(n):
        for j in bits(table.singleton_row(i)):
            if not table.singleton_row(j) >> i & 1:
                singleton_symmetric = False
                witnesses["4H"] = (
                    f"{u.name(j)} in H({{{u.name(i)}}}) but"
                    f" {u.name(i)} not in H({{{u.name(j)}}})"
                )
                break
        if not singleton_symmetric:
            break

    kernels = table_kernels(table)
    kernel_witnessed = True
    for i in range(n):
        for j in bits(table.singleton_row(i)):
            if not any(k >> i & 1 and k >> j & 1 for k in kernels):
                kernel_witnessed = False
                witnesses["5H"] = (
                    f"no kernel contains both {u.name(i)} and {u.name(j)}"
                    f" although {u.name(j)} in H({{{u.name(i)}}})"
                )
                break
        if not kernel_witnessed:
            break

    idempotent = True
    for m in range(size):
        if out[out[m]] != out[m]:
            idempotent = False
            witnesses["H4"] = (
                f"H(H({_fmt(table, m)})) = {_fmt(table, out[out[m]])}"
                f" differs from H({_fmt(table, m)}) = {_fmt(table, out[m])}"
            )
            break

    return AxiomReport(
        empty_fixed,
        extensive,
        additive,
        singleton_symmetric,
        kernel_witnessed,
        idempotent,
        witnesses,
    )


_REQUIRED: dict[OperatorKind, tuple[str, ...]] = {
    OperatorKind.FIRST: ("1H", "2H", "3H", "4H"),
    OperatorKind.SECOND: ("1H", "2H", "3H", "4H", "5H"),
    OperatorKind.THIRD: ("H1", "H2", "H3", "H4"),
    OperatorKind.FOURTH: ("H1", "H2", "H3", "H4"),
}


def required_axioms(kind: OperatorKind) -> tuple[str, ...]:
    return _REQUIRED[kind]


def _require(kind: OperatorKind, report: AxiomReport) -> None:
    flags = report.flags()
    missing = [tag for tag in _REQUIRED[kind] if not flags[tag]]
    if missing:
        raise AxiomPreconditionError(
            f"table fails {', '.join(missing)}, required for the"
            f" {kind.value}-kind reconstruction"
        )


def reconstruct(
    kind: OperatorKind, table: OperatorTable, *, alternative: bool = False
) -> Covering:
    """Build a covering whose upper operator of the given kind reproduces the
    table exactly.

    Canonical choices: for the first and second kinds, the maximal blocks of
    the tolerance read off the singleton rows; for the third, the family of
    singleton rows; for the fourth, the complements of the proper fixed
    points. The reconstruction is deliberately not unique: ``alternative``
    switches the first kind to the family of related pairs {x, y} and the
    second kind to the family of singleton rows, for differential testing.
    """
    report = check_axioms(table)
    _require(kind, report)
    u = table.universe

    if kind in (OperatorKind.FIRST, OperatorKind.SECOND):
        rows = tuple(table.singleton_row(i) for i in range(u.n))
        if alternative:
            if kind is OperatorKind.FIRST:
                pair_masks = {
                    (1 << i) | (1 << j) for i in range(u.n) for j in bits(rows[i])
                }
                return Covering(u, tuple(pair_masks))
            return Covering(u, rows)
        return blocks(Tolerance(Relation(u, rows)))

    if alternative:
        raise InputError(
            f"no alternative reconstruction for the {kind.value} kind"
        )
    if kind is OperatorKind.THIRD:
        return Covering(u, tuple(table.singleton_row(i) for i in range(u.n)))
    # Fourth kind: complements of the fixed points other than the universe
    # itself. The empty set is always fixed (1H), so the full block is in.
    full = u.full_mask
    fixed_complements = tuple(
        full ^ m for m, out in enumerate(table.outputs) if out == m and m != full
    )
    return Covering(u, fixed_complements)
